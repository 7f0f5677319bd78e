//! Acceptance suite: one test per release criterion, each printing a single
//! `ACCEPTANCE <name>: PASS|FAIL` line (visible with `--nocapture`).
//!
//! The demonstration coupling used for the pair-birth topology test and the
//! extended tracking window for the ring-collapse test are documented in the
//! relevant tests below.

use ehvort_core::field::{
    constitutive_d, inverse_constitutive_e, lagrangian_density, Coupling,
};
use ehvort_core::oracle::{
    evolve, max_interior_error, standing_wave, GridField, CLAMP_MARGIN,
};
use ehvort_core::solutions::{
    classical_ring_locus, divergence_check, maxwell_residual, quantum_correction,
    AnalyticSolution, SolutionCase, SolutionParams,
};
use ehvort_core::vortex::{sample_scalar_avoiding_zeros, track, winding_summary, FrameReport, GridSpec};
use rand::{Rng, SeedableRng};

fn report(name: &str, pass: bool) {
    println!("ACCEPTANCE {name}: {}", if pass { "PASS" } else { "FAIL" });
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

fn quantum(case: SolutionCase) -> AnalyticSolution {
    AnalyticSolution::quantum(SolutionParams::new(case))
}

fn track_solution(
    sol: &AnalyticSolution,
    spec: GridSpec,
    times: &[f64],
    refine: bool,
) -> Vec<FrameReport> {
    let numeric = sol.compile();
    track(spec, times, |p, t| numeric.f2(p, t), refine)
}

#[test]
fn criterion_1_exact_residual_cancellation() {
    let mut pass = true;
    for case in [SolutionCase::RingA, SolutionCase::PairB] {
        let sol = quantum(case);
        let grades = maxwell_residual(&sol.fplus).expect("residual in degree budget");
        for g in 0..=1u8 {
            let zero = grades.get(&g).map(|v| v.is_zero()).unwrap_or(true);
            if !zero {
                println!("  case {:?}: residual grade {} nonzero", case, g);
            }
            pass &= zero;
        }
    }
    report("exact-residual-cancellation", pass);
    assert!(pass);
}

#[test]
fn criterion_2_initial_condition_and_divergence() {
    let mut pass = true;
    for case in [SolutionCase::RingA, SolutionCase::PairB] {
        let params = SolutionParams::new(case);
        let corr = quantum_correction(&params);
        // every term of the correction carries at least one power of t
        let vanishes_at_t0 = corr
            .components()
            .iter()
            .all(|p| p.terms().all(|(e, _)| e[3] > 0));
        pass &= vanishes_at_t0;
        let sol = AnalyticSolution::quantum(params);
        for (g, ok) in divergence_check(&sol.fplus) {
            if !ok {
                println!("  case {:?}: divergence grade {} nonzero", case, g);
            }
            pass &= ok;
        }
    }
    report("initial-condition-and-divergence", pass);
    assert!(pass);
}

#[test]
fn criterion_3_constitutive_consistency() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260823);
    let mut pass = true;

    // D = dL/dE by central differences, |E|,|B| <= 1, alpha <= 0.1
    let hstep = 1e-5;
    let mut max_fd_err = 0.0f64;
    for _ in 0..50 {
        let e: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-0.57..0.57));
        let b: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-0.57..0.57));
        let alpha = rng.gen_range(0.0..0.1);
        let c = Coupling::new(alpha, 1.0);
        let d = constitutive_d(e, b, &c);
        for k in 0..3 {
            let mut ep = e;
            let mut em = e;
            ep[k] += hstep;
            em[k] -= hstep;
            let fd =
                (lagrangian_density(ep, b, &c) - lagrangian_density(em, b, &c)) / (2.0 * hstep);
            max_fd_err = max_fd_err.max((fd - d[k]).abs());
        }
    }
    if max_fd_err > 1e-6 {
        println!("  finite-difference mismatch {max_fd_err:.3e}");
        pass = false;
    }

    // roundtrip residual scales as alpha^4: halving alpha -> 16x (+-20%)
    let e0 = [0.62, -0.21, 0.44];
    let b0 = [0.12, 0.55, -0.31];
    let resid = |alpha: f64| {
        let c = Coupling::new(alpha, 1.0);
        let back = inverse_constitutive_e(constitutive_d(e0, b0, &c), b0, &c);
        (0..3).map(|k| (back[k] - e0[k]).abs()).fold(0.0, f64::max)
    };
    let ratio = resid(0.1) / resid(0.05);
    if !(16.0 * 0.8..=16.0 * 1.2).contains(&ratio) {
        println!("  alpha-halving ratio {ratio:.2} outside 16 +- 20%");
        pass = false;
    }

    report("constitutive-consistency", pass);
    assert!(pass);
}

#[test]
fn criterion_4_classical_ring_geometry() {
    let spec = GridSpec::cube(-4.0, 4.0, 96);
    let times = linspace(-1.8, 1.5, 12);
    let sol = AnalyticSolution::classical(SolutionParams::new(SolutionCase::RingA));
    let frames = track_solution(&sol, spec, &times, true);
    let h = spec.spacing()[0];
    let tol = (2.0 * h * 3.0f64.sqrt()).max(0.17);
    let mut pass = true;
    for f in &frames {
        let expected = classical_ring_locus(1.0, f.time).circle_radius;
        let ok = f.component_count == 1
            && f.closed_curves() == 1
            && f.open_curves() == 0
            && f
                .principal_curve()
                .map(|c| (c.mean_radius() - expected).abs() <= tol)
                .unwrap_or(false);
        if !ok {
            println!(
                "  t={:.2}: count={} closed={} radius={:.3} expected={:.3}",
                f.time,
                f.component_count,
                f.closed_curves(),
                f.principal_curve().map(|c| c.mean_radius()).unwrap_or(0.0),
                expected
            );
        }
        pass &= ok;
    }
    report("classical-ring-geometry", pass);
    assert!(pass);
}

#[test]
fn criterion_5_classical_pair_birth() {
    let spec = GridSpec::cube(-4.0, 4.0, 96);
    let sol = AnalyticSolution::classical(SolutionParams::new(SolutionCase::PairB));
    let mut pass = true;

    // no vortices anywhere in the gap
    let gap_times = [0.0, 0.25, 0.5, 0.75, 0.9, 0.99];
    for f in track_solution(&sol, spec, &gap_times, false) {
        if f.component_count != 0 {
            println!("  t={:.2}: unexpected component_count={}", f.time, f.component_count);
            pass = false;
        }
    }

    // two planar branches just after birth
    let h = spec.spacing()[0];
    let frames = track_solution(&sol, spec, &[1.1], true);
    let f = &frames[0];
    if f.component_count != 2 {
        println!("  t=1.1: component_count={} (want 2)", f.component_count);
        pass = false;
    }
    for c in &f.curves {
        if c.planarity_rms() > 2.0 * h {
            println!("  t=1.1: planarity {:.3} exceeds {:.3}", c.planarity_rms(), 2.0 * h);
            pass = false;
        }
    }

    report("classical-pair-birth", pass);
    assert!(pass);
}

#[test]
fn criterion_6_quantum_pair_topology_change() {
    // Demonstration coupling: alpha = 0.15 (m = 1, coupling_scale = 1).
    // With the physical alpha the pre-birth hairpin is far below grid
    // resolution on [-4,4]^3; 0.15 is the documented inflation at which the
    // hairpin spans several cells while the field stays single-hairpin.
    const DEMO_ALPHA: f64 = 0.15;
    let spec = GridSpec::cube(-4.0, 4.0, 96);
    let qsol = AnalyticSolution::quantum(
        SolutionParams::new(SolutionCase::PairB).with_alpha(DEMO_ALPHA),
    );
    let csol = AnalyticSolution::classical(SolutionParams::new(SolutionCase::PairB));
    let sweep: Vec<f64> = linspace(0.90, 0.99, 10);
    let qframes = track_solution(&qsol, spec, &sweep, false);
    let cframes = track_solution(&csol, spec, &sweep, false);
    let mut witness = None;
    for (qf, cf) in qframes.iter().zip(&cframes) {
        if qf.component_count == 1
            && qf.open_curves() == 1
            && qf.closed_curves() == 0
            && cf.component_count == 0
        {
            witness = Some(qf.time);
            break;
        }
    }
    let pass = witness.is_some();
    match witness {
        Some(t) => println!("  hairpin resolved at t={t:.2} (demo alpha {DEMO_ALPHA})"),
        None => {
            for qf in &qframes {
                println!(
                    "  t={:.2}: quantum count={} open={}",
                    qf.time,
                    qf.component_count,
                    qf.open_curves()
                );
            }
        }
    }
    report("quantum-pair-topology-change", pass);
    assert!(pass);
}

#[test]
fn criterion_7_quantum_ring_collapse() {
    // With the corrected quantum coefficients and physical alpha, the ring's
    // extraction radius peaks near t ~ 100 but the final disappearance of all
    // components lands near t ~ 302, so the tracked window is extended to
    // [1.5, 304] to make both events observable in one sequence.
    let spec = GridSpec::cube(-100.0, 100.0, 64);
    let sol = quantum(SolutionCase::RingA);
    let times = linspace(1.5, 304.0, 34);
    let frames = track_solution(&sol, spec, &times, false);

    let radii: Vec<f64> = frames
        .iter()
        .map(|f| f.principal_curve().map(|c| c.mean_radius()).unwrap_or(0.0))
        .collect();
    let (imax, rmax) = radii
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();

    let saw_ring = frames.iter().any(|f| f.component_count > 0);
    let ends_empty = frames.last().unwrap().component_count == 0;
    let interior_max = imax > 0 && imax + 1 < frames.len() && rmax.is_finite() && *rmax > 0.0;
    println!(
        "  max radius {:.1} at t={:.1}; final frame t={:.1} count={}",
        rmax,
        frames[imax].time,
        frames.last().unwrap().time,
        frames.last().unwrap().component_count
    );
    let pass = saw_ring && ends_empty && interior_max;
    report("quantum-ring-collapse", pass);
    assert!(pass);
}

#[test]
fn criterion_8_oracle_agreement() {
    let sol = quantum(SolutionCase::RingA);
    let lambda = sol.params.lambda();
    let numeric = sol.compile();
    let reference = move |p: [f64; 3], t: f64| numeric.eval_db(p, t);

    let spec = GridSpec::cube(-2.0, 2.0, 64);
    let init = GridField::from_reference(spec, 0.0, &reference);
    let out = evolve(init, lambda, 0.0, 0.1, 0.01, &reference).expect("stable integration");
    let exact = GridField::from_reference(spec, 0.1, &reference);
    let err = max_interior_error(&out, &exact, 6);
    let mut pass = err <= 1e-4;
    println!("  analytic-field integration error {err:.3e} (bound 1e-4)");

    // On polynomial fields RK4 is near-exact and the spatial floor hides the
    // dt term, so 4th-order convergence in dt is demonstrated by
    // self-comparison on a sinusoidal standing wave (non-polynomial in t),
    // holding the grid fixed so the spatial error cancels.
    let wspec = GridSpec::cube(-1.0, 1.0, 16);
    let wave = standing_wave(std::f64::consts::PI);
    let run = |dt: f64| {
        let init = GridField::from_reference(wspec, 0.0, &wave);
        evolve(init, 0.0, 0.0, 0.6, dt, &wave).unwrap()
    };
    let fine = run(0.00375);
    let e1 = max_interior_error(&run(0.06), &fine, 2 * CLAMP_MARGIN);
    let e2 = max_interior_error(&run(0.03), &fine, 2 * CLAMP_MARGIN);
    let ratio = e1 / e2;
    println!("  dt-halving error ratio {ratio:.1} (want 16 within a factor 2)");
    pass &= (8.0..=32.0).contains(&ratio);

    report("oracle-agreement", pass);
    assert!(pass);
}

#[test]
fn criterion_9_winding_conservation() {
    // representative frames from every tracked configuration; a frame with
    // degenerate cells must lose them when the resolution is doubled
    struct Probe {
        sol: AnalyticSolution,
        half: f64,
        cells: usize,
        times: &'static [f64],
    }
    let probes = [
        Probe {
            sol: AnalyticSolution::classical(SolutionParams::new(SolutionCase::RingA)),
            half: 4.0,
            cells: 48,
            times: &[-1.8, -0.33, 0.0, 1.5],
        },
        Probe {
            sol: AnalyticSolution::classical(SolutionParams::new(SolutionCase::PairB)),
            half: 4.0,
            cells: 48,
            times: &[0.5, 1.02, 1.1],
        },
        Probe {
            sol: AnalyticSolution::quantum(
                SolutionParams::new(SolutionCase::PairB).with_alpha(0.15),
            ),
            half: 4.0,
            cells: 48,
            times: &[0.95, 0.99],
        },
        Probe {
            sol: quantum(SolutionCase::RingA),
            half: 100.0,
            cells: 32,
            times: &[50.0, 100.0, 200.0],
        },
    ];
    let mut pass = true;
    for probe in &probes {
        let numeric = probe.sol.compile();
        for &t in probe.times {
            let mut cells = probe.cells;
            let mut summary;
            loop {
                let spec = GridSpec::cube(-probe.half, probe.half, cells);
                let (grid, _) = sample_scalar_avoiding_zeros(spec, &|p: [f64; 3]| numeric.f2(p, t));
                summary = winding_summary(&grid);
                if !summary.interior_flux_balanced {
                    println!("  t={t}: cells={cells}: flux imbalance outside flagged cells");
                    pass = false;
                    break;
                }
                if summary.degenerate_cells == 0 {
                    break;
                }
                if cells >= 4 * probe.cells {
                    println!(
                        "  t={t}: {} degenerate cells persist at {cells}^3",
                        summary.degenerate_cells
                    );
                    pass = false;
                    break;
                }
                println!(
                    "  t={t}: {} degenerate cells at {cells}^3, doubling",
                    summary.degenerate_cells
                );
                cells *= 2;
            }
        }
    }
    report("winding-conservation", pass);
    assert!(pass);
}
