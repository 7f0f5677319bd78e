//! Python bindings: closed-form solutions, pointwise field physics and grid
//! vortex tracking, exposed as the `ehvort` extension module.

use num_complex::Complex;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ehvort_core::field;
use ehvort_core::solutions::{
    classical_ring_locus, mutate_correction, quantum_correction, verify_report_classical,
    verify_report_for, AnalyticSolution, NumericSolution, SolutionCase, SolutionParams,
};
use ehvort_core::vortex::{frames_to_json, track, GridSpec};

fn parse_case(name: &str) -> PyResult<SolutionCase> {
    match name {
        "ring-a" | "ring_a" | "a" => Ok(SolutionCase::RingA),
        "pair-b" | "pair_b" | "b" => Ok(SolutionCase::PairB),
        other => Err(PyValueError::new_err(format!(
            "unknown case '{other}', want 'ring-a' or 'pair-b'"
        ))),
    }
}

fn build_params(case: &str, alpha: Option<f64>, coupling_scale: f64) -> PyResult<SolutionParams> {
    let mut p = parse_case(case).map(SolutionParams::new)?;
    if let Some(a) = alpha {
        if a < 0.0 {
            return Err(PyValueError::new_err("alpha must be non-negative"));
        }
        p = p.with_alpha(a);
    }
    Ok(p.with_coupling_scale(coupling_scale))
}

/// One closed-form solution, compiled for fast pointwise evaluation.
#[pyclass]
struct Solution {
    numeric: NumericSolution,
    case: String,
    classical: bool,
}

#[pymethods]
impl Solution {
    #[new]
    #[pyo3(signature = (case, classical=false, alpha=None, coupling_scale=1.0))]
    fn new(
        case: &str,
        classical: bool,
        alpha: Option<f64>,
        coupling_scale: f64,
    ) -> PyResult<Self> {
        let params = build_params(case, alpha, coupling_scale)?;
        let sol = if classical {
            AnalyticSolution::classical(params)
        } else {
            AnalyticSolution::quantum(params)
        };
        Ok(Self {
            numeric: sol.compile(),
            case: case.to_string(),
            classical,
        })
    }

    /// Complex Riemann-Silberstein vector F+ at a point and time.
    fn fplus(&self, point: [f64; 3], t: f64) -> [Complex<f64>; 3] {
        self.numeric.eval_fplus(point, t)
    }

    /// The tracked complex scalar F+ . F+.
    fn f2(&self, point: [f64; 3], t: f64) -> Complex<f64> {
        self.numeric.f2(point, t)
    }

    /// Real canonical fields (D, B).
    fn db(&self, point: [f64; 3], t: f64) -> ([f64; 3], [f64; 3]) {
        self.numeric.eval_db(point, t)
    }

    /// Track vortex lines over `times` on a cubic grid; returns the JSON
    /// document also produced by the command-line tool.
    #[pyo3(signature = (times, grid=64, lo=-4.0, hi=4.0, refine=false))]
    fn track_json(
        &self,
        times: Vec<f64>,
        grid: usize,
        lo: f64,
        hi: f64,
        refine: bool,
    ) -> PyResult<String> {
        if hi <= lo || grid < 2 {
            return Err(PyValueError::new_err("bad grid configuration"));
        }
        let spec = GridSpec::cube(lo, hi, grid);
        let frames = track(spec, &times, |p, t| self.numeric.f2(p, t), refine);
        let config = serde_json::json!({
            "case": self.case,
            "classical": self.classical,
            "grid": spec,
        });
        Ok(frames_to_json(&frames, &config))
    }

    fn __repr__(&self) -> String {
        format!(
            "Solution(case='{}', classical={})",
            self.case,
            if self.classical { "True" } else { "False" }
        )
    }
}

/// Exact symbolic verification; returns (report, passed).
#[pyfunction]
#[pyo3(signature = (case, classical=false, mutate=None))]
fn verify(case: &str, classical: bool, mutate: Option<(String, i64, i64)>) -> PyResult<(String, bool)> {
    let params = parse_case(case).map(SolutionParams::new)?;
    if classical {
        if mutate.is_some() {
            return Err(PyValueError::new_err(
                "mutate applies to the quantum correction",
            ));
        }
        return verify_report_classical(&params)
            .map_err(|e| PyValueError::new_err(e.to_string()));
    }
    let mut corr = quantum_correction(&params);
    if let Some((target, num, den)) = mutate {
        if den == 0 {
            return Err(PyValueError::new_err("zero denominator"));
        }
        corr = mutate_correction(&corr, &target, ehvort_core::poly::rat(num, den))
            .map_err(PyValueError::new_err)?;
    }
    verify_report_for(&params, &corr).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Radius of the classical ring vortex circle at time t.
#[pyfunction]
fn ring_radius(a: f64, t: f64) -> PyResult<f64> {
    if a <= 0.0 {
        return Err(PyValueError::new_err("a must be positive"));
    }
    Ok(classical_ring_locus(a, t).circle_radius)
}

#[pyfunction]
fn invariants(e: [f64; 3], b: [f64; 3]) -> (f64, f64) {
    let i = field::invariants(e, b);
    (i.s, i.p)
}

#[pyfunction]
#[pyo3(signature = (e, b, alpha, m=1.0))]
fn lagrangian_density(e: [f64; 3], b: [f64; 3], alpha: f64, m: f64) -> f64 {
    field::lagrangian_density(e, b, &field::Coupling::new(alpha, m))
}

#[pyfunction]
#[pyo3(signature = (e, b, alpha, m=1.0))]
fn constitutive_d(e: [f64; 3], b: [f64; 3], alpha: f64, m: f64) -> [f64; 3] {
    field::constitutive_d(e, b, &field::Coupling::new(alpha, m))
}

#[pyfunction]
#[pyo3(signature = (d, b, alpha, m=1.0))]
fn inverse_constitutive_e(d: [f64; 3], b: [f64; 3], alpha: f64, m: f64) -> [f64; 3] {
    field::inverse_constitutive_e(d, b, &field::Coupling::new(alpha, m))
}

#[pyfunction]
#[pyo3(signature = (d, b, alpha, m=1.0))]
fn hamiltonian_density(d: [f64; 3], b: [f64; 3], alpha: f64, m: f64) -> f64 {
    field::hamiltonian_density(d, b, &field::Coupling::new(alpha, m))
}

#[pymodule]
fn ehvort(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Solution>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(ring_radius, m)?)?;
    m.add_function(wrap_pyfunction!(invariants, m)?)?;
    m.add_function(wrap_pyfunction!(lagrangian_density, m)?)?;
    m.add_function(wrap_pyfunction!(constitutive_d, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_constitutive_e, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian_density, m)?)?;
    m.add("PHYSICAL_ALPHA", field::PHYSICAL_ALPHA)?;
    Ok(())
}
