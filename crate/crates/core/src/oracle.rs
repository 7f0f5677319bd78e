//! Independent numerical check of the analytic solutions: evolve the real
//! canonical fields (D, B) under the nonlinear Maxwell equations with
//! 4th-order centered spatial stencils and classical RK4 in time, with a
//! Dirichlet boundary shell clamped to a reference closure.
//!
//! The flux fields are the Hamiltonian derivatives
//! `E_eff = D - 4 L (D^2 - B^2) D - 14 L (D.B) B` and
//! `H_eff = B + 4 L (D^2 - B^2) B - 14 L (D.B) D`,
//! with `dD/dt = curl H_eff`, `dB/dt = -curl E_eff` and `L = 2 a^2 / (45 m^4)`.

use rayon::prelude::*;

use crate::field::Vec3;
use crate::vortex::GridSpec;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("time step {dt} exceeds stability limit {limit} (0.5 * min spacing)")]
    DtTooLarge { dt: f64, limit: f64 },
    #[error("non-finite field value at t = {time}")]
    NonFinite { time: f64 },
    #[error("grid too small: need at least {need} points per axis, have {have}")]
    GridTooSmall { need: usize, have: usize },
}

/// Width of the boundary shell clamped to the reference closure each stage.
pub const CLAMP_MARGIN: usize = 3;

/// Real vector fields D and B sampled on a [`GridSpec`].
#[derive(Clone)]
pub struct GridField {
    pub spec: GridSpec,
    pub d: Vec<Vec3>,
    pub b: Vec<Vec3>,
}

fn npts(spec: &GridSpec) -> [usize; 3] {
    [spec.cells[0] + 1, spec.cells[1] + 1, spec.cells[2] + 1]
}

#[inline]
fn idx(n: &[usize; 3], i: usize, j: usize, k: usize) -> usize {
    (i * n[1] + j) * n[2] + k
}

impl GridField {
    pub fn zeros(spec: GridSpec) -> Self {
        let n = npts(&spec);
        let len = n[0] * n[1] * n[2];
        Self {
            spec,
            d: vec![[0.0; 3]; len],
            b: vec![[0.0; 3]; len],
        }
    }

    /// Sample a reference closure `(point, t) -> (D, B)` over the grid.
    pub fn from_reference<F>(spec: GridSpec, t: f64, f: &F) -> Self
    where
        F: Fn(Vec3, f64) -> (Vec3, Vec3) + Sync,
    {
        let n = npts(&spec);
        let pairs: Vec<(Vec3, Vec3)> = (0..n[0])
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut slab = Vec::with_capacity(n[1] * n[2]);
                for j in 0..n[1] {
                    for k in 0..n[2] {
                        slab.push(f(spec.point(i, j, k), t));
                    }
                }
                slab
            })
            .collect();
        let (d, b) = pairs.into_iter().unzip();
        Self { spec, d, b }
    }

    pub fn is_finite(&self) -> bool {
        self.d
            .iter()
            .chain(self.b.iter())
            .all(|v| v.iter().all(|x| x.is_finite()))
    }
}

/// Nonlinear flux fields at one point.
#[inline]
fn flux(d: Vec3, b: Vec3, lambda: f64) -> (Vec3, Vec3) {
    let d2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    let b2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    let db = d[0] * b[0] + d[1] * b[1] + d[2] * b[2];
    let s = 4.0 * lambda * (d2 - b2);
    let q = 14.0 * lambda * db;
    let mut eeff = [0.0; 3];
    let mut heff = [0.0; 3];
    for c in 0..3 {
        eeff[c] = (1.0 - s) * d[c] - q * b[c];
        heff[c] = (1.0 + s) * b[c] - q * d[c];
    }
    (eeff, heff)
}

/// Time derivative of (D, B): 4th-order centered curl of the flux fields.
/// Points closer than 2 cells to the boundary are left untouched (they sit
/// inside the clamped shell).
fn rhs(f: &GridField, lambda: f64) -> GridField {
    let spec = f.spec;
    let n = npts(&spec);
    let h = spec.spacing();
    let len = n[0] * n[1] * n[2];

    let mut eeff = vec![[0.0f64; 3]; len];
    let mut heff = vec![[0.0f64; 3]; len];
    eeff.par_iter_mut()
        .zip(heff.par_iter_mut())
        .zip(f.d.par_iter().zip(f.b.par_iter()))
        .for_each(|((e, hh), (d, b))| {
            let (ev, hv) = flux(*d, *b, lambda);
            *e = ev;
            *hh = hv;
        });

    let deriv = |g: &Vec<Vec3>, comp: usize, axis: usize, i: usize, j: usize, k: usize| -> f64 {
        let (m2, m1, p1, p2) = match axis {
            0 => (
                idx(&n, i - 2, j, k),
                idx(&n, i - 1, j, k),
                idx(&n, i + 1, j, k),
                idx(&n, i + 2, j, k),
            ),
            1 => (
                idx(&n, i, j - 2, k),
                idx(&n, i, j - 1, k),
                idx(&n, i, j + 1, k),
                idx(&n, i, j + 2, k),
            ),
            _ => (
                idx(&n, i, j, k - 2),
                idx(&n, i, j, k - 1),
                idx(&n, i, j, k + 1),
                idx(&n, i, j, k + 2),
            ),
        };
        (g[m2][comp] - 8.0 * g[m1][comp] + 8.0 * g[p1][comp] - g[p2][comp]) / (12.0 * h[axis])
    };

    let mut out = GridField::zeros(spec);
    let slabs: Vec<(Vec<Vec3>, Vec<Vec3>)> = (0..n[0])
        .into_par_iter()
        .map(|i| {
            let mut dd = vec![[0.0f64; 3]; n[1] * n[2]];
            let mut db = vec![[0.0f64; 3]; n[1] * n[2]];
            if i >= 2 && i + 2 < n[0] {
                for j in 2..n[1] - 2 {
                    for k in 2..n[2] - 2 {
                        let curl_h = [
                            deriv(&heff, 2, 1, i, j, k) - deriv(&heff, 1, 2, i, j, k),
                            deriv(&heff, 0, 2, i, j, k) - deriv(&heff, 2, 0, i, j, k),
                            deriv(&heff, 1, 0, i, j, k) - deriv(&heff, 0, 1, i, j, k),
                        ];
                        let curl_e = [
                            deriv(&eeff, 2, 1, i, j, k) - deriv(&eeff, 1, 2, i, j, k),
                            deriv(&eeff, 0, 2, i, j, k) - deriv(&eeff, 2, 0, i, j, k),
                            deriv(&eeff, 1, 0, i, j, k) - deriv(&eeff, 0, 1, i, j, k),
                        ];
                        dd[j * n[2] + k] = curl_h;
                        db[j * n[2] + k] = [-curl_e[0], -curl_e[1], -curl_e[2]];
                    }
                }
            }
            (dd, db)
        })
        .collect();
    for (i, (dd, db)) in slabs.into_iter().enumerate() {
        let base = i * n[1] * n[2];
        out.d[base..base + dd.len()].copy_from_slice(&dd);
        out.b[base..base + db.len()].copy_from_slice(&db);
    }
    out
}

fn saxpy_state(y: &GridField, s: f64, k: &GridField) -> GridField {
    let mut out = y.clone();
    out.d
        .par_iter_mut()
        .zip(k.d.par_iter())
        .for_each(|(a, b)| {
            for c in 0..3 {
                a[c] += s * b[c];
            }
        });
    out.b
        .par_iter_mut()
        .zip(k.b.par_iter())
        .for_each(|(a, b)| {
            for c in 0..3 {
                a[c] += s * b[c];
            }
        });
    out
}

/// Overwrite the `CLAMP_MARGIN`-cell boundary shell from the reference.
fn clamp_boundary<F>(f: &mut GridField, t: f64, reference: &F)
where
    F: Fn(Vec3, f64) -> (Vec3, Vec3) + Sync,
{
    let spec = f.spec;
    let n = npts(&spec);
    let m = CLAMP_MARGIN;
    let in_shell = |i: usize, nmax: usize| i < m || i + m >= nmax;
    for i in 0..n[0] {
        for j in 0..n[1] {
            for k in 0..n[2] {
                if in_shell(i, n[0]) || in_shell(j, n[1]) || in_shell(k, n[2]) {
                    let (d, b) = reference(spec.point(i, j, k), t);
                    let p = idx(&n, i, j, k);
                    f.d[p] = d;
                    f.b[p] = b;
                }
            }
        }
    }
}

/// Evolve an initial state from `t0` to `t1` with fixed step `dt` (the last
/// step is shortened to land on `t1`). The reference closure supplies both
/// the boundary shell at every RK4 stage and nothing else — the interior is
/// genuinely integrated.
pub fn evolve<F>(
    init: GridField,
    lambda: f64,
    t0: f64,
    t1: f64,
    dt: f64,
    reference: &F,
) -> Result<GridField, OracleError>
where
    F: Fn(Vec3, f64) -> (Vec3, Vec3) + Sync,
{
    let spec = init.spec;
    let n = npts(&spec);
    let need = 2 * CLAMP_MARGIN + 1;
    if let Some(&have) = n.iter().find(|&&x| x < need) {
        return Err(OracleError::GridTooSmall { need, have });
    }
    let h = spec.spacing();
    let limit = 0.5 * h[0].min(h[1]).min(h[2]);
    if dt > limit {
        return Err(OracleError::DtTooLarge { dt, limit });
    }

    let mut y = init;
    let mut t = t0;
    clamp_boundary(&mut y, t, reference);
    while t < t1 - 1e-12 {
        let step = dt.min(t1 - t);
        let k1 = rhs(&y, lambda);
        let mut y2 = saxpy_state(&y, 0.5 * step, &k1);
        clamp_boundary(&mut y2, t + 0.5 * step, reference);
        let k2 = rhs(&y2, lambda);
        let mut y3 = saxpy_state(&y, 0.5 * step, &k2);
        clamp_boundary(&mut y3, t + 0.5 * step, reference);
        let k3 = rhs(&y3, lambda);
        let mut y4 = saxpy_state(&y, step, &k3);
        clamp_boundary(&mut y4, t + step, reference);
        let k4 = rhs(&y4, lambda);
        let mut next = y.clone();
        next.d
            .par_iter_mut()
            .zip(k1.d.par_iter())
            .zip(k2.d.par_iter().zip(k3.d.par_iter()))
            .zip(k4.d.par_iter())
            .for_each(|(((a, k1v), (k2v, k3v)), k4v)| {
                for c in 0..3 {
                    a[c] += step / 6.0 * (k1v[c] + 2.0 * k2v[c] + 2.0 * k3v[c] + k4v[c]);
                }
            });
        next.b
            .par_iter_mut()
            .zip(k1.b.par_iter())
            .zip(k2.b.par_iter().zip(k3.b.par_iter()))
            .zip(k4.b.par_iter())
            .for_each(|(((a, k1v), (k2v, k3v)), k4v)| {
                for c in 0..3 {
                    a[c] += step / 6.0 * (k1v[c] + 2.0 * k2v[c] + 2.0 * k3v[c] + k4v[c]);
                }
            });
        t += step;
        clamp_boundary(&mut next, t, reference);
        if !next.is_finite() {
            return Err(OracleError::NonFinite { time: t });
        }
        y = next;
    }
    Ok(y)
}

/// Max-norm difference over both fields, skipping `margin` cells from each
/// boundary to exclude the clamped shell and its immediate influence.
pub fn max_interior_error(a: &GridField, b: &GridField, margin: usize) -> f64 {
    let n = npts(&a.spec);
    let mut err = 0.0f64;
    for i in margin..n[0] - margin {
        for j in margin..n[1] - margin {
            for k in margin..n[2] - margin {
                let p = idx(&n, i, j, k);
                for c in 0..3 {
                    err = err.max((a.d[p][c] - b.d[p][c]).abs());
                    err = err.max((a.b[p][c] - b.b[p][c]).abs());
                }
            }
        }
    }
    err
}

/// One row of a convergence study.
#[derive(Clone, Copy, Debug)]
pub struct ConvergenceRow {
    pub cells: usize,
    pub dt: f64,
    pub error: f64,
}

pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut s = String::from("cells,dt,max_error,ratio_to_prev\n");
    let mut prev: Option<f64> = None;
    for r in rows {
        let ratio = prev.map(|p| p / r.error).unwrap_or(f64::NAN);
        s.push_str(&format!("{},{},{:.6e},{:.3}\n", r.cells, r.dt, r.error, ratio));
        prev = Some(r.error);
    }
    s
}

/// Exact sinusoidal standing-wave solution of the linear (L = 0) equations:
/// `D = (0, sin(kx) cos(kt), 0)`, `B = (0, 0, -cos(kx) sin(kt))`.
/// Non-polynomial in time, so RK4's O(dt^4) error is measurable on it.
pub fn standing_wave(k: f64) -> impl Fn(Vec3, f64) -> (Vec3, Vec3) + Sync {
    move |p, t| {
        (
            [0.0, (k * p[0]).sin() * (k * t).cos(), 0.0],
            [0.0, 0.0, -(k * p[0]).cos() * (k * t).sin()],
        )
    }
}
