//! Pointwise physics: Poincaré invariants, Lagrangian and Hamiltonian
//! densities, the constitutive relation and its order-α² inverse, and the
//! Riemann-Silberstein map. All functions are pure; natural units throughout.

use num_complex::Complex;

pub type Vec3 = [f64; 3];
pub type CVec3 = [Complex<f64>; 3];

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn axpy(s: f64, v: Vec3, w: Vec3) -> Vec3 {
    [s * v[0] + w[0], s * v[1] + w[1], s * v[2] + w[2]]
}

/// Fine-structure constant and electron mass; the derived quartic coupling is
/// `lambda = 2 alpha^2 / (45 m^4)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coupling {
    pub alpha: f64,
    pub m: f64,
}

pub const PHYSICAL_ALPHA: f64 = 1.0 / 137.035999;

impl Coupling {
    pub fn new(alpha: f64, m: f64) -> Self {
        assert!(m > 0.0, "electron mass must be positive");
        assert!(alpha >= 0.0, "alpha must be non-negative");
        Self { alpha, m }
    }

    pub fn physical() -> Self {
        Self::new(PHYSICAL_ALPHA, 1.0)
    }

    pub fn classical() -> Self {
        Self::new(0.0, 1.0)
    }

    pub fn lambda(&self) -> f64 {
        2.0 * self.alpha * self.alpha / (45.0 * self.m.powi(4))
    }

    /// alpha^2 / m^4, the prefactor unit of the constitutive corrections.
    fn a2m4(&self) -> f64 {
        self.alpha * self.alpha / self.m.powi(4)
    }
}

/// The two Poincaré invariants of the field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Invariants {
    /// (E^2 - B^2) / 2
    pub s: f64,
    /// E . B
    pub p: f64,
}

/// Real field sample, canonical variables D and B.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldSample {
    pub d: Vec3,
    pub b: Vec3,
}

pub fn invariants(e: Vec3, b: Vec3) -> Invariants {
    Invariants {
        s: 0.5 * (dot(e, e) - dot(b, b)),
        p: dot(e, b),
    }
}

/// Effective Lagrangian density: S + lambda (4 S^2 + 7 P^2).
pub fn lagrangian_density(e: Vec3, b: Vec3, c: &Coupling) -> f64 {
    let Invariants { s, p } = invariants(e, b);
    s + c.lambda() * (4.0 * s * s + 7.0 * p * p)
}

/// Constitutive map D(E, B) = [1 + (16 a2m4/45) S] E + (28 a2m4/45) P B.
pub fn constitutive_d(e: Vec3, b: Vec3, c: &Coupling) -> Vec3 {
    let Invariants { s, p } = invariants(e, b);
    let u = c.a2m4() / 45.0;
    axpy(28.0 * u * p, b, axpy(16.0 * u * s, e, e))
}

/// Inverse constitutive map to order alpha^2 (the Hamiltonian derivative
/// E = dH/dD): E = [1 + alpha^2 K] D + alpha^2 M B with
/// K = -(16/45 m^4) S_D, M = -(28/45 m^4)(D . B), S_D = (D^2 - B^2)/2.
pub fn inverse_constitutive_e(d: Vec3, b: Vec3, c: &Coupling) -> Vec3 {
    let u = 1.0 / (45.0 * c.m.powi(4));
    let k = -8.0 * u * (dot(d, d) - dot(b, b));
    let m = -28.0 * u * dot(d, b);
    let a2 = c.alpha * c.alpha;
    axpy(a2 * m, b, axpy(a2 * k, d, d))
}

/// Hamiltonian density
/// H = (D^2 + B^2)/2 - lambda (D^2 - B^2)^2 - (7 lambda / 2) (D . B)^2.
pub fn hamiltonian_density(d: Vec3, b: Vec3, c: &Coupling) -> f64 {
    let d2 = dot(d, d);
    let b2 = dot(b, b);
    let db = dot(d, b);
    let u = c.a2m4() / 45.0;
    0.5 * (d2 + b2) - 2.0 * u * (d2 - b2) * (d2 - b2) - 14.0 * u * db * db
}

/// Riemann-Silberstein map: F± = (D ± iB)/sqrt(2). For real inputs F- is the
/// componentwise conjugate of F+.
pub fn to_riemann_silberstein(d: Vec3, b: Vec3) -> (CVec3, CVec3) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut fp = [Complex::new(0.0, 0.0); 3];
    let mut fm = fp;
    for k in 0..3 {
        fp[k] = Complex::new(s * d[k], s * b[k]);
        fm[k] = fp[k].conj();
    }
    (fp, fm)
}

/// Unconjugated square F+ . F+; equals S + iP built from (D, B).
pub fn rs_squared(fp: CVec3) -> Complex<f64> {
    fp[0] * fp[0] + fp[1] * fp[1] + fp[2] * fp[2]
}
