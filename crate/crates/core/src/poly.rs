//! Exact multivariate polynomial algebra over (x, y, z, t) with
//! complex-rational coefficients, plus a formal coupling marker carried as a
//! fifth grading. Floating point enters only at evaluation.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Zero};
use num_complex::Complex;
use num_traits::ToPrimitive;

/// Exact rational scalar.
pub type Rat = BigRational;
/// Exact complex-rational scalar.
pub type CRat = Complex<Rat>;

/// Exponent tuple: (x, y, z, t, coupling-grade).
pub type Exps = [u8; 5];

/// Default cap on the total (x, y, z, t) degree of any stored term.
pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// The four differentiable variables. The coupling marker is a grading, not a
/// variable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("degree cap {cap} exceeded in {op}: produced total degree {deg}")]
    DegreeCap {
        op: &'static str,
        deg: u32,
        cap: u32,
    },
}

/// Build an exact rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an exact complex-rational from integer pairs (re_n/re_d, im_n/im_d).
pub fn crat(re: (i64, i64), im: (i64, i64)) -> CRat {
    Complex::new(rat(re.0, re.1), rat(im.0, im.1))
}

/// Real integer as a complex-rational.
pub fn cint(n: i64) -> CRat {
    crat((n, 1), (0, 1))
}

fn spatial_degree(e: &Exps) -> u32 {
    (e[0] + e[1] + e[2] + e[3]) as u32
}

/// Sparse multivariate polynomial with exact complex-rational coefficients.
///
/// Invariants: no stored zero coefficients; terms keyed (hence canonically
/// ordered) by exponent tuple.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Exps, CRat>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CRat) -> Self {
        let mut p = Self::zero();
        p.insert([0; 5], c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0u8; 5];
        e[v as usize] = 1;
        Self::monomial(e, cint(1))
    }

    pub fn monomial(exps: Exps, coeff: CRat) -> Self {
        let mut p = Self::zero();
        p.insert(exps, coeff);
        p
    }

    fn insert(&mut self, exps: Exps, coeff: CRat) {
        if !coeff.is_zero() {
            self.terms.insert(exps, coeff);
        }
    }

    fn add_term(&mut self, exps: Exps, coeff: CRat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(CRat::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree in (x, y, z, t), ignoring the coupling grade. Zero
    /// polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(spatial_degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &CRat)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert(*e, -c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &CRat) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert(*e, c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.mul_capped(rhs, DEFAULT_DEGREE_CAP)
    }

    /// Exact product of terms: exponents add, coefficients multiply. Errors if
    /// any produced term exceeds `cap` in total (x, y, z, t) degree.
    pub fn mul_capped(&self, rhs: &Self, cap: u32) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0u8; 5];
                for k in 0..5 {
                    e[k] = ea[k] + eb[k];
                }
                let deg = spatial_degree(&e);
                if deg > cap {
                    return Err(PolyError::DegreeCap {
                        op: "mul",
                        deg,
                        cap,
                    });
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Multiply by the formal coupling marker (raises every coupling grade by
    /// one).
    pub fn mul_coupling(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[4] += 1;
            out.insert(e2, c.clone());
        }
        out
    }

    /// Exact partial derivative with respect to one of x, y, z, t.
    pub fn differentiate(&self, v: Var) -> Self {
        let i = v as usize;
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            out.add_term(e2, c.clone() * cint(e[i] as i64));
        }
        out
    }

    /// Conjugate coefficients only; x, y, z, t are treated as real.
    pub fn conj_coeffs(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert(*e, c.conj());
        }
        out
    }

    /// Split into coupling grades: the returned map sends grade k to the part
    /// of the polynomial carrying the k-th power of the coupling marker, with
    /// the marker stripped.
    pub fn coupling_grades(&self) -> BTreeMap<u8, MPoly> {
        let mut out: BTreeMap<u8, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let g = e2[4];
            e2[4] = 0;
            out.entry(g).or_default().insert(e2, c.clone());
        }
        out
    }

    /// Keep only the given coupling grade, marker stripped.
    pub fn coupling_grade(&self, grade: u8) -> MPoly {
        self.coupling_grades().remove(&grade).unwrap_or_default()
    }

    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        Complex::new(
                            c.re.to_f64().expect("rational out of f64 range"),
                            c.im.to_f64().expect("rational out of f64 range"),
                        ),
                        *e,
                    )
                })
                .collect(),
        }
    }

    /// Term-sum evaluation at a real point, with a numeric value substituted
    /// for the coupling marker.
    pub fn eval(&self, point: [f64; 3], t: f64, coupling: f64) -> Complex<f64> {
        self.compile().eval(point, t, coupling)
    }

    /// Exponent/coefficient table, one term per line:
    /// `ex ey ez et eL  re  im` with exact rationals.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            s.push_str(&format!(
                "{} {} {} {} {}  {}  {}\n",
                e[0], e[1], e[2], e[3], e[4], c.re, c.im
            ));
        }
        s
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["x", "y", "z", "t", "L"];
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}{:+}i)", c.re, c.im)?;
            for (k, n) in names.iter().enumerate() {
                match e[k] {
                    0 => {}
                    1 => write!(f, "*{}", n)?,
                    p => write!(f, "*{}^{}", n, p)?,
                }
            }
        }
        Ok(())
    }
}

/// Floating-point form of an [`MPoly`] for fast repeated evaluation.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(Complex<f64>, Exps)>,
}

impl CompiledPoly {
    pub fn eval(&self, point: [f64; 3], t: f64, coupling: f64) -> Complex<f64> {
        let vars = [point[0], point[1], point[2], t, coupling];
        let mut acc = Complex::new(0.0, 0.0);
        for (c, e) in &self.terms {
            let mut m = 1.0_f64;
            for k in 0..5 {
                m *= vars[k].powi(e[k] as i32);
            }
            acc += c * m;
        }
        acc
    }
}

/// A 3-vector of polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VecPoly {
    pub x: MPoly,
    pub y: MPoly,
    pub z: MPoly,
}

impl VecPoly {
    pub fn new(x: MPoly, y: MPoly, z: MPoly) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn components(&self) -> [&MPoly; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn map(&self, f: impl Fn(&MPoly) -> MPoly) -> Self {
        Self::new(f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(self.x.add(&rhs.x), self.y.add(&rhs.y), self.z.add(&rhs.z))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.x.sub(&rhs.x), self.y.sub(&rhs.y), self.z.sub(&rhs.z))
    }

    pub fn scale(&self, s: &CRat) -> Self {
        self.map(|p| p.scale(s))
    }

    pub fn mul_coupling(&self) -> Self {
        self.map(|p| p.mul_coupling())
    }

    pub fn conj_coeffs(&self) -> Self {
        self.map(|p| p.conj_coeffs())
    }

    pub fn coupling_grade(&self, grade: u8) -> Self {
        self.map(|p| p.coupling_grade(grade))
    }

    /// Scalar-polynomial times vector-polynomial.
    pub fn mul_scalar(&self, s: &MPoly) -> Result<Self, PolyError> {
        Ok(Self::new(self.x.mul(s)?, self.y.mul(s)?, self.z.mul(s)?))
    }

    /// Unconjugated dot product.
    pub fn dot(&self, rhs: &Self) -> Result<MPoly, PolyError> {
        let mut acc = self.x.mul(&rhs.x)?;
        acc = acc.add(&self.y.mul(&rhs.y)?);
        acc = acc.add(&self.z.mul(&rhs.z)?);
        Ok(acc)
    }

    pub fn eval(&self, point: [f64; 3], t: f64, coupling: f64) -> [Complex<f64>; 3] {
        [
            self.x.eval(point, t, coupling),
            self.y.eval(point, t, coupling),
            self.z.eval(point, t, coupling),
        ]
    }

    pub fn compile(&self) -> CompiledVecPoly {
        CompiledVecPoly {
            x: self.x.compile(),
            y: self.y.compile(),
            z: self.z.compile(),
        }
    }

    pub fn to_table(&self) -> String {
        format!(
            "[x]\n{}[y]\n{}[z]\n{}",
            self.x.to_table(),
            self.y.to_table(),
            self.z.to_table()
        )
    }
}

/// Floating-point form of a [`VecPoly`].
#[derive(Clone, Debug)]
pub struct CompiledVecPoly {
    pub x: CompiledPoly,
    pub y: CompiledPoly,
    pub z: CompiledPoly,
}

impl CompiledVecPoly {
    pub fn eval(&self, point: [f64; 3], t: f64, coupling: f64) -> [Complex<f64>; 3] {
        [
            self.x.eval(point, t, coupling),
            self.y.eval(point, t, coupling),
            self.z.eval(point, t, coupling),
        ]
    }
}

/// Gradient of a scalar polynomial.
pub fn grad(p: &MPoly) -> VecPoly {
    VecPoly::new(
        p.differentiate(Var::X),
        p.differentiate(Var::Y),
        p.differentiate(Var::Z),
    )
}

/// Exact curl of a vector polynomial.
pub fn curl(v: &VecPoly) -> VecPoly {
    VecPoly::new(
        v.z.differentiate(Var::Y).sub(&v.y.differentiate(Var::Z)),
        v.x.differentiate(Var::Z).sub(&v.z.differentiate(Var::X)),
        v.y.differentiate(Var::X).sub(&v.x.differentiate(Var::Y)),
    )
}

/// Exact divergence of a vector polynomial.
pub fn divergence(v: &VecPoly) -> MPoly {
    v.x.differentiate(Var::X)
        .add(&v.y.differentiate(Var::Y))
        .add(&v.z.differentiate(Var::Z))
}

/// Time derivative, componentwise.
pub fn d_dt(v: &VecPoly) -> VecPoly {
    v.map(|p| p.differentiate(Var::T))
}
