//! Implicit conics `A x² + B xy + C y² + D x + E y + F = 0` and the
//! five-point fit.
//!
//! Expanding the 6×6 incidence determinant (a generic point `(x, y)` in the
//! first row, the five given points below) along its first row gives each
//! coefficient as a signed 5×5 minor: the minor that drops the monomial's
//! own column, with alternating signs `+ − + − + −` for `A … F`.

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::plane::{check_finite, is_collinear, Complex};

/// Degeneracy threshold on the largest minor, relative to `ρ⁴`.
pub const DEGENERATE_EPS: f64 = 1e-12;

/// Discriminant band treated as a parabola, relative to `max(|A|,|B|,|C|)²`.
pub const CLASSIFY_EPS: f64 = 1e-12;

/// Coefficients below this (after max-normalization) do not fix the sign.
const SIGN_EPS: f64 = 1e-12;

/// Normalized so that the largest magnitude is 1 and the first
/// non-negligible coefficient in `A, B, C, D, E, F` order is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 6]", try_from = "[f64; 6]")]
pub struct ConicCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
}

impl ConicCoefficients {
    /// Normalizes raw coefficients. `None` if all six are zero or any is not finite.
    pub fn normalized(raw: [f64; 6]) -> Option<Self> {
        if raw.iter().any(|v| !v.is_finite()) {
            return None;
        }
        let max = raw.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if max == 0.0 {
            return None;
        }
        let mut scaled = raw.map(|v| v / max);
        if let Some(lead) = scaled.iter().find(|v| v.abs() > SIGN_EPS) {
            if *lead < 0.0 {
                scaled.iter_mut().for_each(|v| *v = -*v);
            }
        }
        // `+ 0.0` folds -0.0 into 0.0
        Some(Self::from_array(scaled.map(|v| v + 0.0)))
    }

    pub fn from_array(v: [f64; 6]) -> Self {
        Self { a: v[0], b: v[1], c: v[2], d: v[3], e: v[4], f: v[5] }
    }

    pub fn to_array(self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    pub fn eval(&self, p: Complex) -> f64 {
        eval_conic(self, p)
    }

    pub fn gradient(&self, p: Complex) -> (f64, f64) {
        conic_gradient(self, p)
    }

    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }

    pub fn classify(&self) -> ConicClass {
        classify(self)
    }
}

impl From<ConicCoefficients> for [f64; 6] {
    fn from(c: ConicCoefficients) -> Self {
        c.to_array()
    }
}

impl TryFrom<[f64; 6]> for ConicCoefficients {
    type Error = &'static str;

    fn try_from(v: [f64; 6]) -> Result<Self, Self::Error> {
        if v.iter().any(|x| !x.is_finite()) {
            return Err("conic coefficients must be finite");
        }
        if v.iter().all(|x| *x == 0.0) {
            return Err("conic coefficients must not all be zero");
        }
        Ok(Self::from_array(v))
    }
}

fn monomials(p: Complex) -> [f64; 6] {
    let (x, y) = (p.re, p.im);
    [x * x, x * y, y * y, x, y, 1.0]
}

/// Determinant by Gaussian elimination with partial pivoting.
pub(crate) fn det5(mut m: [[f64; 5]; 5]) -> f64 {
    let mut det = 1.0;
    for col in 0..5 {
        let pivot = (col..5)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("non-empty range");
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        let pivot_row = m[col];
        for row in m.iter_mut().skip(col + 1) {
            let factor = row[col] / p;
            if factor != 0.0 {
                for (x, y) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x -= factor * y;
                }
            }
        }
    }
    det
}

/// The six signed 5×5 minors for the points, before normalization.
pub fn cofactor_coefficients(points: &[Complex; 5]) -> [f64; 6] {
    let rows = points.map(monomials);
    let mut out = [0.0; 6];
    for (drop, slot) in out.iter_mut().enumerate() {
        let mut minor = [[0.0; 5]; 5];
        for (r, row) in rows.iter().enumerate() {
            let mut k = 0;
            for (j, v) in row.iter().enumerate() {
                if j != drop {
                    minor[r][k] = *v;
                    k += 1;
                }
            }
        }
        let sign = if drop % 2 == 0 { 1.0 } else { -1.0 };
        *slot = sign * det5(minor);
    }
    out
}

/// The conic through five points, no three of them collinear.
pub fn conic_through_five_points(points: [Complex; 5]) -> Result<ConicCoefficients, GeometryError> {
    check_finite(&points)?;
    for i in 0..5 {
        for j in i + 1..5 {
            if points[i] == points[j] {
                return Err(GeometryError::DegeneratePointSet);
            }
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                if is_collinear(points[i], points[j], points[k])? {
                    return Err(GeometryError::CollinearSubset);
                }
            }
        }
    }

    let rho = points.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let raw = cofactor_coefficients(&points);
    let largest = raw.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if largest < DEGENERATE_EPS * rho.powi(4) {
        return Err(GeometryError::DegeneratePointSet);
    }
    ConicCoefficients::normalized(raw).ok_or(GeometryError::DegeneratePointSet)
}

pub fn eval_conic(c: &ConicCoefficients, p: Complex) -> f64 {
    let (x, y) = (p.re, p.im);
    c.a * x * x + c.b * x * y + c.c * y * y + c.d * x + c.e * y + c.f
}

pub fn conic_gradient(c: &ConicCoefficients, p: Complex) -> (f64, f64) {
    let (x, y) = (p.re, p.im);
    (2.0 * c.a * x + c.b * y + c.d, c.b * x + 2.0 * c.c * y + c.e)
}

/// The band is measured against the quadratic part only, so translating
/// the conic away from the origin (which inflates D, E, F) cannot push a
/// thin ellipse into the parabola band.
pub fn classify(c: &ConicCoefficients) -> ConicClass {
    let q = c.a.abs().max(c.b.abs()).max(c.c.abs());
    if q == 0.0 {
        return ConicClass::Parabola;
    }
    let disc = c.discriminant() / (q * q);
    if disc < -CLASSIFY_EPS {
        ConicClass::Ellipse
    } else if disc > CLASSIFY_EPS {
        ConicClass::Hyperbola
    } else {
        ConicClass::Parabola
    }
}
