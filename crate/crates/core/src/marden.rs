//! The cubic with the triangle's vertices as roots, its derivative, and the
//! foci of the Steiner ellipses as the derivative's roots.

use serde::{Deserialize, Serialize};

use crate::plane::{centroid, Complex, Triangle};

/// Relative tolerance (against `scale²`) on `Σv² − Σvᵢvⱼ` below which the
/// triangle is treated as equilateral and the foci collapse to the centroid.
pub const EQUILATERAL_EPS: f64 = 1e-9;

/// `c3 z³ + c2 z² + c1 z + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicPolynomial {
    pub c3: Complex,
    pub c2: Complex,
    pub c1: Complex,
    pub c0: Complex,
}

/// `q2 z² + q1 z + q0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticPolynomial {
    pub q2: Complex,
    pub q1: Complex,
    pub q0: Complex,
}

impl QuadraticPolynomial {
    pub fn eval(&self, z: Complex) -> Complex {
        (self.q2 * z + self.q1) * z + self.q0
    }
}

/// Two foci, `f1` the lexicographically larger by `(re, im)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FociPair {
    pub f1: Complex,
    pub f2: Complex,
    pub coincident: bool,
}

impl FociPair {
    pub fn ordered(a: Complex, b: Complex) -> Self {
        let a_first = a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)).is_ge();
        let (f1, f2) = if a_first { (a, b) } else { (b, a) };
        Self { f1, f2, coincident: false }
    }

    pub fn coincident_at(z: Complex) -> Self {
        Self { f1: z, f2: z, coincident: true }
    }

    pub fn midpoint(&self) -> Complex {
        (self.f1 + self.f2) / 2.0
    }

    pub fn distance(&self) -> f64 {
        (self.f1 - self.f2).norm()
    }

    pub fn as_array(&self) -> [Complex; 2] {
        [self.f1, self.f2]
    }
}

pub fn cubic_from_roots(t: &Triangle) -> CubicPolynomial {
    let [a, b, c] = t.vertices();
    CubicPolynomial {
        c3: Complex::new(1.0, 0.0),
        c2: -(a + b + c),
        c1: a * b + a * c + b * c,
        c0: -(a * b * c),
    }
}

pub fn derivative(p: &CubicPolynomial) -> QuadraticPolynomial {
    QuadraticPolynomial {
        q2: 3.0 * p.c3,
        q1: 2.0 * p.c2,
        q0: p.c1,
    }
}

pub fn eval_quadratic(q: &QuadraticPolynomial, z: Complex) -> Complex {
    q.eval(z)
}

fn pairwise_products(t: &Triangle) -> Complex {
    let [a, b, c] = t.vertices();
    a * b + a * c + b * c
}

/// `v1² + v2² + v3² − (v1v2 + v1v3 + v2v3)`, zero exactly for equilateral triangles.
pub fn equilateral_residual(t: &Triangle) -> Complex {
    let [a, b, c] = t.vertices();
    a * a + b * b + c * c - pairwise_products(t)
}

pub fn is_equilateral(t: &Triangle) -> bool {
    let scale = t.scale();
    equilateral_residual(t).norm() <= EQUILATERAL_EPS * scale * scale
}

/// Half the focal vector, `sqrt(z0² − (v1v2 + v1v3 + v2v3)/3)` on the principal branch.
fn focal_offset(t: &Triangle) -> Complex {
    let z0 = centroid(t);
    (z0 * z0 - pairwise_products(t) / 3.0).sqrt()
}

/// Foci of the Steiner in-ellipse: `z0 ± sqrt(z0² − (v1v2 + v1v3 + v2v3)/3)`.
///
/// Equilateral triangles (see [`is_equilateral`]) return both foci at the
/// centroid with `coincident` set.
pub fn steiner_in_foci(t: &Triangle) -> FociPair {
    let z0 = centroid(t);
    if is_equilateral(t) {
        return FociPair::coincident_at(z0);
    }
    let s = focal_offset(t);
    FociPair::ordered(z0 + s, z0 - s)
}

/// The same foci by the power-sum form
/// `(v1 + v2 + v3 ± sqrt(Σv² − Σvᵢvⱼ)) / 3`.
pub fn steiner_in_foci_power_sums(t: &Triangle) -> FociPair {
    let [a, b, c] = t.vertices();
    let sum = a + b + c;
    if is_equilateral(t) {
        return FociPair::coincident_at(sum / 3.0);
    }
    let d = equilateral_residual(t).sqrt();
    FociPair::ordered((sum + d) / 3.0, (sum - d) / 3.0)
}

/// Foci of the Steiner circum-ellipse: `z0 ∓ 2 sqrt(z0² − (v1v2 + v1v3 + v2v3)/3)`.
pub fn steiner_circum_foci(t: &Triangle) -> FociPair {
    let z0 = centroid(t);
    if is_equilateral(t) {
        return FociPair::coincident_at(z0);
    }
    let s = focal_offset(t);
    FociPair::ordered(z0 - 2.0 * s, z0 + 2.0 * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn tri(p: [(f64, f64); 3]) -> Triangle {
        Triangle::from_pairs(p).unwrap()
    }

    /// Roots of `q` by the textbook quadratic formula, independent of the
    /// centroid form used in the library.
    fn quadratic_roots(q: &QuadraticPolynomial) -> [Complex; 2] {
        let disc = (q.q1 * q.q1 - 4.0 * q.q2 * q.q0).sqrt();
        [(-q.q1 + disc) / (2.0 * q.q2), (-q.q1 - disc) / (2.0 * q.q2)]
    }

    fn same_pair(p: [Complex; 2], q: [Complex; 2], tol: f64) -> bool {
        let direct = (p[0] - q[0]).norm().max((p[1] - q[1]).norm());
        let swapped = (p[0] - q[1]).norm().max((p[1] - q[0]).norm());
        direct.min(swapped) <= tol
    }

    #[test]
    fn cubic_examples() {
        let p = cubic_from_roots(&tri([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)]));
        assert_eq!(p.c3, c(1.0, 0.0));
        assert_eq!(p.c2, c(-6.0, -3.0));
        assert_eq!(p.c1, c(8.0, 12.0));
        assert_eq!(p.c0.norm(), 0.0);

        // (z-1)(z+1)(z-i) = z³ - i z² - z + i
        let p = cubic_from_roots(&tri([(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0)]));
        assert_eq!(p.c2, c(0.0, -1.0));
        assert_eq!(p.c1, c(-1.0, 0.0));
        assert_eq!(p.c0, c(0.0, 1.0));
    }

    #[test]
    fn derivative_examples() {
        let p = cubic_from_roots(&tri([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)]));
        let q = derivative(&p);
        assert_eq!((q.q2, q.q1, q.q0), (c(3.0, 0.0), c(-12.0, -6.0), c(8.0, 12.0)));

        let zero = c(0.0, 0.0);
        let cube = CubicPolynomial { c3: c(1.0, 0.0), c2: zero, c1: zero, c0: zero };
        assert_eq!(derivative(&cube), QuadraticPolynomial { q2: c(3.0, 0.0), q1: zero, q0: zero });

        let p = cubic_from_roots(&tri([(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0)]));
        let q = derivative(&p);
        assert_eq!((q.q2, q.q1, q.q0), (c(3.0, 0.0), c(0.0, -2.0), c(-1.0, 0.0)));
    }

    #[test]
    fn eval_quadratic_examples() {
        let q = QuadraticPolynomial { q2: c(3.0, 0.0), q1: c(-12.0, -6.0), q0: c(8.0, 12.0) };
        let f = c(2.0 + 1.0 / 3f64.sqrt(), 1.0);
        assert!(eval_quadratic(&q, f).norm() <= 1e-12 * 15.0);

        let zero = c(0.0, 0.0);
        let q = QuadraticPolynomial { q2: c(3.0, 0.0), q1: zero, q0: zero };
        assert_eq!(eval_quadratic(&q, zero), zero);

        let q = QuadraticPolynomial { q2: c(1.0, 0.0), q1: zero, q0: c(1.0, 0.0) };
        assert_eq!(eval_quadratic(&q, c(0.0, 1.0)), zero);
    }

    #[test]
    fn general_triangle_foci() {
        let t = tri([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)]);
        let f = steiner_in_foci(&t);
        let s = 1.0 / 3f64.sqrt();
        assert!(!f.coincident);
        assert!((f.f1 - c(2.0 + s, 1.0)).norm() < 1e-14);
        assert!((f.f2 - c(2.0 - s, 1.0)).norm() < 1e-14);

        let q = derivative(&cubic_from_roots(&t));
        assert!(same_pair(f.as_array(), quadratic_roots(&q), 1e-13));
    }

    #[test]
    fn equilateral_foci_coincide() {
        let h = 2.0 * 3f64.sqrt();
        let t = tri([(4.0, 0.0), (-2.0, h), (-2.0, -h)]);
        assert!(is_equilateral(&t));
        let f = steiner_in_foci(&t);
        assert!(f.coincident);
        assert_eq!(f.f1, f.f2);
        assert!(f.f1.norm() < 1e-9);
    }

    #[test]
    fn isosceles_foci_on_symmetry_axis() {
        let t = tri([(0.0, 15.0), (8.0, -2.0), (-8.0, -2.0)]);
        let f = steiner_in_foci(&t);
        assert!(f.f1.re.abs() < 1e-12 && f.f2.re.abs() < 1e-12);
        // radicand -97/9 gives foci i(11 ± √97)/3
        let r = 97f64.sqrt();
        assert!(same_pair(f.as_array(), [c(0.0, (11.0 + r) / 3.0), c(0.0, (11.0 - r) / 3.0)], 1e-12));
        let q = derivative(&cubic_from_roots(&t));
        let scale = t.scale();
        for z in f.as_array() {
            assert!(q.eval(z).norm() <= 1e-9 * scale * scale);
        }
    }

    #[test]
    fn equilateral_predicate_examples() {
        assert!(!is_equilateral(&tri([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)])));
        // residual of the sample is 9 * (1/3) = 3
        let r = equilateral_residual(&tri([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)]));
        assert!((r - c(3.0, 0.0)).norm() < 1e-12);
        assert!(is_equilateral(&tri([(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)])));
    }

    #[test]
    fn circum_foci_are_homothetic_images() {
        let t = tri([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)]);
        let inner = steiner_in_foci(&t);
        let outer = steiner_circum_foci(&t);
        let z0 = centroid(&t);
        let mapped = inner.as_array().map(|f| -2.0 * f + 3.0 * z0);
        assert!(same_pair(outer.as_array(), mapped, 1e-13));
        let s = 2.0 / 3f64.sqrt();
        assert!((outer.f1 - c(2.0 + s, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn ordering_is_lexicographic() {
        let p = FociPair::ordered(c(1.0, 5.0), c(2.0, -5.0));
        assert_eq!(p.f1, c(2.0, -5.0));
        let p = FociPair::ordered(c(1.0, -1.0), c(1.0, 1.0));
        assert_eq!(p.f1, c(1.0, 1.0));
    }
}
