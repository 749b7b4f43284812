//! Steiner in-ellipse and circum-ellipse of a triangle.
//!
//! The in-ellipse is fixed by its foci (the critical points of the cubic
//! with the vertices as roots) and one side midpoint. Its implicit equation
//! is fitted through the three midpoints plus two of their reflections in
//! the centroid. The circum-ellipse is the image of the in-ellipse under the
//! homothety of ratio −2 about the centroid; its equation is fitted through
//! the vertices plus the images of two reflected midpoints.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::conic::{conic_through_five_points, ConicClass, ConicCoefficients};
use crate::error::GeometryError;
use crate::marden::{steiner_circum_foci, steiner_in_foci, FociPair};
use crate::plane::{
    centroid, homothety, reflected_tangency_points, side_midpoints, Complex, Triangle,
};

/// Ratio of the homothety taking the in-ellipse onto the circum-ellipse.
pub const CIRCUM_RATIO: f64 = -2.0;

/// Foci closer than this (relative to `a`) are drawn as a circle with `theta = 0`.
pub const CIRCLE_EPS: f64 = 1e-9;

/// Slack on `a² − c²` before a point counts as lying on the focal segment.
const FOCAL_SEGMENT_EPS: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipseGeometry {
    pub center: Complex,
    pub f1: Complex,
    pub f2: Complex,
    /// Semi-major axis.
    pub a: f64,
    /// Semi-minor axis.
    pub b: f64,
    /// Direction of the major axis against the x-axis, radians in `(−π/2, π/2]`.
    pub theta: f64,
    /// `c / a` with `c` half the focal distance, equal to `sqrt(a² − b²) / a`.
    pub ecc: f64,
}

impl EllipseGeometry {
    pub fn is_circle(&self) -> bool {
        (self.f1 - self.f2).norm() <= CIRCLE_EPS * self.a
    }

    /// Point at parameter `t` of `center + R(theta) (a cos t, b sin t)`.
    pub fn point_at(&self, t: f64) -> Complex {
        let rot = Complex::from_polar(1.0, self.theta);
        self.center + rot * Complex::new(self.a * t.cos(), self.b * t.sin())
    }

    /// `n` points at evenly spaced parameters over one turn.
    pub fn sample(&self, n: usize) -> Vec<Complex> {
        (0..n).map(|k| self.point_at(2.0 * PI * k as f64 / n as f64)).collect()
    }

    /// Half extents of the axis-aligned bounding box.
    pub fn half_extents(&self) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        let hx = ((self.a * c).powi(2) + (self.b * s).powi(2)).sqrt();
        let hy = ((self.a * s).powi(2) + (self.b * c).powi(2)).sqrt();
        (hx, hy)
    }
}

/// Semi-axes from the foci and one point on the ellipse: `a` is half the
/// focal distance sum, `b² + (|f1 − f2| / 2)² = a²`.
pub fn semi_axes(point_on: Complex, f1: Complex, f2: Complex) -> Result<(f64, f64), GeometryError> {
    crate::plane::check_finite(&[point_on, f1, f2])?;
    let a = 0.5 * ((point_on - f1).norm() + (point_on - f2).norm());
    let c_sq = 0.25 * (f1 - f2).norm_sqr();
    if a * a < c_sq + FOCAL_SEGMENT_EPS {
        return Err(GeometryError::PointInsideFocalSegment);
    }
    Ok((a, (a * a - c_sq).sqrt()))
}

fn fold_angle(theta: f64) -> f64 {
    if theta > FRAC_PI_2 {
        theta - PI
    } else if theta <= -FRAC_PI_2 {
        theta + PI
    } else {
        theta
    }
}

/// The ellipse with the given foci through `point_on`.
pub fn ellipse_geometry(f1: Complex, f2: Complex, point_on: Complex) -> Result<EllipseGeometry, GeometryError> {
    let (a, b) = semi_axes(point_on, f1, f2)?;
    let focal = f1 - f2;
    let theta = if focal.norm() <= CIRCLE_EPS * a {
        0.0
    } else {
        fold_angle(focal.im.atan2(focal.re))
    };
    Ok(EllipseGeometry {
        center: (f1 + f2) / 2.0,
        f1,
        f2,
        a,
        b,
        theta,
        ecc: 0.5 * focal.norm() / a,
    })
}

/// `|Im(conj(v2 − v1)(v3 − v1))| / 2`.
fn triangle_area(t: &Triangle) -> f64 {
    let [v1, v2, v3] = t.vertices();
    0.5 * ((v2 - v1).conj() * (v3 - v1)).im.abs()
}

/// Replaces `b` by `ab / a` for a known product `ab`. For thin ellipses
/// `sqrt(a² − c²)` cancels catastrophically; `a` itself is a sum and stays accurate.
fn with_axis_product(g: EllipseGeometry, ab: f64) -> EllipseGeometry {
    EllipseGeometry { b: (ab / g.a).min(g.a), ..g }
}

/// Ends of the major axis followed by the ends of the minor axis:
/// `center ± a (cos θ, sin θ)`, `center ± b (−sin θ, cos θ)`.
pub fn axis_vertices(g: &EllipseGeometry) -> [Complex; 4] {
    let u = Complex::from_polar(1.0, g.theta);
    let v = Complex::new(-u.im, u.re);
    [g.center + g.a * u, g.center - g.a * u, g.center + g.b * v, g.center - g.b * v]
}

/// Side midpoints and their reflections in the centroid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangencyPoints {
    #[serde(rename = "zE1")]
    pub ze1: Complex,
    #[serde(rename = "zE2")]
    pub ze2: Complex,
    #[serde(rename = "zE3")]
    pub ze3: Complex,
    #[serde(rename = "zE1r")]
    pub ze1r: Complex,
    #[serde(rename = "zE2r")]
    pub ze2r: Complex,
    #[serde(rename = "zE3r")]
    pub ze3r: Complex,
}

impl TangencyPoints {
    pub fn of(t: &Triangle) -> Self {
        let [ze1, ze2, ze3] = side_midpoints(t);
        let [ze1r, ze2r, ze3r] = reflected_tangency_points(t);
        Self { ze1, ze2, ze3, ze1r, ze2r, ze3r }
    }

    pub fn all(&self) -> [Complex; 6] {
        [self.ze1, self.ze2, self.ze3, self.ze1r, self.ze2r, self.ze3r]
    }
}

/// The points the circum-conic is fitted through besides the vertices:
/// the images of `zE1r` and `zE2r` under the ratio −2 homothety.
pub fn circum_extra_points(t: &Triangle) -> [Complex; 2] {
    let z0 = centroid(t);
    let [ze1r, ze2r, _] = reflected_tangency_points(t);
    [homothety(ze1r, z0, CIRCUM_RATIO), homothety(ze2r, z0, CIRCUM_RATIO)]
}

pub fn steiner_in_ellipse(t: &Triangle) -> Result<(ConicCoefficients, EllipseGeometry), GeometryError> {
    let foci = steiner_in_foci(t);
    let p = TangencyPoints::of(t);
    // area π·ab equals π/(3√3) times the triangle's area
    let ab = triangle_area(t) / (3.0 * 3f64.sqrt());
    let geometry = with_axis_product(ellipse_geometry(foci.f1, foci.f2, p.ze1)?, ab);
    let conic = conic_through_five_points([p.ze1, p.ze2, p.ze3, p.ze2r, p.ze3r])?;
    Ok((conic, geometry))
}

pub fn steiner_circum_ellipse(t: &Triangle) -> Result<(ConicCoefficients, EllipseGeometry), GeometryError> {
    let foci = steiner_circum_foci(t);
    let [v1, v2, v3] = t.vertices();
    let [extra4, extra5] = circum_extra_points(t);
    let ab = 4.0 * triangle_area(t) / (3.0 * 3f64.sqrt());
    let geometry = with_axis_product(ellipse_geometry(foci.f1, foci.f2, v1)?, ab);
    let conic = conic_through_five_points([v1, v2, v3, extra4, extra5])?;
    Ok((conic, geometry))
}

/// One row of the result matrix: `(A, B, C, D, E, F, zF1, zF2, a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseRow {
    pub conic: ConicCoefficients,
    pub f1: Complex,
    pub f2: Complex,
    pub a: f64,
    pub b: f64,
}

/// Both Steiner ellipses of a triangle together with the points they were built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteinerReport {
    pub triangle: Triangle,
    pub centroid: Complex,
    pub tangency: TangencyPoints,
    pub circum_points: [Complex; 2],
    pub in_conic: ConicCoefficients,
    pub in_geom: EllipseGeometry,
    pub circ_conic: ConicCoefficients,
    pub circ_geom: EllipseGeometry,
}

pub fn steiner_report(t: &Triangle) -> Result<SteinerReport, GeometryError> {
    let (in_conic, in_geom) = steiner_in_ellipse(t)?;
    let (circ_conic, circ_geom) = steiner_circum_ellipse(t)?;
    Ok(SteinerReport {
        triangle: *t,
        centroid: centroid(t),
        tangency: TangencyPoints::of(t),
        circum_points: circum_extra_points(t),
        in_conic,
        in_geom,
        circ_conic,
        circ_geom,
    })
}

/// Tolerances used by [`SteinerReport::violations`].
pub mod tolerance {
    /// Conic residual, relative to `ρ²`.
    pub const MEMBERSHIP: f64 = 1e-9;
    /// Gradient-side dot product, relative to `‖∇Q‖ |side|`.
    pub const TANGENCY: f64 = 1e-8;
    /// Focal sums, semi-axis ratios, eccentricity and focus positions.
    pub const GEOMETRY: f64 = 1e-9;
    /// Ellipse centers against the centroid, relative to scale.
    pub const CENTER: f64 = 1e-12;
}

impl SteinerReport {
    pub fn rows(&self) -> [EllipseRow; 2] {
        let row = |conic: ConicCoefficients, g: &EllipseGeometry| EllipseRow {
            conic,
            f1: g.f1,
            f2: g.f2,
            a: g.a,
            b: g.b,
        };
        [row(self.in_conic, &self.in_geom), row(self.circ_conic, &self.circ_geom)]
    }

    pub fn in_foci(&self) -> FociPair {
        FociPair {
            f1: self.in_geom.f1,
            f2: self.in_geom.f2,
            coincident: self.in_geom.f1 == self.in_geom.f2,
        }
    }

    /// Checks every structural property both ellipses must satisfy and
    /// returns a description of each one that fails. Empty means valid.
    pub fn violations(&self) -> Vec<String> {
        use tolerance::*;

        let mut out = Vec::new();
        let scale = self.triangle.scale();
        let rho2 = scale * scale;
        let verts = self.triangle.vertices();
        let z0 = centroid(&self.triangle);

        if (self.centroid - z0).norm() > CENTER * scale {
            out.push(format!("stored centroid {} differs from {}", self.centroid, z0));
        }
        let expected = TangencyPoints::of(&self.triangle);
        for (got, want) in self.tangency.all().iter().zip(expected.all()) {
            if (got - want).norm() > CENTER * scale {
                out.push(format!("tangency point {got} differs from {want}"));
            }
        }

        let mut check_ellipse = |name: &str, conic: &ConicCoefficients, g: &EllipseGeometry, on: &[Complex]| {
            if conic.classify() != ConicClass::Ellipse {
                out.push(format!("{name}: conic discriminant {} is not elliptic", conic.discriminant()));
            }
            for p in on {
                let r = conic.eval(*p);
                if r.abs() > MEMBERSHIP * rho2 {
                    out.push(format!("{name}: point {p} off the conic, residual {r:e}"));
                }
                let sum = (p - g.f1).norm() + (p - g.f2).norm();
                if (sum - 2.0 * g.a).abs() > GEOMETRY * 2.0 * g.a {
                    out.push(format!("{name}: focal sum {sum} at {p} differs from 2a = {}", 2.0 * g.a));
                }
            }
            if !(g.a >= g.b && g.b > 0.0) {
                out.push(format!("{name}: axes a = {}, b = {} not ordered and positive", g.a, g.b));
            }
            let c = 0.5 * (g.f1 - g.f2).norm();
            if (g.b * g.b + c * c - g.a * g.a).abs() > GEOMETRY * g.a * g.a {
                out.push(format!("{name}: b² + c² ≠ a²"));
            }
            if (g.center - (g.f1 + g.f2) / 2.0).norm() > CENTER * scale {
                out.push(format!("{name}: center is not the focal midpoint"));
            }
            if (g.center - z0).norm() > CENTER * scale {
                out.push(format!("{name}: center {} is not the centroid {z0}", g.center));
            }
            let ecc_gap = (g.ecc * g.ecc * g.a * g.a - (g.a * g.a - g.b * g.b)).abs();
            if !(0.0..1.0).contains(&g.ecc) || ecc_gap > GEOMETRY * g.a * g.a {
                out.push(format!("{name}: eccentricity {} inconsistent with axes", g.ecc));
            }
            if !(g.theta > -FRAC_PI_2 && g.theta <= FRAC_PI_2) {
                out.push(format!("{name}: theta {} outside (−π/2, π/2]", g.theta));
            }
        };

        check_ellipse("in", &self.in_conic, &self.in_geom, &self.tangency.all());
        let mut circ_on = verts.to_vec();
        circ_on.extend(self.circum_points);
        check_ellipse("circum", &self.circ_conic, &self.circ_geom, &circ_on);

        // tangency to each side at its midpoint
        let sides = [
            (self.tangency.ze1, verts[1] - verts[0]),
            (self.tangency.ze2, verts[2] - verts[0]),
            (self.tangency.ze3, verts[2] - verts[1]),
        ];
        for (mid, dir) in sides {
            let (gx, gy) = self.in_conic.gradient(mid);
            let dot = gx * dir.re + gy * dir.im;
            if dot.abs() > TANGENCY * gx.hypot(gy) * dir.norm() {
                out.push(format!("in: gradient at {mid} not normal to its side (dot {dot:e})"));
            }
        }

        let (ia, ib) = (self.in_geom.a, self.in_geom.b);
        let (ca, cb) = (self.circ_geom.a, self.circ_geom.b);
        if (ca - 2.0 * ia).abs() > GEOMETRY * ca || (cb - 2.0 * ib).abs() > GEOMETRY * cb {
            out.push(format!("circum axes ({ca}, {cb}) are not twice ({ia}, {ib})"));
        }
        if (self.in_geom.ecc - self.circ_geom.ecc).abs() > GEOMETRY {
            out.push("in and circum eccentricities differ".to_string());
        }
        let mapped = [self.in_geom.f1, self.in_geom.f2].map(|f| homothety(f, z0, CIRCUM_RATIO));
        let circ = [self.circ_geom.f1, self.circ_geom.f2];
        let direct = (mapped[0] - circ[0]).norm().max((mapped[1] - circ[1]).norm());
        let swapped = (mapped[0] - circ[1]).norm().max((mapped[1] - circ[0]).norm());
        if direct.min(swapped) > GEOMETRY * scale {
            out.push("circum foci are not the homothetic images of the in foci".to_string());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sample() -> Triangle {
        Triangle::from_pairs([(0.0, 0.0), (4.0, 0.0), (2.0, 3.0)]).unwrap()
    }

    fn equilateral() -> Triangle {
        let h = 2.0 * 3f64.sqrt();
        Triangle::from_pairs([(4.0, 0.0), (-2.0, h), (-2.0, -h)]).unwrap()
    }

    fn assert_coeffs(got: ConicCoefficients, want: [f64; 6], tol: f64) {
        for (g, w) in got.to_array().iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {:?}, want {:?}", got.to_array(), want);
        }
    }

    #[test]
    fn semi_axes_examples() {
        let s = 1.0 / 3f64.sqrt();
        let (a, b) = semi_axes(c(2.0, 0.0), c(2.0 + s, 1.0), c(2.0 - s, 1.0)).unwrap();
        assert!((a - 2.0 / 3f64.sqrt()).abs() < 1e-14);
        assert!((b - 1.0).abs() < 1e-14);

        let (a, b) = semi_axes(c(-2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!((a, b), (2.0, 2.0));

        let (a, b) = semi_axes(c(3.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!((a - 3.0).abs() < 1e-15 && (b - 8f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn point_on_focal_segment_is_rejected() {
        assert_eq!(
            semi_axes(c(0.5, 0.0), c(1.0, 0.0), c(-1.0, 0.0)),
            Err(GeometryError::PointInsideFocalSegment)
        );
        assert_eq!(
            semi_axes(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
            Err(GeometryError::PointInsideFocalSegment)
        );
    }

    #[test]
    fn geometry_examples() {
        let s = 1.0 / 3f64.sqrt();
        let g = ellipse_geometry(c(2.0 + s, 1.0), c(2.0 - s, 1.0), c(2.0, 0.0)).unwrap();
        assert!((g.center - c(2.0, 1.0)).norm() < 1e-15);
        assert_eq!(g.theta, 0.0);
        assert!((g.ecc - 0.5).abs() < 1e-14);

        let g = ellipse_geometry(c(0.0, 0.0), c(0.0, 0.0), c(-2.0, 0.0)).unwrap();
        assert_eq!((g.a, g.b, g.theta, g.ecc), (2.0, 2.0, 0.0, 0.0));

        let g = ellipse_geometry(c(0.0, 1.0), c(0.0, -1.0), c(2f64.sqrt(), 0.0)).unwrap();
        assert!((g.a - 3f64.sqrt()).abs() < 1e-15);
        assert!((g.b - 2f64.sqrt()).abs() < 1e-15);
        assert!((g.theta - FRAC_PI_2).abs() < 1e-15);
        assert!((g.ecc - 1.0 / 3f64.sqrt()).abs() < 1e-15);

        // reversed focus order folds into the same half-open range
        let g = ellipse_geometry(c(0.0, -1.0), c(0.0, 1.0), c(2f64.sqrt(), 0.0)).unwrap();
        assert!((g.theta - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn axis_vertex_examples() {
        let (in_conic, g) = steiner_in_ellipse(&sample()).unwrap();
        let [a1, a2, b1, b2] = axis_vertices(&g);
        let a = 2.0 / 3f64.sqrt();
        assert!((a1 - c(2.0 + a, 1.0)).norm() < 1e-14);
        assert!((a2 - c(2.0 - a, 1.0)).norm() < 1e-14);
        assert!((b1 - c(2.0, 2.0)).norm() < 1e-14);
        assert!((b2 - c(2.0, 0.0)).norm() < 1e-14);
        for p in [a1, a2, b1, b2] {
            assert!(in_conic.eval(p).abs() < 1e-9 * 9.0);
            let sum = (p - g.f1).norm() + (p - g.f2).norm();
            assert!((sum - 2.0 * g.a).abs() < 1e-12);
        }

        let unit = ellipse_geometry(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let v = axis_vertices(&unit);
        let want = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
        for (p, w) in v.iter().zip(want) {
            assert!((p - w).norm() < 1e-15);
        }

        let g = ellipse_geometry(c(1.0, 0.0), c(-1.0, 0.0), c(3.0, 0.0)).unwrap();
        let v = axis_vertices(&g);
        let r8 = 8f64.sqrt();
        let want = [c(3.0, 0.0), c(-3.0, 0.0), c(0.0, r8), c(0.0, -r8)];
        for (p, w) in v.iter().zip(want) {
            assert!((p - w).norm() < 1e-14);
        }
    }

    #[test]
    fn in_ellipse_examples() {
        let (k, g) = steiner_in_ellipse(&sample()).unwrap();
        assert_coeffs(k, [0.25, 0.0, 1.0 / 3.0, -1.0, -2.0 / 3.0, 1.0], 1e-12);
        assert!((g.a - 2.0 / 3f64.sqrt()).abs() < 1e-12 && (g.b - 1.0).abs() < 1e-12);

        let (k, g) = steiner_in_ellipse(&equilateral()).unwrap();
        assert_coeffs(k, [0.25, 0.0, 0.25, 0.0, 0.0, -1.0], 1e-12);
        assert!((g.a - 2.0).abs() < 1e-12 && (g.b - 2.0).abs() < 1e-12 && g.ecc < 1e-9);

        let iso = Triangle::from_pairs([(0.0, 15.0), (8.0, -2.0), (-8.0, -2.0)]).unwrap();
        let (k, g) = steiner_in_ellipse(&iso).unwrap();
        assert!(k.b.abs() < 1e-9 && k.d.abs() < 1e-9);
        assert!((g.theta - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn circum_ellipse_examples() {
        let t = sample();
        let (k, g) = steiner_circum_ellipse(&t).unwrap();
        let s = 2.0 / 3f64.sqrt();
        assert!((g.f1 - c(2.0 + s, 1.0)).norm() < 1e-14);
        assert!((g.a - 4.0 / 3f64.sqrt()).abs() < 1e-12 && (g.b - 2.0).abs() < 1e-12);
        for v in t.vertices() {
            let sum = (v - g.f1).norm() + (v - g.f2).norm();
            assert!((sum - 8.0 / 3f64.sqrt()).abs() < 1e-12);
        }
        let extra = circum_extra_points(&t);
        assert!((extra[0] - c(2.0, -1.0)).norm() < 1e-14);
        assert!(k.eval(extra[0]).abs() < 1e-12);

        let (k, g) = steiner_circum_ellipse(&equilateral()).unwrap();
        assert_coeffs(k, [1.0 / 16.0, 0.0, 1.0 / 16.0, 0.0, 0.0, -1.0], 1e-12);
        assert!((g.a - 4.0).abs() < 1e-12 && (g.b - 4.0).abs() < 1e-12);
    }

    #[test]
    fn report_rows() {
        let r = steiner_report(&sample()).unwrap();
        let [inner, outer] = r.rows();
        assert_coeffs(inner.conic, [0.25, 0.0, 1.0 / 3.0, -1.0, -2.0 / 3.0, 1.0], 1e-12);
        assert!((inner.f1 - c(2.57735, 1.0)).norm() < 1e-5);
        assert!((inner.f2 - c(1.42265, 1.0)).norm() < 1e-5);
        assert!((inner.a - 1.15470).abs() < 1e-5 && (inner.b - 1.0).abs() < 1e-12);
        assert!((outer.a - 2.30940).abs() < 1e-5 && (outer.b - 2.0).abs() < 1e-12);
        assert!(r.violations().is_empty(), "{:?}", r.violations());

        let r = steiner_report(&equilateral()).unwrap();
        let [inner, outer] = r.rows();
        assert!((inner.a - 2.0).abs() < 1e-12 && (inner.b - 2.0).abs() < 1e-12);
        assert!((outer.a - 4.0).abs() < 1e-12 && (outer.b - 4.0).abs() < 1e-12);
        assert!(inner.f1.norm() < 1e-9 && outer.f2.norm() < 1e-9);
        assert!(r.in_foci().coincident);
        assert!(r.violations().is_empty(), "{:?}", r.violations());

        let t = Triangle::from_pairs([(3.0, 14.0), (8.5, -1.5), (-6.0, -2.0)]).unwrap();
        let r = steiner_report(&t).unwrap();
        let [inner, outer] = r.rows();
        assert!((inner.a / inner.b - outer.a / outer.b).abs() < 1e-9);
    }

    #[test]
    fn violations_catch_tampering() {
        let mut r = steiner_report(&sample()).unwrap();
        r.circ_geom.b *= 1.01;
        assert!(!r.violations().is_empty());

        let mut r = steiner_report(&sample()).unwrap();
        r.in_conic.f += 1e-3;
        assert!(r.violations().iter().any(|v| v.contains("off the conic")));
    }

    #[test]
    fn parametric_samples_lie_on_fitted_conic() {
        let r = steiner_report(&Triangle::from_pairs([(1.0, 12.0), (4.0, -2.0), (-6.0, 0.0)]).unwrap()).unwrap();
        let rho2 = r.triangle.scale().powi(2);
        for (k, g) in [(r.in_conic, r.in_geom), (r.circ_conic, r.circ_geom)] {
            let worst = g.sample(360).iter().map(|p| k.eval(*p).abs()).fold(0.0, f64::max);
            assert!(worst <= 1e-8 * rho2, "residual {worst}");
        }
    }
}
