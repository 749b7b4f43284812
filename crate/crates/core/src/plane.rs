//! Points of the complex plane and the exact constructions the Steiner
//! pipeline needs: centroid, side midpoints, point reflection, homothety
//! and the plot square.

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// A point of the plane, `re` = x and `im` = y.
pub type Complex = num_complex::Complex64;

/// Tolerance on the imaginary part of the vertex ratio below which three
/// points count as collinear.
pub const COLLINEAR_EPS: f64 = 1e-9;

/// Margin added around the triangle when sizing the plot square.
pub const SQUARE_MARGIN: f64 = 0.5;

pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn check_finite(points: &[Complex]) -> Result<(), GeometryError> {
    if points.iter().all(|&z| is_finite(z)) {
        Ok(())
    } else {
        Err(GeometryError::InvalidCoordinate)
    }
}

/// Three non-collinear vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    v: [Complex; 3],
}

impl Triangle {
    pub fn new(v1: Complex, v2: Complex, v3: Complex) -> Result<Self, GeometryError> {
        if is_collinear(v1, v2, v3)? {
            return Err(GeometryError::Collinear([v1, v2, v3]));
        }
        Ok(Self { v: [v1, v2, v3] })
    }

    /// Convenience constructor from `(re, im)` pairs.
    pub fn from_pairs(p: [(f64, f64); 3]) -> Result<Self, GeometryError> {
        Self::new(
            Complex::new(p[0].0, p[0].1),
            Complex::new(p[1].0, p[1].1),
            Complex::new(p[2].0, p[2].1),
        )
    }

    pub fn v1(&self) -> Complex {
        self.v[0]
    }

    pub fn v2(&self) -> Complex {
        self.v[1]
    }

    pub fn v3(&self) -> Complex {
        self.v[2]
    }

    pub fn vertices(&self) -> [Complex; 3] {
        self.v
    }

    /// `max(1, max |v_k|)`, the magnitude scale used by all relative tolerances.
    pub fn scale(&self) -> f64 {
        self.v.iter().map(|z| z.norm()).fold(1.0, f64::max)
    }

    /// Image under `z -> alpha * z + beta`. Fails only if the image degenerates.
    pub fn map(&self, alpha: Complex, beta: Complex) -> Result<Self, GeometryError> {
        let [a, b, c] = self.v.map(|z| alpha * z + beta);
        Self::new(a, b, c)
    }
}

impl Serialize for Triangle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Triangle", 3)?;
        s.serialize_field("z1", &[self.v[0].re, self.v[0].im])?;
        s.serialize_field("z2", &[self.v[1].re, self.v[1].im])?;
        s.serialize_field("z3", &[self.v[2].re, self.v[2].im])?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Triangle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            z1: [f64; 2],
            z2: [f64; 2],
            z3: [f64; 2],
        }
        let raw = Raw::deserialize(deserializer)?;
        Triangle::from_pairs([
            (raw.z1[0], raw.z1[1]),
            (raw.z2[0], raw.z2[1]),
            (raw.z3[0], raw.z3[1]),
        ])
        .map_err(serde::de::Error::custom)
    }
}

/// Axis-aligned plot square, centered on the triangle centroid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundingSquare {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl BoundingSquare {
    pub fn centered(center: Complex, half_side: f64) -> Self {
        Self {
            xmin: center.re - half_side,
            ymin: center.im - half_side,
            xmax: center.re + half_side,
            ymax: center.im + half_side,
        }
    }

    pub fn center(&self) -> Complex {
        Complex::new(0.5 * (self.xmin + self.xmax), 0.5 * (self.ymin + self.ymax))
    }

    pub fn side(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn half_side(&self) -> f64 {
        0.5 * self.side()
    }

    pub fn contains(&self, z: Complex) -> bool {
        z.re >= self.xmin && z.re <= self.xmax && z.im >= self.ymin && z.im <= self.ymax
    }
}

pub fn centroid(t: &Triangle) -> Complex {
    (t.v[0] + t.v[1] + t.v[2]) / 3.0
}

/// Collinearity test on `Im((z3 - z1) / (z2 - z1))`.
///
/// The points are put in lexicographic order and the ratio is taken with
/// the most separated pair as denominator, so the answer does not depend
/// on argument order. Any exactly coincident pair counts as collinear.
pub fn is_collinear(z1: Complex, z2: Complex, z3: Complex) -> Result<bool, GeometryError> {
    check_finite(&[z1, z2, z3])?;
    let mut p = [z1, z2, z3];
    p.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    if p[0] == p[1] || p[1] == p[2] || p[0] == p[2] {
        return Ok(true);
    }
    let (i, j, k) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .into_iter()
        .max_by(|&(a, b, _), &(c, d, _)| (p[b] - p[a]).norm_sqr().total_cmp(&(p[d] - p[c]).norm_sqr()))
        .expect("three pairs");
    let base = p[j] - p[i];
    let other = p[k] - p[i];
    let ratio = other / base;
    let bound = COLLINEAR_EPS * f64::max(1.0, other.norm() / base.norm());
    Ok(ratio.im.abs() <= bound)
}

/// Side midpoints `(zE1, zE2, zE3) = ((v1+v2)/2, (v1+v3)/2, (v2+v3)/2)`.
pub fn side_midpoints(t: &Triangle) -> [Complex; 3] {
    let [a, b, c] = t.v;
    [(a + b) / 2.0, (a + c) / 2.0, (b + c) / 2.0]
}

pub fn reflect_in_point(z: Complex, center: Complex) -> Complex {
    2.0 * center - z
}

/// The side midpoints reflected in the centroid, in closed form:
/// `zE1r = (v1+v2+4v3)/6`, `zE2r = (v1+4v2+v3)/6`, `zE3r = (4v1+v2+v3)/6`.
pub fn reflected_tangency_points(t: &Triangle) -> [Complex; 3] {
    let [a, b, c] = t.v;
    [
        (a + b + 4.0 * c) / 6.0,
        (a + 4.0 * b + c) / 6.0,
        (4.0 * a + b + c) / 6.0,
    ]
}

/// `k * z + center * (1 - k)`.
pub fn homothety(z: Complex, center: Complex, k: f64) -> Complex {
    k * z + center * (1.0 - k)
}

/// Square about the centroid whose half side is the largest coordinate
/// offset of a vertex from the centroid, plus [`SQUARE_MARGIN`].
pub fn bounding_square(t: &Triangle) -> BoundingSquare {
    let z0 = centroid(t);
    let dmax = t
        .v
        .iter()
        .flat_map(|v| [(z0.re - v.re).abs(), (z0.im - v.im).abs()])
        .fold(0.0, f64::max)
        + SQUARE_MARGIN;
    BoundingSquare::centered(z0, dmax)
}
