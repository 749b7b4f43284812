use thiserror::Error;

use crate::plane::Complex;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    /// A coordinate was NaN or infinite.
    #[error("invalid coordinate")]
    InvalidCoordinate,
    /// The three triangle vertices lie on one line (or coincide).
    #[error("z1={}, z2={}, z3={} are collinear!", fmt_complex(&.0[0]), fmt_complex(&.0[1]), fmt_complex(&.0[2]))]
    Collinear([Complex; 3]),
    /// Five-point conic input with a repeated point or a rank-deficient system.
    #[error("degenerate point set")]
    DegeneratePointSet,
    /// Three of the five conic points are collinear.
    #[error("collinear subset")]
    CollinearSubset,
    /// The point handed to the semi-axis computation is not outside the focal segment.
    #[error("point inside focal segment")]
    PointInsideFocalSegment,
}

/// Formats like Scilab's `string(z)` for a complex value: `re+imi`.
pub(crate) fn fmt_complex(z: &Complex) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
