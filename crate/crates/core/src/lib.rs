//! Steiner ellipses of a triangle in the complex plane.
//!
//! The foci of the Steiner in-ellipse are the critical points of the cubic
//! whose roots are the triangle's vertices. From the foci and the side
//! midpoints this crate derives the semi-axes, the eccentricity and the
//! implicit conic equation of both the in-ellipse and the circum-ellipse
//! (the image of the in-ellipse under the homothety of ratio −2 about the
//! centroid), and renders the result as JSON and SVG.
//!
//! Modules, bottom-up:
//!
//! - [`plane`]: points, triangles and exact constructions on them.
//! - [`marden`]: the cubic, its derivative and the in-ellipse foci.
//! - [`conic`]: five-point conic fit by cofactor determinants.
//! - [`steiner`]: ellipse geometry and the combined in/circum report.
//! - [`render`]: deterministic SVG figures.
//! - [`cli`]: argument parsing, JSON schema and the command driver.

pub mod cli;
pub mod conic;
pub mod error;
pub mod marden;
pub mod plane;
pub mod render;
pub mod steiner;

pub use conic::{ConicClass, ConicCoefficients};
pub use error::GeometryError;
pub use marden::FociPair;
pub use plane::{BoundingSquare, Complex, Triangle};
pub use steiner::{EllipseGeometry, SteinerReport};
