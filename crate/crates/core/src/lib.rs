//! Large induced outerplane subgraphs of maximal plane graphs and their use for
//! simultaneous embeddings with fixed edges.
//!
//! The pipeline peels a triangulated plane graph into outerplane levels, two-colors
//! the level boundaries so that the white vertices induce a strongly outerplane
//! graph, and then draws a second small planar graph so that its vertices sit on
//! points carrying white vertices of the first graph.

pub mod cycle_breaker;
pub mod decomposition;
mod error;
pub mod geometry;
pub mod plane_graph;
pub mod pointset;
pub mod sefe;
mod svg;
mod union_find;
pub mod verification;

pub use cycle_breaker::{extract_outerplane_set, Color, Extraction, TwoColoring};
pub use decomposition::{peel, OuterplaneDecomposition};
pub use error::{Error, Result};
pub use geometry::Point;
pub use plane_graph::{Dart, Face, PlaneGraph};
pub use pointset::{draw_general_position, embed_on_points, PointSet, StraightLineDrawing};
pub use svg::render_drawing_svg;
pub use sefe::{build_sefe, render_svg, verify_certificate, CertificateReport, SefeCertificate};

