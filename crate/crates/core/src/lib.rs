//! Bottleneck and lex-bottleneck partial-matching Voronoi diagrams under translation.
//!
//! Given planar point sets `A` (size `n`) and `B` (size `k ≤ n`), the value
//! function `E(t)` is the smallest achievable maximum squared distance of an
//! injection `B + t ↪ A`. This crate builds an exact arrangement of bisector
//! lines on which `E` is realized by one matching per cell, labels it, and
//! answers optimal-translation, minimax-path and cover-radius queries.
//!
//! All arithmetic is exact ([`Scalar`] is an arbitrary-precision rational).
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod applications;
pub mod arrangement;
mod assignment;
pub mod diagram;
pub mod envelope;
pub mod error;
pub mod geom;
pub mod matching;
pub mod oracle;
pub mod polygon;
pub mod scalar;

pub use applications::{
    bottleneck_path, bottleneck_path_in, cover_radius, cover_radius_in, optimal_translation, optimal_translation_in,
    CoverResult, PathResult, Translation,
};
pub use arrangement::{all_bisectors, build_arrangement, used_bisectors, Arrangement, Bisector, EdgePair, FaceRef};
pub use diagram::{
    eval_e, label_cells_incremental, label_cells_recompute, label_faces_lex, CellLabel, Diagram, FaceLabel,
    LabelMode, LabeledDiagram, Selection,
};
pub use envelope::min_envelope_on_segment;
pub use error::{ArrangementError, GeomError, MatchingError, OracleError, ParseScalarError};
pub use geom::{bisector_line, equivalence_classes, squared_edge_length, Bisect, EdgeRef, Instance, Line, Point};
pub use matching::{
    bottleneck_matching, lex_bottleneck_matching, max_matching, prune_candidates, update_on_swap, CandidateGraph,
    LexCostVector, Matching, PairKind,
};
pub use polygon::{closest_point_in_polygon, erode_polygon, ConvexPolygon, HalfPlane};
pub use scalar::Scalar;
