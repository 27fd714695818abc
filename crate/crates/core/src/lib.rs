//! Plumbing graphs, Seifert fibrations and the boundary of non-isolated
//! surface singularities `z^m = g(x, y)`.
//!
//! The pipeline: germ data -> vertical monodromy -> Seifert pieces -> star
//! graphs -> glued plumbing graph -> first homology and lens recognition.

pub mod assembly;
pub mod error;
pub mod germ;
pub mod homology;
pub mod linalg;
pub mod plumbing;
pub mod seifert;

pub use error::{Error, Result};
pub use linalg::{determinant, smith_normal_form, IntMatrix, SnfResult};
pub use plumbing::{GraphJson, LensParams, PlumbingGraph, PlumbingVertex, Shape, VertexId};
pub use seifert::{BoundaryOrbit, MonodromyData, SeifertData, SeifertPair};
pub use assembly::{BoundedPiece, GluingData, Section};
pub use germ::{BranchData, GermData, LensObstruction, VanishingZoneData};
pub use homology::HomologyResult;
