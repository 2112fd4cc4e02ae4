//! File formats, figure rendering, and verification reports on top of the
//! `coxplane-core` pipeline.
//!
//! The crate is organized around one document model: [`document::DiagramDocument`]
//! captures a projected configuration together with named diagrams and
//! verification reports, serializes to stable JSON, and is the sole input to
//! the SVG renderer. The CLI in `main.rs` is a thin dispatcher over these
//! pieces.

pub mod document;
pub mod expect;
pub mod scene;
pub mod svg;
