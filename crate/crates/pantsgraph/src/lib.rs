//! Exact combinatorics of curves, pants decompositions, and Farey graphs
//! on a closed genus-2 surface.
//!
//! Everything here is integer arithmetic: slopes are reduced rationals,
//! curves are edge-weight vectors on a fixed one-vertex triangulation, and
//! all distances, projections, and convexity checks are computed exactly.
//!
//! The crate is organised around five layers:
//!
//! - [`farey`] — the Farey graph on slopes `p/q`: edges, neighbor
//!   enumeration, exact distances via continued fractions, geodesics,
//!   Möbius actions, and invariant axes of hyperbolic matrices.
//! - [`metric`] — finite graphs, Cartesian products, convexity and
//!   total-geodesy checkers, grid planes, and translation-invariant planes.
//! - [`surface`] — the curve kernel: a bundled one-vertex triangulation of
//!   the closed genus-2 surface, normal multicurves, tracing, cutting,
//!   window charts, footprints, and wave projections.
//! - [`pants`] — pants decompositions, elementary moves, bounded search in
//!   the pants graph, and seeded random walks.
//! - [`handle`] — projections to a handle subgraph: per-window and
//!   whole-handle projections, gap bounds, waypoint traces, path
//!   shortening, and the falsification-style audits.
//!
//! The [`document`] module defines the single JSON document format used by
//! the `pantsgraph` binary, including run manifests for reproducibility.

pub mod document;
pub mod farey;
pub mod handle;
pub mod metric;
pub mod pants;
pub mod surface;

pub mod cli;
