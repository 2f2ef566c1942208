//! Grid-based approximation of the minimum weight triangulation (MWT) and
//! its q-norm generalization.
//!
//! The pipeline normalizes a planar point set, buckets every point pair
//! into a level of a nested grid hierarchy, and builds the triangulation
//! level by level: a ring-heuristic pass fans out 1- and 2-chains on the
//! boundaries of non-triangulated faces, then a greedy pass inserts the
//! remaining level edges in increasing length order. All geometric
//! decisions use exact rational arithmetic. A brute-force exact oracle and
//! runtime invariant checks support ratio measurement at desk scale.

pub mod driver;
pub mod geom;
pub mod greedy;
pub mod grid;
pub mod oracle;
pub mod pslg;
pub mod qnorm;
pub mod ring;

pub use driver::{run, trials, CheckKind, CheckStatus, RunConfig, RunResult};
pub use geom::{Point, PointSet, Rat, Turn};
pub use grid::{GridConfig, LeveledEdgeIndex, Normalization};
pub use pslg::Pslg;
pub use qnorm::CostExponent;

use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoints(usize, usize),
    #[error("collinear points at indices ({0}, {1}, {2})")]
    CollinearPoints(usize, usize, usize),
    #[error("gamma must lie strictly inside (1/3, 1)")]
    GammaOutOfRange,
    #[error("mismatched grid levels: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("offset violated: point {point} lies on a level-{level} grid line")]
    OffsetViolated { point: usize, level: u32 },
    #[error("crossing insertion: edge ({0}, {1}) violates planarity")]
    CrossingInsertion(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    EdgePresent(usize, usize),
    #[error("unclassifiable: boundary component has fewer than three occurrences")]
    Unclassifiable,
    #[error("all-reflex component: no convex occurrence exists")]
    AllReflexComponent,
    #[error("backward support is defined only for reflex occurrences")]
    NotReflex,
    #[error("identity applies to connected graphs without isolated vertices")]
    EulerPrecondition,
    #[error("phase 1 assertion failed at face {face:?}, vertex {vertex}, step {step}: {detail}")]
    Phase1Assertion {
        face: Vec<usize>,
        vertex: usize,
        step: &'static str,
        detail: String,
    },
    #[error("oracle scale exceeded: n = {0} is above the cap of {1}")]
    OracleScaleExceeded(usize, usize),
    #[error("non-convex input: oracle polygon DP requires convex position in hull order")]
    NonConvexInput,
    #[error("q exponent must be at least 1")]
    InvalidExponent,
}
