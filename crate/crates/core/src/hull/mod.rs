//! Numeric root localization and convex-hull diagnostics.
//!
//! Everything here runs in `f64`. Multiplicities always come from the
//! exact squarefree decomposition, never from clustering numeric roots.

mod diagnostics;
mod geometry;
mod roots;

use serde::{Deserialize, Serialize};

pub use diagnostics::{boundary_root_check, gl_diagnostics, GlDiagnostics};
pub use geometry::{classify_roots, ClassifiedRoot, HullClassification, HullShape, Location};
pub use roots::{aberth, find_roots_numeric, rational_roots, NumericRoot, RationalRoots, RootCloud};

/// Numeric thresholds. Every numeric verdict records the values used.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative backward error accepted for a computed root.
    pub root_residual: f64,
    /// Distance below which a root counts as lying on the hull boundary.
    pub hull_boundary: f64,
    /// `|f^(k)(ζ)|` relative to the evaluation scale below which a
    /// derivative counts as vanishing.
    pub derivative_nonvanishing: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root_residual: 1e-10,
            hull_boundary: 1e-8,
            derivative_nonvanishing: 1e-8,
        }
    }
}

/// Numeric failures are only claimed this far beyond the tolerance.
pub const FAILURE_MARGIN: f64 = 1e3;

impl Tolerances {
    pub fn as_pairs(&self) -> [(&'static str, f64); 3] {
        [
            ("root_residual", self.root_residual),
            ("hull_boundary", self.hull_boundary),
            ("derivative_nonvanishing", self.derivative_nonvanishing),
        ]
    }
}
