//! Command implementations behind the `caforge` binary. Each command
//! returns a human-readable table and a [`Certificate`].

pub mod certificate;
pub mod commands;
pub mod input;
pub mod table;

pub use certificate::{Certificate, InputRecord, SCHEMA_VERSION};
pub use commands::Outcome;
pub use input::PolyFormat;

/// Exit status of a completed run.
pub const EXIT_OK: i32 = 0;
/// A condition failed for an input asserted to share a root with every derivative.
pub const EXIT_ASSERTION: i32 = 1;
/// Bad flags or unparsable input.
pub const EXIT_USAGE: i32 = 2;
/// The computation itself could not finish (e.g. root finding diverged).
pub const EXIT_RUNTIME: i32 = 3;

pub fn exit_code_for(err: &caforge_core::Error) -> i32 {
    use caforge_core::Error;
    match err {
        Error::NoConvergence { .. } => EXIT_RUNTIME,
        _ => EXIT_USAGE,
    }
}
