//! Reports behind the `spinphase` binary.
//!
//! Each command returns a [`Report`]: the echoed input (`spec`), one record
//! per result row (`rows`) and a `summary` carrying the pass/fail verdict.
//! Reports render as CSV (rows only, header first, LF endings, 17
//! significant digits), as a single JSON object with `spec`, `rows` and
//! `summary` keys, or as a plain-text table.

mod output;
mod pair;
pub mod sampling;
mod sweep;
mod verify;

pub use output::{Cell, OutputFormat, Outcome, Report, Tabular};
pub use pair::{
    bell, evolve, monogamy, three_spin, BellRow, BellSpec, BellSummary, EvolveRow, EvolveSpec,
    EvolveSummary, MonogamySpec, MonogamySummary, ThreeSpinRow, ThreeSpinSpec, ThreeSpinSummary,
    ADIABATIC_FLAG_THRESHOLD,
};
pub use sweep::{sweep, SweepRow, SweepSpec, SweepSummary};
pub use verify::{verify, CheckRow, VerifySpec, VerifySummary};

use crate::error::Error;

/// Exit status for a passing run.
pub const EXIT_OK: i32 = 0;
/// Exit status when a check or tolerance fails.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for invalid arguments.
pub const EXIT_USAGE: i32 = 2;

/// Maps a library error onto the binary's exit status: bad input is a usage
/// error, everything else is a failed computation.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Domain(_)
        | Error::BadSteps(_)
        | Error::BadDimension(_)
        | Error::NonFinite(_)
        | Error::ZeroState => EXIT_USAGE,
        Error::ZeroVisibility(_)
        | Error::DegeneratePath(_)
        | Error::NotHermitian(_)
        | Error::NotPsd(_)
        | Error::NotNormalized(_) => EXIT_FAILURE,
    }
}
