//! File formats, replay verification, and instance generators used by the
//! command-line front end.

mod edgelist;
mod gen;
mod trace;

pub use edgelist::{parse_edge_list, write_edge_list, FormatError};
pub use gen::{generate, Family, GenError};
pub use trace::{verify_artifacts, TraceDocument, TraceStep, VerifyFailure};
