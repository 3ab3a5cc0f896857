//! Worksheet parsing, evaluation and reporting.

mod oracle;
mod run;
mod syntax;

pub use oracle::{oracle_dims, ORACLE_CAP};
pub use run::{declared_kinds, run, RunFlags, RunReport, Status, TaskReport};
pub use syntax::{parse_range, parse_syntax, parse_worksheet, Arg, Decl, Item, Kind, Spanned, Task, Value, Worksheet};
