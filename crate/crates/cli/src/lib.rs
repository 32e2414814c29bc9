//! Library surface of the suite-runner binary, exposed so integration tests
//! can drive the parser, elaborator and report writer directly.

pub mod elab;
pub mod expr;
pub mod report;
pub mod suite;
