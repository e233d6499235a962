//! Scenario language, CSV reports and command front end for the `tropnev`
//! max-plus Nevanlinna library.

pub mod commands;
pub mod csv;
pub mod expr;
pub mod scenario;
