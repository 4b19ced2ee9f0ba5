//! File formats and command-line driver for `tiltdt-core`.

pub mod cli;
pub mod formats;
