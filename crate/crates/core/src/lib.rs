//! Finite-scale coarse geometry of finitely generated groups.

#![allow(clippy::needless_range_loop)]

pub mod cayley;
pub mod cli;
pub mod coarse;
pub mod commensurizer;
pub mod complement;
pub mod constants;
pub mod error;
pub mod freebycyclic;
pub mod presentation;
pub mod quasiline;
pub mod suite;
pub mod unionfind;

pub use error::{Error, Result};
