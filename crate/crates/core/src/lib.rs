//! Coregularity of quiver settings.

pub mod cli;
pub mod error;
pub mod format;
pub mod quiver;
pub mod reduction;

pub mod cycles;
pub mod local;
pub mod oracle;
pub mod simples;
pub mod sweep;
pub mod symm;

pub use error::{QuiverError, Result};
pub use quiver::{DimensionVector, EulerForm, Quiver, QuiverSetting};
pub use reduction::{classify, reduce, Strategy, Verdict};
