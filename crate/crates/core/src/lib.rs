pub mod cyclotomic;
pub mod error;
pub mod k0;
pub mod klr;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod polyrep;
pub mod qseries;
pub mod quiver;
pub mod rat;
pub mod suite;
pub mod symgrp;

pub use error::{Error, Result};
