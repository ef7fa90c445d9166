//! Informative spatial sampling toolkit.
//!
//! Simulates isotropic Gaussian random fields on a gridded study region,
//! draws point-process samples whose intensity depends on the signal
//! (informative selection), estimates the resulting sample-vs-population
//! density ratio by Monte Carlo, and quantifies the selection bias of
//! naive variogram and likelihood estimation.

pub mod covariogram;
pub mod design;
pub mod domain;
pub mod error;
pub mod field;
pub mod likelihood;
pub mod optimize;
pub mod rho;
pub mod rng;
pub mod util;
pub mod variogram;

pub use covariogram::{cov_matrix, CovariogramFamily, CovariogramModel};
pub use domain::{integrate, make_grid, Domain, Grid, Locations};
pub use error::{Error, Result};
