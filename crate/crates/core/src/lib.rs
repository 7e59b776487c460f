//! Outage, secrecy and throughput analysis for artificial-noise-aided
//! multi-antenna transmission in Poisson-field ad hoc networks.
//!
//! Two transmission schemes are modelled:
//!
//! - [`sectoring`]: the information signal goes out in the sector holding the
//!   intended receiver and artificial noise in the remaining `N - 1` sectors.
//! - [`beamforming`]: maximal-ratio transmission towards the intended receiver
//!   with artificial noise spread uniformly over the null space of its channel.
//!
//! Each scheme exposes closed-form connection outage, secrecy outage bounds,
//! secrecy transmission capacity and an optimizer for the information/noise
//! power split. [`montecarlo`] simulates the underlying point-process model
//! directly and never calls any closed form, so it serves as an independent
//! oracle for all of them.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the CLI and the
//! parallel Monte Carlo driver live in the `ansec` companion crate.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod beamforming;
mod error;
pub mod model;
pub mod montecarlo;
pub mod quadrature;
pub mod sectoring;
pub mod specfun;
pub mod throughput;

pub use error::{Error, Result};
pub use model::{NetworkParams, PowerSplit, SirThresholds};
pub use specfun::{AntennaCount, PathLossExponent};
pub use throughput::{OutageConstraints, RateTriple};

/// Quantities that come from a low-outage approximation rather than an exact
/// expression or a bound. Callers reproducing exact-vs-approximate curves keep
/// the two apart by type.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Approx(pub f64);

impl Approx {
    /// The approximate value.
    pub fn value(self) -> f64 {
        self.0
    }
}
