//! Desk-scale simulation and analysis of mechanical-oscillator cat states of a
//! trapped ion.
//!
//! The crate covers the full chain from state generation to tomography:
//!
//! - [`fock`] — truncated Fock-space numerics: states, displacement/squeeze
//!   operators, probe bases, populations, parity, physical units.
//! - [`spin`] — joint spin⊗oscillator dynamics: Hamiltonians, unitary
//!   propagation, heralded projection, Lindblad and Monte-Carlo-wavefunction
//!   open-system evolution.
//! - [`synth`] — synthetic experimental records: sideband spin traces with
//!   collapse and revival, finite-shot sampling, threshold heralding, and the
//!   full heralded sequence pipeline.
//! - [`fit`] — recovery of basis populations, Rabi rate, decay constant,
//!   parity and mixture weight from a spin trace by separable nonnegative
//!   least squares with parametric-bootstrap errors.
//! - [`wigner`] — Wigner-function points, cuts and grids from displaced(-
//!   squeezed) basis populations, a direct oracle for pure states, and the
//!   interference-fringe fit.
//! - [`io`] — structured-text interchange formats (trace/population/grid CSV,
//!   ASCII PGM maps, state and operator dumps).
//!
//! All numerics are generic over the working float via [`scalar::Real`];
//! concrete `f64` aliases are exported at the crate root.

pub mod error;
pub mod fit;
pub mod fock;
pub mod io;
pub mod math;
pub mod scalar;
pub mod spin;
pub mod synth;
pub mod wigner;

pub use error::{Error, Result};
pub use scalar::{Real, C};

/// Crate-default scalar type.
pub type R64 = f64;
/// `f64` Fock-space state vector.
pub type FockVector64 = fock::FockVector<f64>;
/// `f64` dense operator matrix.
pub type OperatorMatrix64 = fock::OperatorMatrix<f64>;
/// `f64` analysis basis.
pub type ProbeBasis64 = fock::ProbeBasis<f64>;
/// `f64` joint spin⊗motion state.
pub type SpinFockState64 = spin::SpinFockState<f64>;
/// `f64` spin trace record.
pub type SpinTrace64 = synth::SpinTrace<f64>;
/// `f64` population-fit output.
pub type PopulationEstimate64 = fit::PopulationEstimate<f64>;
/// `f64` Wigner grid.
pub type WignerGrid64 = wigner::WignerGrid<f64>;
