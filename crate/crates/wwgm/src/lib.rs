//! Exact symbolic machinery for phase-space quantization over the
//! Heisenberg-Weyl algebra, together with a floating-point truncated
//! Fock-space oracle that cross-checks the symbolic kernel numerically.
//!
//! The kernel works with four carriers:
//!
//! * [`Scalar`] — exact Gaussian-rational coefficients, polynomial in the
//!   formal units `hbar` and the ordering parameters `s`, `r`;
//! * [`OpPoly`] — noncommutative operator polynomials in two generators with
//!   a central commutator, kept in normal form;
//! * [`PhasePoly`] — commutative symbols on a two-variable phase space;
//! * [`DiffOp`] — polynomial-coefficient differential operators acting on
//!   symbols.
//!
//! On top of those, [`ordering`] builds the s-ordered products and their
//! conversion formulas, [`star`] the s-parametrized star product and Moyal
//! bracket, [`correspondence`] the quantization/symbol maps and Bopp
//! operators, and [`winfinity`] the structure checks relating the operator
//! algebra to its differential-operator realization. [`fock`] validates all
//! of it numerically on truncated matrices, and [`verify`] bundles every
//! invariant into a one-shot suite.

use std::sync::atomic::{AtomicU32, Ordering};

mod combin;
pub mod correspondence;
pub mod diffop;
pub mod error;
pub mod fock;
pub mod oppoly;
pub mod ordering;
pub mod phasepoly;
pub mod scalar;
pub mod star;
pub mod verify;
pub mod winfinity;

pub use diffop::{DiffKey, DiffOp};
pub use error::{Error, Result};
pub use oppoly::{Algebra, OpPoly};
pub use phasepoly::{Axis, PhasePoly, VarPair};
pub use scalar::{Coeff, Powers, Rat, Scalar};

pub const DEFAULT_DEGREE_CAP: u32 = 64;

static DEGREE_CAP: AtomicU32 = AtomicU32::new(DEFAULT_DEGREE_CAP);

/// Current cap on carrier exponents. Exceeding it is an explicit
/// [`Error::DegreeOverflow`], never a silent truncation.
pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Process-wide configuration knob, intended to be set once at startup.
pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap.max(1), Ordering::Relaxed);
}
