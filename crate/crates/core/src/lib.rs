//! From a microscopic pairing interaction to the Ginzburg-Landau model.
//!
//! The chain implemented here:
//!
//! 1. [`pairing`] solves the linear criterion K_T(-lap - mu) + V for the
//!    critical temperature T_c and the pair state alpha0.
//! 2. [`coeffs`] evaluates the GL coefficients lambda0..lambda3 (and kappa)
//!    as momentum integrals over the pair form factor.
//! 3. [`gl`] represents and minimizes the GL functional on a periodic torus
//!    with external fields, and locates the critical temperature-shift D*.
//! 4. [`bdg`] realizes the rescaled BCS functional on a 1D lattice: exact
//!    free-energy identities, the relative-entropy bound, self-consistent
//!    minimization, and the semiclassical sweep comparing Delta F against
//!    h^3 lambda0 inf E_GL.
//!
//! Units: k_B = hbar = 2m = 1, dispersion q^2 - mu.

pub mod bdg;
pub mod coeffs;
pub mod error;
pub mod field;
pub mod gl;
pub mod grid;
pub mod linalg;
pub mod pairing;
pub mod potential;
pub mod quad;
pub mod special;

pub use error::{Error, Result};
pub use grid::{Dimension, RadialFunction, RadialGrid};
pub use potential::InteractionPotential;
pub use special::Temperature;

// Shared third-party types appear in public signatures.
pub use faer;
pub use num_complex;
