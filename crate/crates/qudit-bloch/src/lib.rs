//! Operator bases, Bloch vectors and entanglement witnesses for qudits.
//!
//! A d-level quantum state is a d×d density matrix. Subtracting the fixed
//! identity part and projecting onto an orthogonal operator basis turns it
//! into a (d²−1)-dimensional coefficient vector, the *Bloch vector*. This
//! crate constructs the three standard bases for that decomposition:
//!
//! - the **generalized Gell-Mann basis** (GGB): Hermitian SU(d) generators,
//! - the **polarization operator basis** (POB): irreducible tensor operators
//!   built from Clebsch–Gordan coefficients,
//! - the **Weyl operator basis** (WOB): unitary shift-and-phase operators,
//!
//! and uses them to decompose one- and two-qudit states. On top of the
//! decomposition layer it implements the Hilbert–Schmidt entanglement
//! machinery for isotropic two-qudit states: the distance to the separable
//! set, the optimal entanglement witness in closed form, the guess-method
//! test for a candidate nearest separable state, and (for qutrits) the
//! decomposition of the witness expectation value into spin-1 observables
//! that an experiment can measure directly.
//!
//! The numerical kernel is self-contained: dense complex matrices with a
//! cyclic Jacobi eigensolver, and Clebsch–Gordan coefficients evaluated from
//! exact big-integer factorials with a single floating-point square root at
//! the end.
//!
//! # Quick start
//!
//! ```
//! use qudit_bloch::{bases, bloch, states, witness, BasisFamily};
//!
//! // Decompose the qutrit Bell state in the Weyl operator basis.
//! let rho = states::bell_state(3).unwrap();
//! let decomp = bloch::decompose_bipartite(&rho, BasisFamily::Wob).unwrap();
//! assert!(decomp.n_coeffs.iter().all(|c| c.norm() < 1e-12));
//!
//! // Hilbert-Schmidt distance of the Bell state to the separable set,
//! // and the matching witness violation.
//! let d = witness::hs_measure_iso(3, 1.0).unwrap();
//! let b = witness::max_violation_iso(3, 1.0).unwrap();
//! assert!((d - b).abs() < 1e-12);
//! assert!((d - 1.0 / 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod angular;
pub mod bases;
pub mod bloch;
mod error;
pub mod io;
pub mod linalg;
pub mod spin1;
pub mod states;
pub mod witness;

pub use bases::{BasisElementLabel, BasisFamily, OperatorBasis};
pub use bloch::{BipartiteBlochDecomposition, BlochVector, DensityMatrix, Reconstruction};
pub use error::{Error, Result};
pub use linalg::{Complex64, ComplexMatrix};
pub use witness::{EntanglementWitness, WitnessVerdict};

/// Default numerical tolerance for Hermiticity, positivity and trace checks.
///
/// Double precision on the matrix sizes handled here (dim ≤ 64) keeps
/// rounding errors orders of magnitude below this.
pub const DEFAULT_TOL: f64 = 1e-9;
