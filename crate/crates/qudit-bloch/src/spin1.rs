//! Spin-1 observable layer for qutrit witnesses.
//!
//! An experiment does not measure Gell-Mann matrices directly; it measures
//! spin components. For qutrits the eight Gell-Mann matrices are linear
//! combinations of the spin-1 observables S_x, S_y, S_z, S_x², S_y² and the
//! anticommutators {S_x,S_y}, {S_y,S_z}, {S_z,S_x} (ħ = 1 throughout), so
//! the expectation value of the isotropic-state witness
//!
//!   A_iso = (1/(3√2)) (𝟙⊗𝟙 − (3/4) Λ)
//!
//! reduces to a sum of local and correlated spin measurements on both
//! sides. [`witness_expectation_terms`] produces that measurement list for
//! a given two-qutrit state and assembles ⟨Λ⟩ and ⟨A_iso⟩ from it with the
//! fixed coefficients of the decomposition; the assembled ⟨Λ⟩ is checked
//! against Tr(Λρ) in the tests, which pins every coefficient.

use crate::bases::BasisElementLabel;
use crate::bloch::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{hs_inner, kron, Complex64, ComplexMatrix};
use crate::witness::{optimal_witness_iso, EntanglementWitness};
use crate::BasisFamily;

/// The eight spin-1 observables (3×3, ħ = 1): components, squares of the
/// transverse components, and the three anticommutators.
#[derive(Clone, Debug)]
pub struct SpinOperatorSet {
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
    pub sx2: ComplexMatrix,
    pub sy2: ComplexMatrix,
    /// {S_x, S_y}
    pub axy: ComplexMatrix,
    /// {S_y, S_z}
    pub ayz: ComplexMatrix,
    /// {S_z, S_x}
    pub azx: ComplexMatrix,
    /// Fixed to 1; recorded so reports state their unit convention.
    pub hbar: f64,
}

/// Builds the spin-1 matrices in the S_z eigenbasis.
pub fn spin_operators() -> SpinOperatorSet {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let inv_sqrt2 = 1.0 / 2f64.sqrt();
    let sx = ComplexMatrix::from_fn(3, 3, |r, s| {
        if r.abs_diff(s) == 1 {
            c(inv_sqrt2, 0.0)
        } else {
            Complex64::ZERO
        }
    });
    let sy = ComplexMatrix::from_fn(3, 3, |r, s| {
        if s == r + 1 {
            c(0.0, -inv_sqrt2)
        } else if r == s + 1 {
            c(0.0, inv_sqrt2)
        } else {
            Complex64::ZERO
        }
    });
    let sz = ComplexMatrix::diag(&[1.0, 0.0, -1.0]);
    let sx2 = sx.mul(&sx).expect("3x3 product");
    let sy2 = sy.mul(&sy).expect("3x3 product");
    let anti = |a: &ComplexMatrix, b: &ComplexMatrix| {
        a.mul(b)
            .and_then(|ab| b.mul(a).and_then(|ba| ab.add(&ba)))
            .expect("3x3 anticommutator")
    };
    SpinOperatorSet {
        axy: anti(&sx, &sy),
        ayz: anti(&sy, &sz),
        azx: anti(&sz, &sx),
        sx,
        sy,
        sz,
        sx2,
        sy2,
        hbar: 1.0,
    }
}

/// The qutrit Gell-Mann matrix for `label`, assembled from spin-1
/// observables instead of dyads:
///
///   λ¹²_s = (S_x + {S_z,S_x})/√2      λ¹³_s = S_x² − S_y²
///   λ²³_s = (S_x − {S_z,S_x})/√2      λ¹²_a = (S_y + {S_y,S_z})/√2
///   λ¹³_a = {S_x,S_y}                 λ²³_a = (S_y − {S_y,S_z})/√2
///   λ¹  = 2·𝟙 + (S_z − 3S_x² − 3S_y²)/2
///   λ²  = (−2·𝟙 + (3/2)(S_z + S_x² + S_y²))/√3
pub fn gellmann_from_spin(label: BasisElementLabel) -> Result<ComplexMatrix> {
    let ops = spin_operators();
    let inv_sqrt2 = 1.0 / 2f64.sqrt();
    let id = ComplexMatrix::identity(3);
    let combo = match label {
        BasisElementLabel::GgmSymmetric { j: 1, k: 2 } => {
            ops.sx.add(&ops.azx)?.scale_re(inv_sqrt2)
        }
        BasisElementLabel::GgmSymmetric { j: 1, k: 3 } => ops.sx2.sub(&ops.sy2)?,
        BasisElementLabel::GgmSymmetric { j: 2, k: 3 } => {
            ops.sx.sub(&ops.azx)?.scale_re(inv_sqrt2)
        }
        BasisElementLabel::GgmAntisymmetric { j: 1, k: 2 } => {
            ops.sy.add(&ops.ayz)?.scale_re(inv_sqrt2)
        }
        BasisElementLabel::GgmAntisymmetric { j: 1, k: 3 } => ops.axy,
        BasisElementLabel::GgmAntisymmetric { j: 2, k: 3 } => {
            ops.sy.sub(&ops.ayz)?.scale_re(inv_sqrt2)
        }
        BasisElementLabel::GgmDiagonal { l: 1 } => {
            let squares = ops.sx2.add(&ops.sy2)?.scale_re(3.0);
            id.scale_re(2.0)
                .add(&ops.sz.sub(&squares)?.scale_re(0.5))?
        }
        BasisElementLabel::GgmDiagonal { l: 2 } => {
            let squares = ops.sz.add(&ops.sx2)?.add(&ops.sy2)?;
            id.scale_re(-2.0)
                .add(&squares.scale_re(1.5))?
                .scale_re(1.0 / 3f64.sqrt())
        }
        other => {
            return Err(Error::InvalidLabel {
                reason: format!("{other} is not a qutrit Gell-Mann label"),
            })
        }
    };
    Ok(combo)
}

/// The optimal two-qutrit isotropic witness A_iso = (1/(3√2))(𝟙⊗𝟙 − (3/4)Λ).
pub fn a_iso_qutrit() -> Result<EntanglementWitness> {
    optimal_witness_iso(3, BasisFamily::Ggm)
}

/// One measured observable of the witness decomposition.
#[derive(Clone, Debug)]
pub struct ExpectationTerm {
    /// Human-readable observable name, e.g. `Sx (x) Sx` or `1 (x) Sy^2`.
    pub observable: String,
    /// ⟨O⟩ = Tr(Oρ); real because every listed observable is Hermitian.
    pub value: f64,
    /// Weight of this term in the assembled ⟨Λ⟩.
    pub lambda_coefficient: f64,
}

/// Measurement plan and assembled expectation values for a two-qutrit
/// state: every spin-correlation term needed to determine ⟨Λ⟩, together
/// with ⟨Λ⟩ itself and the witness expectation
/// ⟨A_iso⟩ = (1/(3√2))⟨𝟙⊗𝟙⟩ − (1/(4√2))⟨Λ⟩.
#[derive(Clone, Debug)]
pub struct ExpectationReport {
    pub terms: Vec<ExpectationTerm>,
    pub lambda_expectation: f64,
    pub witness_expectation: f64,
}

/// Computes every expectation term of the spin-1 decomposition of ⟨Λ⟩ for
/// a 9×9 two-qutrit state and assembles ⟨Λ⟩ and ⟨A_iso⟩.
pub fn witness_expectation_terms(rho: &DensityMatrix) -> Result<ExpectationReport> {
    if rho.dim() != 9 {
        return Err(Error::DimensionMismatch {
            left: format!("{0}x{0}", rho.dim()),
            right: "9x9 (two qutrits)".into(),
        });
    }
    let ops = spin_operators();
    let id = ComplexMatrix::identity(3);

    // (name, left factor, right factor, coefficient in ⟨Λ⟩).
    let plan: Vec<(&str, &ComplexMatrix, &ComplexMatrix, f64)> = vec![
        ("Sx (x) Sx", &ops.sx, &ops.sx, 1.0),
        ("Sy (x) Sy", &ops.sy, &ops.sy, -1.0),
        ("Sz (x) Sz", &ops.sz, &ops.sz, 1.0),
        ("1 (x) 1", &id, &id, 16.0 / 3.0),
        ("1 (x) Sx^2", &id, &ops.sx2, -4.0),
        ("1 (x) Sy^2", &id, &ops.sy2, -4.0),
        ("Sx^2 (x) 1", &ops.sx2, &id, -4.0),
        ("Sy^2 (x) 1", &ops.sy2, &id, -4.0),
        ("Sx^2 (x) Sx^2", &ops.sx2, &ops.sx2, 4.0),
        ("Sy^2 (x) Sy^2", &ops.sy2, &ops.sy2, 4.0),
        ("Sx^2 (x) Sy^2", &ops.sx2, &ops.sy2, 2.0),
        ("Sy^2 (x) Sx^2", &ops.sy2, &ops.sx2, 2.0),
        ("{Sz,Sx} (x) {Sz,Sx}", &ops.azx, &ops.azx, 1.0),
        ("{Sy,Sz} (x) {Sy,Sz}", &ops.ayz, &ops.ayz, -1.0),
        ("{Sx,Sy} (x) {Sx,Sy}", &ops.axy, &ops.axy, -1.0),
    ];

    let mut terms = Vec::with_capacity(plan.len());
    let mut lambda_expectation = 0.0;
    for (observable, left, right, lambda_coefficient) in plan {
        let value = hs_inner(&kron(left, right), rho.matrix())?;
        if value.im.abs() > 1e-9 {
            return Err(Error::NotReal { imag: value.im });
        }
        lambda_expectation += lambda_coefficient * value.re;
        terms.push(ExpectationTerm {
            observable: observable.to_string(),
            value: value.re,
            lambda_coefficient,
        });
    }

    let witness_expectation =
        (1.0 / (3.0 * 2f64.sqrt())) - lambda_expectation / (4.0 * 2f64.sqrt());
    Ok(ExpectationReport {
        terms,
        lambda_expectation,
        witness_expectation,
    })
}
