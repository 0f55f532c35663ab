//! Hilbert-Schmidt entanglement measure and optimal witnesses.
//!
//! The measure of an entangled state is its Hilbert-Schmidt distance to the
//! set S of separable states, D(ρ_ent) = min_{ρ∈S} ‖ρ − ρ_ent‖. A witness A
//! is a Hermitian operator with Tr(ρA) ≥ 0 on all of S and Tr(ρ_ent A) < 0;
//! it is optimal when it additionally vanishes on some separable ρ₀, i.e.
//! defines a tangent plane to S. The maximal violation B of the witness
//! inequality equals D, attained at
//!
//!   A_opt = (ρ₀ − ρ_ent − ⟨ρ₀, ρ₀ − ρ_ent⟩𝟙) / ‖ρ₀ − ρ_ent‖.
//!
//! For isotropic states everything is closed-form: the nearest separable
//! state sits at α = 1/(d+1), D = (√(d²−1)/d)(α − 1/(d+1)), and A_opt can
//! be written over any of the three bases via Λ = 2T = (2/d)U. For other
//! states the same formula doubles as the *guess method*: build the
//! candidate operator from a guessed ρ̃ and check whether it actually is a
//! witness; it is if and only if ρ̃ is the nearest separable state.
//!
//! Separability checks here sample pure product states: the extreme points
//! of S are pure products, so the minimum of a linear functional over S is
//! attained on them.

use crate::bases::BasisFamily;
use crate::bloch::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{hs_inner, hs_norm, Complex64, ComplexMatrix};
use crate::states::{
    bell_state, isotropic_state, lambda_operator, random_pure_product_state, t_operator,
    u_operator, IsotropicParams,
};
use crate::DEFAULT_TOL;

/// A Hermitian entanglement witness with its construction metadata.
#[derive(Clone, Debug)]
pub struct EntanglementWitness {
    operator: ComplexMatrix,
    /// Local dimension d; the operator acts on d².
    dim: usize,
    /// Basis used for the closed-form construction; `None` when the witness
    /// came straight from a state pair (guess method) or a raw operator.
    family_used: Option<BasisFamily>,
    /// ‖ρ̃ − ρ_ent‖ of the construction, the denominator of the witness
    /// formula. Zero when the witness was not derived from a state pair.
    direction_norm: f64,
    /// The entangled state the witness was built to detect.
    target: DensityMatrix,
}

impl EntanglementWitness {
    /// Wraps an arbitrary Hermitian operator as a witness candidate against
    /// a chosen target state.
    pub fn from_operator(operator: ComplexMatrix, target: DensityMatrix) -> Result<Self> {
        let dev = operator.hermiticity_deviation()?;
        if dev > DEFAULT_TOL {
            return Err(Error::NotHermitian {
                deviation: dev,
                tol: DEFAULT_TOL,
            });
        }
        if operator.rows() != target.dim() {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", operator.rows(), operator.cols()),
                right: format!("{0}x{0}", target.dim()),
            });
        }
        let d = (operator.rows() as f64).sqrt().round() as usize;
        if d < 2 || d * d != operator.rows() {
            return Err(Error::InvalidDimension {
                dim: operator.rows(),
                reason: "witnesses act on two-qudit spaces of dimension d²".into(),
            });
        }
        Ok(Self {
            operator,
            dim: d,
            family_used: None,
            direction_norm: 0.0,
            target,
        })
    }

    pub fn operator(&self) -> &ComplexMatrix {
        &self.operator
    }

    /// Local dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family_used(&self) -> Option<BasisFamily> {
        self.family_used
    }

    pub fn direction_norm(&self) -> f64 {
        self.direction_norm
    }

    pub fn target(&self) -> &DensityMatrix {
        &self.target
    }
}

/// Verdict of a sampling check over random pure product states.
#[derive(Clone, Copy, Debug)]
pub struct WitnessVerdict {
    /// Minimum of Tr(ρ A) over the sampled separable states.
    pub min_sep_expectation: f64,
    pub n_samples: usize,
    /// True when the witness is negative on its target and nonnegative
    /// (within tolerance) on every sampled separable state.
    pub detected: bool,
    /// Tr(ρ_target A).
    pub value_on_target: f64,
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        Err(Error::InvalidDimension {
            dim: d,
            reason: "witness constructions need local dimension at least 2".into(),
        })
    } else {
        Ok(())
    }
}

/// Requires α in the entangled interval [1/(d+1), 1]. The lower end is the
/// separability boundary itself, where measure and violation are both zero.
fn check_entangled_alpha(d: usize, alpha: f64) -> Result<()> {
    let threshold = IsotropicParams::entanglement_threshold(d);
    if !(alpha.is_finite() && alpha >= threshold && alpha <= 1.0) {
        return Err(Error::AlphaNotEntangled { alpha, threshold });
    }
    Ok(())
}

/// The separable state nearest to the entangled isotropic family: the
/// isotropic state at the threshold α = 1/(d+1).
pub fn nearest_separable_iso(d: usize) -> Result<DensityMatrix> {
    check_dim(d)?;
    isotropic_state(d, IsotropicParams::entanglement_threshold(d))
}

/// Hilbert-Schmidt measure of the isotropic state,
/// D = (√(d²−1)/d)(α − 1/(d+1)), for α in the entangled range.
pub fn hs_measure_iso(d: usize, alpha: f64) -> Result<f64> {
    check_dim(d)?;
    check_entangled_alpha(d, alpha)?;
    let df = d as f64;
    Ok(((df * df - 1.0).sqrt() / df) * (alpha - 1.0 / (df + 1.0)))
}

/// Closed-form optimal witness for entangled isotropic states:
/// A_opt = (1/d)√((d−1)/(d+1)) 𝟙⊗𝟙 − Λ/(2√(d²−1)), with the Λ term
/// equivalently built as T/√(d²−1) or U/(d√(d²−1)). All three give the
/// same operator; `family` records which route was taken.
pub fn optimal_witness_iso(d: usize, family: BasisFamily) -> Result<EntanglementWitness> {
    check_dim(d)?;
    let df = d as f64;
    let norm_sq_minus_one = (df * df - 1.0).sqrt();
    let identity_coeff = ((df - 1.0) / (df + 1.0)).sqrt() / df;
    let (correlation, coeff) = match family {
        BasisFamily::Ggm => (lambda_operator(d)?, 1.0 / (2.0 * norm_sq_minus_one)),
        BasisFamily::Pob => (t_operator(d)?, 1.0 / norm_sq_minus_one),
        BasisFamily::Wob => (u_operator(d)?, 1.0 / (df * norm_sq_minus_one)),
    };
    let operator = ComplexMatrix::identity(d * d)
        .scale_re(identity_coeff)
        .sub(&correlation.scale_re(coeff))?;
    // Direction taken toward the fully entangled end of the family (α = 1):
    // ‖ρ₀ − ρ_{α=1}‖ = √(d²−1)/(d+1).
    let direction_norm = norm_sq_minus_one / (df + 1.0);
    Ok(EntanglementWitness {
        operator,
        dim: d,
        family_used: Some(family),
        direction_norm,
        target: bell_state(d)?,
    })
}

/// Guess-method operator for a candidate nearest separable state ρ̃:
/// C̃ = (ρ̃ − ρ_ent − ⟨ρ̃, ρ̃ − ρ_ent⟩𝟙)/‖ρ̃ − ρ_ent‖.
///
/// C̃ is an entanglement witness if and only if ρ̃ really is the nearest
/// separable state, so run [`verify_witness`] on the result to apply the
/// test; a verdict with negative separable expectations rejects the guess.
pub fn guess_witness(
    rho_guess: &DensityMatrix,
    rho_ent: &DensityMatrix,
) -> Result<EntanglementWitness> {
    if rho_guess.dim() != rho_ent.dim() {
        return Err(Error::DimensionMismatch {
            left: format!("{0}x{0}", rho_guess.dim()),
            right: format!("{0}x{0}", rho_ent.dim()),
        });
    }
    let total = rho_guess.dim();
    let d = (total as f64).sqrt().round() as usize;
    if d < 2 || d * d != total {
        return Err(Error::InvalidDimension {
            dim: total,
            reason: "guess witnesses act on two-qudit spaces of dimension d²".into(),
        });
    }
    let direction = rho_guess.matrix().sub(rho_ent.matrix())?;
    let norm = hs_norm(&direction)?;
    if norm <= DEFAULT_TOL {
        return Err(Error::ZeroDirection);
    }
    let offset = hs_inner(rho_guess.matrix(), &direction)?.re;
    let operator = direction
        .sub(&ComplexMatrix::identity(total).scale_re(offset))?
        .scale_re(1.0 / norm);
    Ok(EntanglementWitness {
        operator,
        dim: d,
        family_used: None,
        direction_norm: norm,
        target: rho_ent.clone(),
    })
}

/// Expectation value Tr(A ρ) of a witness on a state. The imaginary part
/// must vanish (both operators are Hermitian); anything above 1e−9 reports
/// an error instead of being silently dropped.
pub fn eval_witness(w: &EntanglementWitness, rho: &DensityMatrix) -> Result<f64> {
    let value = hs_inner(&w.operator, rho.matrix())?;
    if value.im.abs() > 1e-9 {
        return Err(Error::NotReal { imag: value.im });
    }
    Ok(value.re)
}

/// Derives the per-sample seed for [`verify_witness`]. SplitMix64 over
/// (seed, index) keeps samples order-independent and reproducible.
fn sample_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Samples `n_samples` random pure product states and evaluates the witness
/// on each. `detected` requires the witness to be strictly negative on its
/// target and to stay above −1e−9 on every sampled separable state (the
/// tangent witness touches zero, so exact nonnegativity is one rounding
/// error too strict).
pub fn verify_witness(
    w: &EntanglementWitness,
    d: usize,
    n_samples: usize,
    seed: u64,
) -> Result<WitnessVerdict> {
    if d != w.dim() {
        return Err(Error::DimensionMismatch {
            left: format!("witness local dimension {}", w.dim()),
            right: format!("requested dimension {d}"),
        });
    }
    if n_samples == 0 {
        return Err(Error::InvalidDimension {
            dim: 0,
            reason: "verification needs at least one sample".into(),
        });
    }
    let mut min_sep_expectation = f64::INFINITY;
    for index in 0..n_samples {
        let product = random_pure_product_state(d, sample_seed(seed, index as u64))?;
        let value = eval_witness(w, &product)?;
        min_sep_expectation = min_sep_expectation.min(value);
    }
    let value_on_target = eval_witness(w, &w.target)?;
    Ok(WitnessVerdict {
        min_sep_expectation,
        n_samples,
        detected: value_on_target < -1e-9 && min_sep_expectation >= -1e-9,
        value_on_target,
    })
}

/// Maximal violation of the witness inequality for the isotropic state,
/// −⟨ρ_α, A_opt⟩. Equals the Hilbert-Schmidt measure [`hs_measure_iso`].
pub fn max_violation_iso(d: usize, alpha: f64) -> Result<f64> {
    check_dim(d)?;
    check_entangled_alpha(d, alpha)?;
    let witness = optimal_witness_iso(d, BasisFamily::Ggm)?;
    let rho = isotropic_state(d, alpha)?;
    Ok(-eval_witness(&witness, &rho)?)
}

/// Scalar product helper exposed for reporting: ⟨ρ, σ⟩ as a complex value.
pub fn state_overlap(a: &DensityMatrix, b: &DensityMatrix) -> Result<Complex64> {
    hs_inner(a.matrix(), b.matrix())
}
