//! Reference states and two-qudit correlation operators.
//!
//! Provides the maximally entangled state |φ₊⟩ = (1/√d) Σ_j |j⟩⊗|j⟩, the
//! isotropic one-parameter family that mixes it with white noise, and the
//! three correlation operators Λ, T, U that carry the entangled part of
//! those states in the Gell-Mann, polarization and Weyl bases:
//!
//! |φ₊⟩⟨φ₊| = (1/d²)𝟙⊗𝟙 + (1/2d)Λ = (1/d²)𝟙⊗𝟙 + (1/d)T
//!          = (1/d²)𝟙⊗𝟙 + (1/d²)U,
//!
//! so Λ = 2T and T = U/d. The operators are assembled from the basis
//! matrices themselves, not from |φ₊⟩⟨φ₊|, which keeps the identities above
//! genuine cross-checks instead of tautologies.
//!
//! Seeded Gaussian state generators for test corpora live here as well.
//! They draw from a ChaCha8 stream seeded with `seed_from_u64`; entries are
//! standard complex Gaussians taken in index order (real part then
//! imaginary part, subsystem A before subsystem B), so a fixed seed yields
//! the same state on every platform.

use num_complex::Complex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bases::{ggm_basis, pob_basis, wob_basis};
use crate::bloch::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{kron, Complex64, ComplexMatrix};
use crate::DEFAULT_TOL;

/// Parameters of the isotropic two-qudit state: a mixing weight α on the
/// maximally entangled state, admissible iff −1/(d²−1) ≤ α ≤ 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsotropicParams {
    dim: usize,
    alpha: f64,
}

impl IsotropicParams {
    pub fn new(dim: usize, alpha: f64) -> Result<Self> {
        check_dim(dim)?;
        let min = Self::alpha_min(dim);
        if !(alpha.is_finite() && (min..=1.0).contains(&alpha)) {
            return Err(Error::AlphaOutOfRange { alpha, min });
        }
        Ok(Self { dim, alpha })
    }

    /// Lower end of the admissible interval, −1/(d²−1); positivity of the
    /// state fails below it.
    pub fn alpha_min(dim: usize) -> f64 {
        -1.0 / ((dim * dim - 1) as f64)
    }

    /// Entanglement threshold 1/(d+1): the state is entangled iff α exceeds
    /// it, and the nearest separable state sits exactly on it.
    pub fn entanglement_threshold(dim: usize) -> f64 {
        1.0 / (dim as f64 + 1.0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn is_entangled(&self) -> bool {
        self.alpha > Self::entanglement_threshold(self.dim)
    }
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        Err(Error::InvalidDimension {
            dim: d,
            reason: "two-qudit constructions need local dimension at least 2".into(),
        })
    } else {
        Ok(())
    }
}

/// State vector of |φ₊⟩ = (1/√d) Σ_j |j⟩⊗|j⟩ in the computational basis.
pub fn bell_vector(d: usize) -> Result<Vec<Complex64>> {
    check_dim(d)?;
    let amp = 1.0 / (d as f64).sqrt();
    let mut psi = vec![Complex64::ZERO; d * d];
    for j in 0..d {
        psi[j * d + j] = Complex::new(amp, 0.0);
    }
    Ok(psi)
}

/// Maximally entangled two-qudit state |φ₊⟩⟨φ₊| as a d²×d² density matrix.
pub fn bell_state(d: usize) -> Result<DensityMatrix> {
    DensityMatrix::from_pure_vector(&bell_vector(d)?, DEFAULT_TOL)
}

/// Isotropic state α|φ₊⟩⟨φ₊| + (1−α)/d² 𝟙.
pub fn isotropic(params: IsotropicParams) -> Result<DensityMatrix> {
    let d = params.dim();
    let bell = bell_state(d)?;
    let noise = ComplexMatrix::identity(d * d).scale_re((1.0 - params.alpha()) / (d * d) as f64);
    let matrix = bell.matrix().scale_re(params.alpha()).add(&noise)?;
    // Convex within the admissible interval by construction; the boundary
    // α = −1/(d²−1) has an exact zero eigenvalue.
    Ok(DensityMatrix::new_unchecked(matrix, DEFAULT_TOL))
}

/// Convenience wrapper: validated isotropic state straight from (d, α).
pub fn isotropic_state(d: usize, alpha: f64) -> Result<DensityMatrix> {
    isotropic(IsotropicParams::new(d, alpha)?)
}

/// Gell-Mann correlation operator
/// Λ = Σ_{j<k} Λ_s^{jk}⊗Λ_s^{jk} − Σ_{j<k} Λ_a^{jk}⊗Λ_a^{jk} + Σ_l Λ^l⊗Λ^l.
pub fn lambda_operator(d: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let basis = ggm_basis(d)?;
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for (label, gamma) in basis.elements() {
        let term = kron(gamma, gamma);
        out = match label {
            crate::bases::BasisElementLabel::GgmAntisymmetric { .. } => out.sub(&term)?,
            _ => out.add(&term)?,
        };
    }
    Ok(out)
}

/// Polarization correlation operator T = Σ_{(L,M)≠(0,0)} T_LM ⊗ T_LM.
pub fn t_operator(d: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let basis = pob_basis(d)?;
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for (_, t) in basis.traceless_elements() {
        out = out.add(&kron(t, t))?;
    }
    Ok(out)
}

/// Weyl correlation operator U = Σ_{(l,m)≠(0,0)} U_lm ⊗ U_{−l mod d, m}.
pub fn u_operator(d: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let basis = wob_basis(d)?;
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for (label, u) in basis.traceless_elements() {
        let crate::bases::BasisElementLabel::Wob { n, m } = label else {
            unreachable!("weyl basis carries weyl labels");
        };
        let partner = basis
            .element_by_label(crate::bases::BasisElementLabel::Wob {
                n: (d - n) % d,
                m: *m,
            })
            .expect("negated index stays in range");
        out = out.add(&kron(u, partner))?;
    }
    Ok(out)
}

/// Transposes subsystem B of a (d·d)×(d·d) matrix. Positivity after the
/// partial transpose is necessary for separability, so this is the standard
/// diagnostic companion to the witness machinery.
pub fn partial_transpose(m: &ComplexMatrix, d: usize) -> Result<ComplexMatrix> {
    if m.rows() != d * d || m.cols() != d * d {
        return Err(Error::DimensionMismatch {
            left: format!("{}x{}", m.rows(), m.cols()),
            right: format!("{0}x{0} (d = {1})", d * d, d),
        });
    }
    Ok(ComplexMatrix::from_fn(d * d, d * d, |row, col| {
        let (a_row, b_row) = (row / d, row % d);
        let (a_col, b_col) = (col / d, col % d);
        m[(a_row * d + b_col, a_col * d + b_row)]
    }))
}

fn gaussian_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex::new(re, im)
        })
        .collect()
}

/// Haar-random pure state |ψ⟩⟨ψ| of dimension d from normalized standard
/// complex Gaussian entries. Deterministic per seed.
pub fn random_pure_state(d: usize, seed: u64) -> Result<DensityMatrix> {
    check_dim(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let psi = gaussian_vector(&mut rng, d);
    DensityMatrix::from_pure_vector(&psi, DEFAULT_TOL)
}

/// Random pure product state |ψ_A⟩⟨ψ_A| ⊗ |ψ_B⟩⟨ψ_B| on d². Both factors
/// come from one ChaCha8 stream (A's entries first). Deterministic per seed.
pub fn random_pure_product_state(d: usize, seed: u64) -> Result<DensityMatrix> {
    check_dim(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let psi_a = gaussian_vector(&mut rng, d);
    let psi_b = gaussian_vector(&mut rng, d);
    let rho_a = DensityMatrix::from_pure_vector(&psi_a, DEFAULT_TOL)?;
    let rho_b = DensityMatrix::from_pure_vector(&psi_b, DEFAULT_TOL)?;
    Ok(DensityMatrix::new_unchecked(
        kron(rho_a.matrix(), rho_b.matrix()),
        DEFAULT_TOL,
    ))
}

/// Random full-rank density matrix G G†/Tr(G G†) with G a d×d standard
/// complex Gaussian matrix. Deterministic per seed.
pub fn random_density_matrix(d: usize, seed: u64) -> Result<DensityMatrix> {
    check_dim(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = ComplexMatrix::from_vec(d, d, gaussian_vector(&mut rng, d * d))?;
    let gram = g.mul(&g.dagger())?;
    let trace = gram.trace().re;
    Ok(DensityMatrix::new_unchecked(
        gram.scale_re(1.0 / trace),
        DEFAULT_TOL,
    ))
}
