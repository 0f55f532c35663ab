//! Bloch vector encoding and decoding of density matrices.
//!
//! A density matrix decomposes as ρ = (1/d)𝟙 + Σ_i b_i A_i over any of the
//! three operator bases; the coefficient vector b is the Bloch vector. The
//! identity coefficient is fixed to 1/d by the unit trace and is never
//! stored.
//!
//! Components are extracted as b_i = Tr(A_i†ρ)/N, with N the basis
//! orthogonality constant. Note the 1/N: conventions that drop it are not
//! self-consistent with the radius bounds below (a pure qubit would sit at
//! radius 1 instead of 1/√2 in the Gell-Mann basis), so the normalized
//! projection is used for every family. With it, pure states lie exactly on
//! the family bound and reconstruct∘decompose is the identity.

use num_complex::Complex;

use crate::bases::{ggm_element, pob_element, wob_element};
use crate::bases::{BasisElementLabel, BasisFamily, OperatorBasis};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, hs_inner, kron, Complex64, ComplexMatrix};

/// A validated density matrix: Hermitian, unit trace, positive semidefinite,
/// all within the stored tolerance.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    tol: f64,
}

impl DensityMatrix {
    /// Validates and wraps a candidate density matrix. Each failed invariant
    /// reports its own error so callers can name what went wrong.
    pub fn new(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let dev = matrix.hermiticity_deviation()?;
        if dev > tol {
            return Err(Error::NotHermitian {
                deviation: dev,
                tol,
            });
        }
        let trace = matrix.trace();
        if (trace - Complex64::ONE).norm() > tol {
            return Err(Error::TraceNotOne {
                trace: format!("{:+.12}{:+.12}i", trace.re, trace.im),
                tol,
            });
        }
        let eigs = hermitian_eigenvalues(&matrix, tol)?;
        if let Some(&min) = eigs.first() {
            if min < -tol {
                return Err(Error::NotPositiveSemidefinite {
                    min_eigenvalue: min,
                    tol,
                });
            }
        }
        Ok(Self { matrix, tol })
    }

    /// Wraps a matrix that is a valid state by construction (normalized
    /// projectors, convex mixtures of states). Debug builds still verify
    /// the cheap invariants.
    pub(crate) fn new_unchecked(matrix: ComplexMatrix, tol: f64) -> Self {
        debug_assert!(matrix.is_hermitian(tol));
        debug_assert!((matrix.trace() - Complex64::ONE).norm() <= tol);
        Self { matrix, tol }
    }

    /// Builds the pure state |ψ⟩⟨ψ| from a (not necessarily normalized)
    /// state vector.
    pub fn from_pure_vector(psi: &[Complex64], tol: f64) -> Result<Self> {
        let norm_sq: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if !(norm_sq.is_finite() && norm_sq > 0.0) {
            return Err(Error::NonFinite);
        }
        let scale = 1.0 / norm_sq.sqrt();
        let normalized: Vec<Complex64> = psi.iter().map(|z| z * scale).collect();
        Ok(Self::new_unchecked(
            ComplexMatrix::outer(&normalized, &normalized),
            tol,
        ))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Tr ρ², which is 1/d for the maximally mixed state and 1 for pure
    /// states. Equals 1/d + N·‖b‖² for the Bloch vector in any family.
    pub fn purity(&self) -> f64 {
        self.matrix.entries().iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Bloch vector of a state in one of the three bases. Components are
/// ordered exactly like [`OperatorBasis::traceless_elements`]; the implicit
/// identity coefficient 1/d is not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BlochVector {
    family: BasisFamily,
    dim: usize,
    components: Vec<Complex64>,
}

impl BlochVector {
    /// Assembles a Bloch vector from raw components (length must be d²−1).
    pub fn new(family: BasisFamily, dim: usize, components: Vec<Complex64>) -> Result<Self> {
        if components.len() != dim * dim - 1 {
            return Err(Error::BadComponentCount {
                expected: dim * dim - 1,
                found: components.len(),
            });
        }
        Ok(Self {
            family,
            dim,
            components,
        })
    }

    pub fn family(&self) -> BasisFamily {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    /// Labels aligned with the component order.
    pub fn labels(&self) -> Result<Vec<BasisElementLabel>> {
        Ok(OperatorBasis::generate(self.family, self.dim)?
            .traceless_elements()
            .iter()
            .map(|(l, _)| *l)
            .collect())
    }

    /// Euclidean length of the component vector, |b| = sqrt(Σ|b_i|²).
    pub fn radius(&self) -> f64 {
        self.components
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Family-specific hypersphere radius that contains all states: pure states
/// sit exactly on it, the maximally mixed state at the origin.
pub fn radius_bound(family: BasisFamily, d: usize) -> f64 {
    let d = d as f64;
    match family {
        BasisFamily::Ggm => ((d - 1.0) / (2.0 * d)).sqrt(),
        BasisFamily::Pob => ((d - 1.0) / d).sqrt(),
        BasisFamily::Wob => (d - 1.0).sqrt() / d,
    }
}

/// Projects a density matrix onto the chosen basis: b_i = Tr(A_i†ρ)/N.
pub fn decompose(rho: &DensityMatrix, family: BasisFamily) -> Result<BlochVector> {
    let d = rho.dim();
    if d < 2 {
        return Err(Error::InvalidDimension {
            dim: d,
            reason: "Bloch decomposition needs dimension at least 2".into(),
        });
    }
    let basis = OperatorBasis::generate(family, d)?;
    let n = basis.norm_constant();
    let components = basis
        .traceless_elements()
        .iter()
        .map(|(_, a)| Ok(hs_inner(a, rho.matrix())? / n))
        .collect::<Result<Vec<_>>>()?;
    BlochVector::new(family, d, components)
}

/// Result of [`reconstruct`]: either a valid state or the assembled matrix
/// flagged with the offending eigenvalue. Vectors inside the Bloch
/// hypersphere are not automatically states, so the non-state outcome is a
/// legitimate answer, not an error.
#[derive(Clone, Debug)]
pub enum Reconstruction {
    State(DensityMatrix),
    NonState {
        matrix: ComplexMatrix,
        min_eigenvalue: f64,
    },
}

impl Reconstruction {
    pub fn is_state(&self) -> bool {
        matches!(self, Reconstruction::State(_))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        match self {
            Reconstruction::State(rho) => rho.matrix(),
            Reconstruction::NonState { matrix, .. } => matrix,
        }
    }

    pub fn into_state(self) -> Option<DensityMatrix> {
        match self {
            Reconstruction::State(rho) => Some(rho),
            Reconstruction::NonState { .. } => None,
        }
    }
}

/// Assembles (1/d)𝟙 + Σ b_i A_i from a Bloch vector.
///
/// Hermiticity and unit trace of the result are enforced (a component
/// vector violating the family's conjugation constraints is rejected);
/// positivity is reported through the [`Reconstruction`] flag instead.
pub fn reconstruct(b: &BlochVector, tol: f64) -> Result<Reconstruction> {
    let d = b.dim();
    let basis = OperatorBasis::generate(b.family(), d)?;
    let mut matrix = ComplexMatrix::identity(d).scale_re(1.0 / d as f64);
    for ((_, a), &coeff) in basis.traceless_elements().iter().zip(b.components()) {
        matrix = matrix.add(&a.scale(coeff))?;
    }

    let dev = matrix.hermiticity_deviation()?;
    if dev > tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol,
        });
    }
    let trace = matrix.trace();
    if (trace - Complex64::ONE).norm() > tol {
        return Err(Error::TraceNotOne {
            trace: format!("{:+.12}{:+.12}i", trace.re, trace.im),
            tol,
        });
    }
    let eigs = hermitian_eigenvalues(&matrix, tol)?;
    let min = eigs.first().copied().unwrap_or(0.0);
    if min < -tol {
        Ok(Reconstruction::NonState {
            matrix,
            min_eigenvalue: min,
        })
    } else {
        Ok(Reconstruction::State(DensityMatrix::new_unchecked(
            matrix, tol,
        )))
    }
}

/// Expansion of one standard matrix |j⟩⟨k| over a basis: an identity
/// coefficient (population expansions only) plus labeled basis coefficients.
#[derive(Clone, Debug)]
pub struct CoefficientMap {
    pub family: BasisFamily,
    pub dim: usize,
    /// Coefficient of the bare d×d identity. Zero for the polarization and
    /// Weyl families, whose identity share lives in the T_00 / U_00 terms.
    pub identity: Complex64,
    pub terms: Vec<(BasisElementLabel, Complex64)>,
}

impl CoefficientMap {
    /// Evaluates the map back into a matrix (used by tests and the CLI to
    /// verify reconstruction).
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let mut out = ComplexMatrix::identity(self.dim).scale(self.identity);
        for &(label, coeff) in &self.terms {
            let element = match label {
                BasisElementLabel::Pob { l, m } => pob_element(self.dim, l, m)?,
                BasisElementLabel::Wob { n, m } => wob_element(self.dim, n, m)?,
                _ => ggm_element(self.dim, label)?,
            };
            out = out.add(&element.scale(coeff))?;
        }
        Ok(out)
    }
}

/// Gell-Mann expansion of |j⟩⟨k| (1-based indices).
///
/// Off-diagonal dyads combine one symmetric and one antisymmetric
/// generator; populations |j⟩⟨j| telescope through the diagonal generators
/// and pick up the identity share 1/d.
pub fn expand_standard_ggb(d: usize, j: usize, k: usize) -> Result<CoefficientMap> {
    if j < 1 || j > d || k < 1 || k > d {
        return Err(Error::InvalidLabel {
            reason: format!("standard matrix indices ({j},{k}) out of 1..={d}"),
        });
    }
    let mut map = CoefficientMap {
        family: BasisFamily::Ggm,
        dim: d,
        identity: Complex64::ZERO,
        terms: Vec::new(),
    };
    if j < k {
        map.terms.push((
            BasisElementLabel::GgmSymmetric { j, k },
            Complex::new(0.5, 0.0),
        ));
        map.terms.push((
            BasisElementLabel::GgmAntisymmetric { j, k },
            Complex::new(0.0, 0.5),
        ));
    } else if j > k {
        map.terms.push((
            BasisElementLabel::GgmSymmetric { j: k, k: j },
            Complex::new(0.5, 0.0),
        ));
        map.terms.push((
            BasisElementLabel::GgmAntisymmetric { j: k, k: j },
            Complex::new(0.0, -0.5),
        ));
    } else {
        if j > 1 {
            let coeff = -(((j - 1) as f64) / (2.0 * j as f64)).sqrt();
            map.terms.push((
                BasisElementLabel::GgmDiagonal { l: j - 1 },
                Complex::new(coeff, 0.0),
            ));
        }
        for l in j..d {
            let coeff = 1.0 / (2.0 * (l as f64) * ((l + 1) as f64)).sqrt();
            map.terms
                .push((BasisElementLabel::GgmDiagonal { l }, Complex::new(coeff, 0.0)));
        }
        map.identity = Complex::new(1.0 / d as f64, 0.0);
    }
    Ok(map)
}

/// Polarization expansion of |i⟩⟨j| (1-based): the coefficient on T_LM is
/// sqrt((2L+1)/(2s+1)) C^{s m_i}_{s m_j, LM}, with M pinned to m_i − m_j.
pub fn expand_standard_pob(d: usize, i: usize, j: usize) -> Result<CoefficientMap> {
    if i < 1 || i > d || j < 1 || j > d {
        return Err(Error::InvalidLabel {
            reason: format!("standard matrix indices ({i},{j}) out of 1..={d}"),
        });
    }
    use crate::angular::{clebsch_gordan, CgLabel, HalfInteger};
    let two_s = d as i64 - 1;
    let s = HalfInteger::new(two_s);
    let m_i = HalfInteger::new(two_s - 2 * (i as i64 - 1));
    let m_j = HalfInteger::new(two_s - 2 * (j as i64 - 1));
    let m_fixed = j as i64 - i as i64; // integer M with m_j + M = m_i

    let mut map = CoefficientMap {
        family: BasisFamily::Pob,
        dim: d,
        identity: Complex64::ZERO,
        terms: Vec::new(),
    };
    for l in m_fixed.abs()..=two_s {
        let coeff = ((2 * l + 1) as f64 / d as f64).sqrt()
            * clebsch_gordan(&CgLabel::new(
                s,
                m_j,
                HalfInteger::from_int(l),
                HalfInteger::from_int(m_fixed),
                s,
                m_i,
            )?)?;
        map.terms.push((
            BasisElementLabel::Pob { l, m: m_fixed },
            Complex::new(coeff, 0.0),
        ));
    }
    Ok(map)
}

/// Weyl expansion of |j⟩⟨k| (0-based):
/// |j⟩⟨k| = (1/d) Σ_l e^{−2πi lj/d} U_{l, (k−j) mod d}.
pub fn expand_standard_wob(d: usize, j: usize, k: usize) -> Result<CoefficientMap> {
    if j >= d || k >= d {
        return Err(Error::InvalidLabel {
            reason: format!("standard matrix indices ({j},{k}) out of 0..{d}"),
        });
    }
    let shift = (k + d - j) % d;
    let mut map = CoefficientMap {
        family: BasisFamily::Wob,
        dim: d,
        identity: Complex64::ZERO,
        terms: Vec::new(),
    };
    for l in 0..d {
        let angle = -std::f64::consts::TAU * ((l * j) % d) as f64 / d as f64;
        map.terms.push((
            BasisElementLabel::Wob { n: l, m: shift },
            Complex::new(angle.cos(), angle.sin()).scale(1.0 / d as f64),
        ));
    }
    Ok(map)
}

/// Two-qudit decomposition
/// ρ = (1/d²)𝟙⊗𝟙 + Σ n_i Γ_i⊗𝟙 + Σ m_i 𝟙⊗Γ_i + Σ c_ij Γ_i⊗Γ_j
/// with coefficients over the d²−1 traceless elements of one family.
#[derive(Clone, Debug)]
pub struct BipartiteBlochDecomposition {
    /// Local dimension d (the state lives on d²).
    pub dim: usize,
    pub family: BasisFamily,
    /// Coefficients of Γ_i ⊗ 𝟙.
    pub n_coeffs: Vec<Complex64>,
    /// Coefficients of 𝟙 ⊗ Γ_i.
    pub m_coeffs: Vec<Complex64>,
    /// Row-major (d²−1)×(d²−1) grid of Γ_i ⊗ Γ_j coefficients.
    pub c_matrix: Vec<Complex64>,
}

impl BipartiteBlochDecomposition {
    pub fn c(&self, i: usize, j: usize) -> Complex64 {
        self.c_matrix[i * (self.dim * self.dim - 1) + j]
    }

    pub fn labels(&self) -> Result<Vec<BasisElementLabel>> {
        Ok(OperatorBasis::generate(self.family, self.dim)?
            .traceless_elements()
            .iter()
            .map(|(l, _)| *l)
            .collect())
    }

    /// Reassembles the full d²×d² matrix from the stored coefficients.
    pub fn reconstruct(&self) -> Result<ComplexMatrix> {
        let d = self.dim;
        let basis = OperatorBasis::generate(self.family, d)?;
        let elements = basis.traceless_elements();
        let id = ComplexMatrix::identity(d);
        let mut out = ComplexMatrix::identity(d * d).scale_re(1.0 / (d * d) as f64);
        for (i, (_, gamma)) in elements.iter().enumerate() {
            out = out.add(&kron(gamma, &id).scale(self.n_coeffs[i]))?;
            out = out.add(&kron(&id, gamma).scale(self.m_coeffs[i]))?;
        }
        for (i, (_, gi)) in elements.iter().enumerate() {
            for (j, (_, gj)) in elements.iter().enumerate() {
                let coeff = self.c(i, j);
                if coeff.norm_sqr() > 0.0 {
                    out = out.add(&kron(gi, gj).scale(coeff))?;
                }
            }
        }
        Ok(out)
    }
}

/// Decomposes a two-qudit state (dimension must be a perfect square d² with
/// d ≥ 2) by Hilbert-Schmidt projection onto 𝟙⊗𝟙, Γ_i⊗𝟙, 𝟙⊗Γ_i and
/// Γ_i⊗Γ_j, each divided by the product of the factors' norm constants.
pub fn decompose_bipartite(
    rho: &DensityMatrix,
    family: BasisFamily,
) -> Result<BipartiteBlochDecomposition> {
    let total = rho.dim();
    let d = (total as f64).sqrt().round() as usize;
    if d < 2 || d * d != total {
        return Err(Error::InvalidDimension {
            dim: total,
            reason: "bipartite decomposition needs a perfect-square dimension d² with d >= 2"
                .into(),
        });
    }
    let basis = OperatorBasis::generate(family, d)?;
    let elements = basis.traceless_elements();
    let n_const = basis.norm_constant();
    let id = ComplexMatrix::identity(d);
    let id_norm = d as f64; // Tr 𝟙†𝟙

    let mut n_coeffs = Vec::with_capacity(elements.len());
    let mut m_coeffs = Vec::with_capacity(elements.len());
    for (_, gamma) in elements {
        n_coeffs.push(hs_inner(&kron(gamma, &id), rho.matrix())? / (n_const * id_norm));
        m_coeffs.push(hs_inner(&kron(&id, gamma), rho.matrix())? / (n_const * id_norm));
    }
    let mut c_matrix = Vec::with_capacity(elements.len() * elements.len());
    for (_, gi) in elements {
        for (_, gj) in elements {
            c_matrix.push(hs_inner(&kron(gi, gj), rho.matrix())? / (n_const * n_const));
        }
    }
    Ok(BipartiteBlochDecomposition {
        dim: d,
        family,
        n_coeffs,
        m_coeffs,
        c_matrix,
    })
}
