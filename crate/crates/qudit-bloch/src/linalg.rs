//! Dense complex-matrix kernel.
//!
//! Everything else in the crate runs on [`ComplexMatrix`]: a row-major,
//! immutable d×d (or rectangular) matrix of `Complex<f64>`. The module
//! provides the Hilbert-Schmidt inner product and norm, Kronecker products,
//! and a cyclic Jacobi eigensolver for Hermitian matrices. Matrices are
//! values: every operation returns a new matrix.

use num_complex::Complex;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type Complex64 = Complex<f64>;

/// Maximum number of Jacobi sweeps before giving up. Convergence is
/// quadratic; well-conditioned inputs at the dimensions handled here finish
/// in well under ten sweeps.
const MAX_JACOBI_SWEEPS: usize = 64;

/// Dense complex matrix in row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, validating shape and finiteness.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::BadEntryCount {
                rows,
                cols,
                found: data.len(),
            });
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix entry by entry from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Square matrix of zeros.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    /// d×d identity.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
    }

    /// Real diagonal matrix.
    pub fn diag(entries: &[f64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(entries[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    /// Outer product |u⟩⟨v| of two column vectors.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    /// Column vector as an n×1 matrix.
    pub fn column(v: &[Complex64]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out[(i, j)] + a * other[(k, j)];
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose A†.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry-wise absolute difference to another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.require_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Maximum deviation from Hermiticity, max_ij |A_ij - conj(A_ji)|.
    pub fn hermiticity_deviation(&self) -> Result<f64> {
        let n = self.require_square()?;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        Ok(dev)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        matches!(self.hermiticity_deviation(), Ok(dev) if dev <= tol)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

/// Kronecker (tensor) product. Block (i, j) of the result is `a[i][j] * b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(ra * rb, ca * cb, |i, j| {
        a[(i / rb, j / cb)] * b[(i % rb, j % cb)]
    })
}

/// Hilbert-Schmidt inner product ⟨A, B⟩ = Tr(A†B).
///
/// Both matrices must be square and of the same dimension.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    a.require_square()?;
    b.require_square()?;
    a.require_same_shape(b)?;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Hilbert-Schmidt (Frobenius) norm ‖A‖ = sqrt(Tr A†A).
pub fn hs_norm(a: &ComplexMatrix) -> Result<f64> {
    a.require_square()?;
    Ok(a.data
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Frobenius mass of the off-diagonal part, sqrt(Σ_{i≠j} |a_ij|²).
fn offdiag_norm(n: usize, data: &[Complex64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += data[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi rotations.
///
/// The input must be Hermitian within `tol`; sweeps continue until the
/// off-diagonal Frobenius mass drops below `tol`. Each rotation first strips
/// the phase of the pivot entry and then applies the classical symmetric
/// 2×2 Jacobi rotation, so the iteration is the textbook cyclic scheme
/// extended to complex Hermitian input.
pub fn hermitian_eigenvalues(a: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = a.require_square()?;
    let dev = a.hermiticity_deviation()?;
    if dev > tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    // Work on the exactly-Hermitian average (A + A†)/2 so tol-level input
    // asymmetry cannot bias the iteration.
    let mut m = vec![Complex64::ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = 0.5 * (a[(i, j)] + a[(j, i)].conj());
        }
    }

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if offdiag_norm(n, &m) <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r; // e^{iθ}
                let app = m[p * n + p].re;
                let aqq = m[q * n + q].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Unitary U differs from 1 only in rows/cols p,q:
                //   U_pp = c, U_pq = s, U_qp = -s e^{-iθ}, U_qq = c e^{-iθ}.
                // Columns: B = A U.
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * phase.conj() * akq;
                    m[k * n + q] = s * akp + c * phase.conj() * akq;
                }
                // Rows: A' = U† B.
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * phase * aqk;
                    m[q * n + k] = s * apk + c * phase * aqk;
                }
                // The pivot is zero by construction; pin it and keep the
                // diagonal exactly real against rounding drift.
                m[p * n + q] = Complex64::ZERO;
                m[q * n + p] = Complex64::ZERO;
                m[p * n + p] = Complex64::new(m[p * n + p].re, 0.0);
                m[q * n + q] = Complex64::new(m[q * n + q].re, 0.0);
            }
        }
    }
    if !converged && offdiag_norm(n, &m) > tol {
        return Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| m[i * n + i].re).collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    Ok(eigs)
}

/// True iff the Hermitian matrix has min eigenvalue ≥ −tol.
pub fn is_positive_semidefinite(a: &ComplexMatrix, tol: f64) -> Result<bool> {
    let eigs = hermitian_eigenvalues(a, tol)?;
    Ok(eigs.first().is_none_or(|&min| min >= -tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap()
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::diag(&[1.0, -1.0])
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let id2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&id2, &id2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_diagonal_case() {
        let d = sigma_z();
        let expect = ComplexMatrix::diag(&[1.0, -1.0, -1.0, 1.0]);
        assert_eq!(kron(&d, &d), expect);
    }

    #[test]
    fn kron_sigma_x_matches_dyadic_expansion_and_fixes_bell_vector() {
        // σ₁⊗σ₁ = Σ over the four dyadic tensor terms |j⟩⟨k|⊗|j'⟩⟨k'|.
        let e = |j: usize, k: usize| {
            ComplexMatrix::from_fn(2, 2, |r, s| {
                if r == j && s == k {
                    Complex64::ONE
                } else {
                    Complex64::ZERO
                }
            })
        };
        let mut sum = ComplexMatrix::zeros(4, 4);
        for (a, b) in [(0, 1), (1, 0)] {
            for (a2, b2) in [(0, 1), (1, 0)] {
                sum = sum.add(&kron(&e(a, b), &e(a2, b2))).unwrap();
            }
        }
        let prod = kron(&sigma_x(), &sigma_x());
        assert!(prod.max_abs_diff(&sum).unwrap() < 1e-15);

        // The column-stacked Bell vector is a +1 eigenvector.
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        let bell = ComplexMatrix::column(&[
            c(inv_sqrt2, 0.),
            c(0., 0.),
            c(0., 0.),
            c(inv_sqrt2, 0.),
        ]);
        let image = prod.mul(&bell).unwrap();
        assert!(image.max_abs_diff(&bell).unwrap() < 1e-15);
    }

    #[test]
    fn hs_inner_of_identity_is_dimension() {
        for d in 2..=6 {
            let id = ComplexMatrix::identity(d);
            let v = hs_inner(&id, &id).unwrap();
            assert!((v - c(d as f64, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn hs_inner_gell_mann_symmetric_and_cross() {
        // d=3 symmetric/antisymmetric (1,2) pair, written out by hand.
        let sym = ComplexMatrix::from_vec(
            3,
            3,
            vec![
                c(0., 0.),
                c(1., 0.),
                c(0., 0.),
                c(1., 0.),
                c(0., 0.),
                c(0., 0.),
                c(0., 0.),
                c(0., 0.),
                c(0., 0.),
            ],
        )
        .unwrap();
        let asym = ComplexMatrix::from_vec(
            3,
            3,
            vec![
                c(0., 0.),
                c(0., -1.),
                c(0., 0.),
                c(0., 1.),
                c(0., 0.),
                c(0., 0.),
                c(0., 0.),
                c(0., 0.),
                c(0., 0.),
            ],
        )
        .unwrap();
        assert!((hs_inner(&sym, &sym).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert!(hs_inner(&sym, &asym).unwrap().norm() < 1e-15);
    }

    #[test]
    fn hs_inner_rejects_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(
            hs_inner(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hs_norm_identity() {
        assert!((hs_norm(&ComplexMatrix::identity(3)).unwrap() - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn hs_norm_is_multiplicative_over_kron() {
        let a = sigma_x().add(&sigma_z()).unwrap().scale(c(0.3, 0.7));
        let b = ComplexMatrix::from_vec(2, 2, vec![c(1., 2.), c(0., -1.), c(0.5, 0.), c(2., 0.)])
            .unwrap();
        let lhs = hs_norm(&kron(&a, &b)).unwrap();
        let rhs = hs_norm(&a).unwrap() * hs_norm(&b).unwrap();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_of_diagonal_matrix() {
        let m = ComplexMatrix::diag(&[1.0, 0.0, -1.0]);
        let eigs = hermitian_eigenvalues(&m, 1e-9).unwrap();
        assert_eq!(eigs.len(), 3);
        for (got, want) in eigs.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvalues_of_sigma_x() {
        let eigs = hermitian_eigenvalues(&sigma_x(), 1e-9).unwrap();
        assert!((eigs[0] + 1.0).abs() < 1e-12);
        assert!((eigs[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_of_bell_projector() {
        // Rank-1 projector onto (|00⟩+|11⟩)/√2: spectrum {0,0,0,1}.
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        let v = [c(inv_sqrt2, 0.), c(0., 0.), c(0., 0.), c(inv_sqrt2, 0.)];
        let proj = ComplexMatrix::outer(&v, &v);
        let eigs = hermitian_eigenvalues(&proj, 1e-9).unwrap();
        for e in &eigs[..3] {
            assert!(e.abs() < 1e-12);
        }
        assert!((eigs[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let m = ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)])
            .unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m, 1e-9),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn psd_examples() {
        let mixed = ComplexMatrix::identity(4).scale_re(0.25);
        assert!(is_positive_semidefinite(&mixed, 1e-9).unwrap());
        let bad = ComplexMatrix::diag(&[1.0, -1e-3]);
        assert!(!is_positive_semidefinite(&bad, 1e-9).unwrap());
    }

    #[test]
    fn from_vec_rejects_non_finite_and_bad_lengths() {
        assert!(matches!(
            ComplexMatrix::from_vec(1, 2, vec![c(f64::NAN, 0.), c(0., 0.)]),
            Err(Error::NonFinite)
        ));
        assert!(matches!(
            ComplexMatrix::from_vec(2, 2, vec![c(0., 0.)]),
            Err(Error::BadEntryCount { .. })
        ));
    }

    /// Random-rotation oracle: compose Jacobi-style rotations into a unitary
    /// V, form V diag(λ) V†, and require the solver to recover λ.
    #[test]
    fn recovers_spectrum_of_randomly_rotated_diagonal() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for n in [2usize, 3, 5, 8, 16] {
            let lambda: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let mut v = ComplexMatrix::identity(n);
            for _ in 0..4 * n {
                let p = rng.random_range(0..n);
                let mut q = rng.random_range(0..n);
                while q == p {
                    q = rng.random_range(0..n);
                }
                let angle = rng.random_range(0.0..std::f64::consts::TAU);
                let phase = rng.random_range(0.0..std::f64::consts::TAU);
                let (cth, sth) = (angle.cos(), angle.sin());
                let rot = ComplexMatrix::from_fn(n, n, |i, j| {
                    if i == p && j == p {
                        c(cth, 0.0)
                    } else if i == p && j == q {
                        c(sth, 0.0) * Complex64::new(phase.cos(), phase.sin())
                    } else if i == q && j == p {
                        c(-sth, 0.0) * Complex64::new(phase.cos(), -phase.sin())
                    } else if i == q && j == q {
                        c(cth, 0.0)
                    } else if i == j {
                        Complex64::ONE
                    } else {
                        Complex64::ZERO
                    }
                });
                v = v.mul(&rot).unwrap();
            }
            let m = v
                .mul(&ComplexMatrix::diag(&lambda))
                .unwrap()
                .mul(&v.dagger())
                .unwrap();
            let eigs = hermitian_eigenvalues(&m, 1e-12).unwrap();
            let mut sorted = lambda.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (got, want) in eigs.iter().zip(&sorted) {
                assert!(
                    (got - want).abs() < 1e-9,
                    "n={n}: eigenvalue {got} vs {want}"
                );
            }
            // Trace equals the eigenvalue sum.
            let tr = m.trace().re;
            let sum: f64 = eigs.iter().sum();
            assert!((tr - sum).abs() < 1e-9);
        }
    }
}
