//! The three operator bases: generalized Gell-Mann, polarization, Weyl.
//!
//! Each family is produced as an [`OperatorBasis`]: an ordered, labeled list
//! of d×d matrices satisfying Tr(A_i†A_j) = N δ_ij with a family-specific
//! constant N. The generalized Gell-Mann basis holds the d²−1 traceless
//! Hermitian SU(d) generators (the identity is handled separately by the
//! Bloch layer); the polarization and Weyl bases hold all d² elements with
//! their identity-proportional element first.
//!
//! Labels follow the conventional index ranges: 1-based (j, k) pairs and
//! diagonal index l for Gell-Mann matrices, (L, M) for polarization
//! operators, 0-based (n, m) for Weyl operators.

use num_complex::Complex;

use crate::angular::{clebsch_gordan, CgLabel, HalfInteger};
use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix};

/// Which of the three operator families a basis or label belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisFamily {
    /// Generalized Gell-Mann basis (Hermitian SU(d) generators).
    Ggm,
    /// Polarization operator basis (irreducible tensor operators T_LM).
    Pob,
    /// Weyl operator basis (unitary shift-and-phase operators U_nm).
    Wob,
}

impl BasisFamily {
    pub const ALL: [BasisFamily; 3] = [BasisFamily::Ggm, BasisFamily::Pob, BasisFamily::Wob];

    /// Orthogonality constant N in Tr(A_i†A_j) = N δ_ij.
    pub fn norm_constant(self, dim: usize) -> f64 {
        match self {
            BasisFamily::Ggm => 2.0,
            BasisFamily::Pob => 1.0,
            BasisFamily::Wob => dim as f64,
        }
    }

    /// Short lowercase tag used in files and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            BasisFamily::Ggm => "ggm",
            BasisFamily::Pob => "pob",
            BasisFamily::Wob => "wob",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "ggm" | "ggb" => Ok(BasisFamily::Ggm),
            "pob" => Ok(BasisFamily::Pob),
            "wob" => Ok(BasisFamily::Wob),
            _ => Err(Error::UnknownFamily {
                name: name.to_string(),
            }),
        }
    }
}

impl std::fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Label of a single basis element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisElementLabel {
    /// |j⟩⟨k| + |k⟩⟨j| with 1 ≤ j < k ≤ d.
    GgmSymmetric { j: usize, k: usize },
    /// −i|j⟩⟨k| + i|k⟩⟨j| with 1 ≤ j < k ≤ d.
    GgmAntisymmetric { j: usize, k: usize },
    /// Diagonal generator with 1 ≤ l ≤ d−1.
    GgmDiagonal { l: usize },
    /// Polarization operator T_LM, 0 ≤ L ≤ d−1, −L ≤ M ≤ L.
    Pob { l: i64, m: i64 },
    /// Weyl operator U_nm, 0 ≤ n, m ≤ d−1.
    Wob { n: usize, m: usize },
}

impl BasisElementLabel {
    pub fn family(self) -> BasisFamily {
        match self {
            BasisElementLabel::GgmSymmetric { .. }
            | BasisElementLabel::GgmAntisymmetric { .. }
            | BasisElementLabel::GgmDiagonal { .. } => BasisFamily::Ggm,
            BasisElementLabel::Pob { .. } => BasisFamily::Pob,
            BasisElementLabel::Wob { .. } => BasisFamily::Wob,
        }
    }

    /// True for the identity-proportional element (T_00 / U_00).
    pub fn is_identity(self) -> bool {
        matches!(
            self,
            BasisElementLabel::Pob { l: 0, m: 0 } | BasisElementLabel::Wob { n: 0, m: 0 }
        )
    }

    /// Parses the string form used by [`std::fmt::Display`]: `s:j,k`,
    /// `a:j,k`, `d:l` for Gell-Mann labels, `L,M` for polarization labels,
    /// `n,m` for Weyl labels. The family disambiguates the last two.
    pub fn parse(family: BasisFamily, s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidLabel {
            reason: format!("'{s}': {reason}"),
        };
        let parse_pair = |txt: &str| -> Result<(i64, i64)> {
            let (a, b) = txt
                .split_once(',')
                .ok_or_else(|| bad("expected two comma-separated indices"))?;
            Ok((
                a.trim().parse().map_err(|_| bad("bad first index"))?,
                b.trim().parse().map_err(|_| bad("bad second index"))?,
            ))
        };
        match family {
            BasisFamily::Ggm => {
                let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected kind:indices"))?;
                match kind.trim() {
                    "s" => {
                        let (j, k) = parse_pair(rest)?;
                        Ok(BasisElementLabel::GgmSymmetric {
                            j: j as usize,
                            k: k as usize,
                        })
                    }
                    "a" => {
                        let (j, k) = parse_pair(rest)?;
                        Ok(BasisElementLabel::GgmAntisymmetric {
                            j: j as usize,
                            k: k as usize,
                        })
                    }
                    "d" => Ok(BasisElementLabel::GgmDiagonal {
                        l: rest
                            .trim()
                            .parse()
                            .map_err(|_| bad("bad diagonal index"))?,
                    }),
                    _ => Err(bad("kind must be s, a or d")),
                }
            }
            BasisFamily::Pob => {
                let (l, m) = parse_pair(s)?;
                Ok(BasisElementLabel::Pob { l, m })
            }
            BasisFamily::Wob => {
                let (n, m) = parse_pair(s)?;
                if n < 0 || m < 0 {
                    return Err(bad("Weyl indices are nonnegative"));
                }
                Ok(BasisElementLabel::Wob {
                    n: n as usize,
                    m: m as usize,
                })
            }
        }
    }
}

impl std::fmt::Display for BasisElementLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisElementLabel::GgmSymmetric { j, k } => write!(f, "s:{j},{k}"),
            BasisElementLabel::GgmAntisymmetric { j, k } => write!(f, "a:{j},{k}"),
            BasisElementLabel::GgmDiagonal { l } => write!(f, "d:{l}"),
            BasisElementLabel::Pob { l, m } => write!(f, "{l},{m}"),
            BasisElementLabel::Wob { n, m } => write!(f, "{n},{m}"),
        }
    }
}

/// An ordered, labeled operator basis with its orthogonality constant.
#[derive(Clone, Debug)]
pub struct OperatorBasis {
    family: BasisFamily,
    dim: usize,
    elements: Vec<(BasisElementLabel, ComplexMatrix)>,
    norm_constant: f64,
}

impl OperatorBasis {
    /// Generates the requested family for dimension d ≥ 2.
    pub fn generate(family: BasisFamily, dim: usize) -> Result<Self> {
        match family {
            BasisFamily::Ggm => ggm_basis(dim),
            BasisFamily::Pob => pob_basis(dim),
            BasisFamily::Wob => wob_basis(dim),
        }
    }

    pub fn family(&self) -> BasisFamily {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm_constant(&self) -> f64 {
        self.norm_constant
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[(BasisElementLabel, ComplexMatrix)] {
        &self.elements
    }

    /// The d²−1 traceless elements: everything except the identity element
    /// of the polarization/Weyl bases. Gell-Mann bases are returned whole.
    pub fn traceless_elements(&self) -> &[(BasisElementLabel, ComplexMatrix)] {
        match self.family {
            BasisFamily::Ggm => &self.elements,
            _ => &self.elements[1..],
        }
    }

    pub fn element_by_label(&self, label: BasisElementLabel) -> Option<&ComplexMatrix> {
        self.elements
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, m)| m)
    }
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        Err(Error::InvalidDimension {
            dim: d,
            reason: "operator bases need dimension at least 2".into(),
        })
    } else {
        Ok(())
    }
}

/// Single generalized Gell-Mann matrix for the given label.
pub fn ggm_element(d: usize, label: BasisElementLabel) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let bad = |reason: String| Error::InvalidLabel { reason };
    match label {
        BasisElementLabel::GgmSymmetric { j, k } => {
            if !(1 <= j && j < k && k <= d) {
                return Err(bad(format!("symmetric ({j},{k}) needs 1 <= j < k <= {d}")));
            }
            Ok(ComplexMatrix::from_fn(d, d, |r, c| {
                if (r, c) == (j - 1, k - 1) || (r, c) == (k - 1, j - 1) {
                    Complex64::ONE
                } else {
                    Complex64::ZERO
                }
            }))
        }
        BasisElementLabel::GgmAntisymmetric { j, k } => {
            if !(1 <= j && j < k && k <= d) {
                return Err(bad(format!(
                    "antisymmetric ({j},{k}) needs 1 <= j < k <= {d}"
                )));
            }
            Ok(ComplexMatrix::from_fn(d, d, |r, c| {
                if (r, c) == (j - 1, k - 1) {
                    Complex::new(0.0, -1.0)
                } else if (r, c) == (k - 1, j - 1) {
                    Complex::new(0.0, 1.0)
                } else {
                    Complex64::ZERO
                }
            }))
        }
        BasisElementLabel::GgmDiagonal { l } => {
            if !(1 <= l && l < d) {
                return Err(bad(format!("diagonal index {l} needs 1 <= l <= {}", d - 1)));
            }
            let scale = (2.0 / (l as f64 * (l + 1) as f64)).sqrt();
            Ok(ComplexMatrix::from_fn(d, d, |r, c| {
                if r != c {
                    Complex64::ZERO
                } else if r < l {
                    Complex::new(scale, 0.0)
                } else if r == l {
                    Complex::new(-scale * l as f64, 0.0)
                } else {
                    Complex64::ZERO
                }
            }))
        }
        _ => Err(bad(format!("{label} is not a Gell-Mann label"))),
    }
}

/// Generalized Gell-Mann basis: d²−1 elements ordered as all symmetric
/// (lexicographic (j,k)), all antisymmetric, then the d−1 diagonal ones.
pub fn ggm_basis(d: usize) -> Result<OperatorBasis> {
    check_dim(d)?;
    let mut elements = Vec::with_capacity(d * d - 1);
    for j in 1..=d {
        for k in (j + 1)..=d {
            let label = BasisElementLabel::GgmSymmetric { j, k };
            elements.push((label, ggm_element(d, label)?));
        }
    }
    for j in 1..=d {
        for k in (j + 1)..=d {
            let label = BasisElementLabel::GgmAntisymmetric { j, k };
            elements.push((label, ggm_element(d, label)?));
        }
    }
    for l in 1..d {
        let label = BasisElementLabel::GgmDiagonal { l };
        elements.push((label, ggm_element(d, label)?));
    }
    Ok(OperatorBasis {
        family: BasisFamily::Ggm,
        dim: d,
        elements,
        norm_constant: 2.0,
    })
}

/// Polarization operator T_LM for spin s = (d−1)/2:
/// T_LM = sqrt((2L+1)/(2s+1)) Σ_{k,l} C^{s m_k}_{s m_l, LM} |k⟩⟨l|
/// with m_k = s − k + 1 running from s down to −s.
pub fn pob_element(d: usize, l: i64, m: i64) -> Result<ComplexMatrix> {
    check_dim(d)?;
    if !(0 <= l && l <= (d as i64 - 1) && -l <= m && m <= l) {
        return Err(Error::InvalidLabel {
            reason: format!("polarization label ({l},{m}) out of range for dimension {d}"),
        });
    }
    let two_s = d as i64 - 1;
    let s = HalfInteger::new(two_s);
    let big_l = HalfInteger::from_int(l);
    let big_m = HalfInteger::from_int(m);
    let prefactor = ((2 * l + 1) as f64 / d as f64).sqrt();

    let mut entries = vec![Complex64::ZERO; d * d];
    for col in 1..=d {
        // m_col + M = m_row fixes the row index.
        let row = col as i64 - m;
        if row < 1 || row > d as i64 {
            continue;
        }
        let m_row = HalfInteger::new(two_s - 2 * (row - 1));
        let m_col = HalfInteger::new(two_s - 2 * (col as i64 - 1));
        let coeff = clebsch_gordan(&CgLabel::new(s, m_col, big_l, big_m, s, m_row)?)?;
        entries[(row as usize - 1) * d + (col - 1)] = Complex::new(prefactor * coeff, 0.0);
    }
    ComplexMatrix::from_vec(d, d, entries)
}

/// Polarization operator basis: d² elements, T_00 first, then L ascending
/// with M ascending inside each L.
pub fn pob_basis(d: usize) -> Result<OperatorBasis> {
    check_dim(d)?;
    let mut elements = Vec::with_capacity(d * d);
    for l in 0..=(d as i64 - 1) {
        for m in -l..=l {
            elements.push((BasisElementLabel::Pob { l, m }, pob_element(d, l, m)?));
        }
    }
    Ok(OperatorBasis {
        family: BasisFamily::Pob,
        dim: d,
        elements,
        norm_constant: 1.0,
    })
}

/// Weyl operator U_nm = Σ_k e^{2πi kn/d} |k⟩⟨(k+m) mod d| (0-based).
pub fn wob_element(d: usize, n: usize, m: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    if n >= d || m >= d {
        return Err(Error::InvalidLabel {
            reason: format!("Weyl label ({n},{m}) out of range for dimension {d}"),
        });
    }
    let mut entries = vec![Complex64::ZERO; d * d];
    for k in 0..d {
        entries[k * d + (k + m) % d] = unit_phase(k * n, d);
    }
    ComplexMatrix::from_vec(d, d, entries)
}

/// Weyl operator basis: d² elements in lexicographic (n, m) order with the
/// identity U_00 first.
pub fn wob_basis(d: usize) -> Result<OperatorBasis> {
    check_dim(d)?;
    let mut elements = Vec::with_capacity(d * d);
    for n in 0..d {
        for m in 0..d {
            elements.push((BasisElementLabel::Wob { n, m }, wob_element(d, n, m)?));
        }
    }
    Ok(OperatorBasis {
        family: BasisFamily::Wob,
        dim: d,
        elements,
        norm_constant: d as f64,
    })
}

/// e^{2πi k/d} evaluated as cos/sin of the reduced angle, so phases stay
/// exact-per-entry instead of drifting through repeated multiplication.
fn unit_phase(k: usize, d: usize) -> Complex64 {
    let angle = std::f64::consts::TAU * ((k % d) as f64) / (d as f64);
    Complex::new(angle.cos(), angle.sin())
}

/// Σ_{n=0}^{d−1} e^{2πi n x / d}, which is d when x ≡ 0 (mod d) and 0
/// otherwise. Exposed because several Weyl-basis identities reduce to it.
pub fn roots_of_unity_sum(d: usize, x: i64) -> Complex64 {
    let mut sum = Complex64::ZERO;
    for n in 0..d as i64 {
        sum += unit_phase((n * x).rem_euclid(d as i64) as usize, d);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hs_inner;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex::new(re, im)
    }

    fn assert_close(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) {
        assert!(
            a.max_abs_diff(b).unwrap() < tol,
            "matrices differ:\n{a:?}\nvs\n{b:?}"
        );
    }

    #[test]
    fn qutrit_diagonal_gell_mann() {
        let l2 = ggm_element(3, BasisElementLabel::GgmDiagonal { l: 2 }).unwrap();
        let expect = ComplexMatrix::diag(&[1.0, 1.0, -2.0]).scale_re(1.0 / 3f64.sqrt());
        assert_close(&l2, &expect, 1e-15);
    }

    #[test]
    fn ququart_diagonal_gell_mann() {
        let l3 = ggm_element(4, BasisElementLabel::GgmDiagonal { l: 3 }).unwrap();
        let expect = ComplexMatrix::diag(&[1.0, 1.0, 1.0, -3.0]).scale_re(1.0 / 6f64.sqrt());
        assert_close(&l3, &expect, 1e-15);
    }

    #[test]
    fn qubit_ggm_is_pauli() {
        let sx = ggm_element(2, BasisElementLabel::GgmSymmetric { j: 1, k: 2 }).unwrap();
        let sy = ggm_element(2, BasisElementLabel::GgmAntisymmetric { j: 1, k: 2 }).unwrap();
        let sz = ggm_element(2, BasisElementLabel::GgmDiagonal { l: 1 }).unwrap();
        assert_close(
            &sx,
            &ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)])
                .unwrap(),
            1e-15,
        );
        assert_close(
            &sy,
            &ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)])
                .unwrap(),
            1e-15,
        );
        assert_close(&sz, &ComplexMatrix::diag(&[1.0, -1.0]), 1e-15);
    }

    #[test]
    fn qutrit_ggm_matches_the_eight_gell_mann_matrices() {
        let basis = ggm_basis(3).unwrap();
        assert_eq!(basis.len(), 8);
        let expected: Vec<(BasisElementLabel, ComplexMatrix)> = vec![
            (
                BasisElementLabel::GgmSymmetric { j: 1, k: 2 },
                ComplexMatrix::from_fn(3, 3, |r, s| {
                    if (r, s) == (0, 1) || (r, s) == (1, 0) {
                        Complex64::ONE
                    } else {
                        Complex64::ZERO
                    }
                }),
            ),
            (
                BasisElementLabel::GgmSymmetric { j: 1, k: 3 },
                ComplexMatrix::from_fn(3, 3, |r, s| {
                    if (r, s) == (0, 2) || (r, s) == (2, 0) {
                        Complex64::ONE
                    } else {
                        Complex64::ZERO
                    }
                }),
            ),
            (
                BasisElementLabel::GgmSymmetric { j: 2, k: 3 },
                ComplexMatrix::from_fn(3, 3, |r, s| {
                    if (r, s) == (1, 2) || (r, s) == (2, 1) {
                        Complex64::ONE
                    } else {
                        Complex64::ZERO
                    }
                }),
            ),
            (
                BasisElementLabel::GgmAntisymmetric { j: 1, k: 2 },
                ComplexMatrix::from_fn(3, 3, |r, s| match (r, s) {
                    (0, 1) => c(0., -1.),
                    (1, 0) => c(0., 1.),
                    _ => Complex64::ZERO,
                }),
            ),
            (
                BasisElementLabel::GgmAntisymmetric { j: 1, k: 3 },
                ComplexMatrix::from_fn(3, 3, |r, s| match (r, s) {
                    (0, 2) => c(0., -1.),
                    (2, 0) => c(0., 1.),
                    _ => Complex64::ZERO,
                }),
            ),
            (
                BasisElementLabel::GgmAntisymmetric { j: 2, k: 3 },
                ComplexMatrix::from_fn(3, 3, |r, s| match (r, s) {
                    (1, 2) => c(0., -1.),
                    (2, 1) => c(0., 1.),
                    _ => Complex64::ZERO,
                }),
            ),
            (
                BasisElementLabel::GgmDiagonal { l: 1 },
                ComplexMatrix::diag(&[1.0, -1.0, 0.0]),
            ),
            (
                BasisElementLabel::GgmDiagonal { l: 2 },
                ComplexMatrix::diag(&[1.0, 1.0, -2.0]).scale_re(1.0 / 3f64.sqrt()),
            ),
        ];
        for ((label, matrix), (elabel, ematrix)) in basis.elements().iter().zip(&expected) {
            assert_eq!(label, elabel);
            assert_close(matrix, ematrix, 1e-15);
        }
    }

    #[test]
    fn ggm_gram_matrix_is_twice_identity() {
        for d in 2..=6 {
            let basis = ggm_basis(d).unwrap();
            assert_eq!(basis.len(), d * d - 1);
            for (i, (_, a)) in basis.elements().iter().enumerate() {
                for (j, (_, b)) in basis.elements().iter().enumerate() {
                    let want = if i == j { 2.0 } else { 0.0 };
                    let got = hs_inner(a, b).unwrap();
                    assert!((got - c(want, 0.0)).norm() < 1e-12, "d={d} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn pob_identity_element() {
        for d in 2..=6 {
            let t00 = pob_element(d, 0, 0).unwrap();
            let expect = ComplexMatrix::identity(d).scale_re(1.0 / (d as f64).sqrt());
            assert_close(&t00, &expect, 1e-14);
        }
    }

    #[test]
    fn qubit_pob_matches_printed_matrices() {
        // s = 1/2: T_00 = 1/√2, T_11 = −σ₊, T_10 = σ₃/√2, T_1−1 = σ₋.
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        let cases = [
            (0, 0, ComplexMatrix::identity(2).scale_re(inv_sqrt2)),
            (
                1,
                1,
                ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(-1., 0.), c(0., 0.), c(0., 0.)])
                    .unwrap(),
            ),
            (1, 0, ComplexMatrix::diag(&[1.0, -1.0]).scale_re(inv_sqrt2)),
            (
                1,
                -1,
                ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.)])
                    .unwrap(),
            ),
        ];
        for (l, m, expect) in cases {
            let got = pob_element(2, l, m).unwrap();
            assert_close(&got, &expect, 1e-14);
        }
    }

    #[test]
    fn qutrit_pob_t20() {
        let t20 = pob_element(3, 2, 0).unwrap();
        let expect = ComplexMatrix::diag(&[1.0, -2.0, 1.0]).scale_re(1.0 / 6f64.sqrt());
        assert_close(&t20, &expect, 1e-14);
    }

    #[test]
    fn pob_is_orthonormal_and_traceless() {
        for d in 2..=6 {
            let basis = pob_basis(d).unwrap();
            assert_eq!(basis.len(), d * d);
            for (i, (la, a)) in basis.elements().iter().enumerate() {
                if !la.is_identity() {
                    assert!(a.trace().norm() < 1e-13, "T_{la} not traceless");
                }
                for (j, (_, b)) in basis.elements().iter().enumerate() {
                    let want = if i == j { 1.0 } else { 0.0 };
                    let got = hs_inner(a, b).unwrap();
                    assert!((got - c(want, 0.0)).norm() < 1e-12, "d={d} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn pob_ordering_is_l_then_m_ascending() {
        let basis = pob_basis(3).unwrap();
        let labels: Vec<String> = basis.elements().iter().map(|(l, _)| l.to_string()).collect();
        assert_eq!(
            labels,
            vec!["0,0", "1,-1", "1,0", "1,1", "2,-2", "2,-1", "2,0", "2,1", "2,2"]
        );
    }

    #[test]
    fn wob_identity_and_cyclic_shift() {
        assert_close(&wob_element(3, 0, 0).unwrap(), &ComplexMatrix::identity(3), 1e-15);
        let u01 = wob_element(3, 0, 1).unwrap();
        let expect = ComplexMatrix::from_fn(3, 3, |r, s| {
            if s == (r + 1) % 3 {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        });
        assert_close(&u01, &expect, 1e-15);
    }

    #[test]
    fn qubit_wob_is_pauli_with_i_sigma_y() {
        let u01 = wob_element(2, 0, 1).unwrap(); // σ₁
        let u10 = wob_element(2, 1, 0).unwrap(); // σ₃
        let u11 = wob_element(2, 1, 1).unwrap(); // iσ₂
        assert_close(
            &u01,
            &ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)])
                .unwrap(),
            1e-15,
        );
        assert_close(&u10, &ComplexMatrix::diag(&[1.0, -1.0]), 1e-15);
        assert_close(
            &u11,
            &ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(1., 0.), c(-1., 0.), c(0., 0.)])
                .unwrap(),
            1e-15,
        );
    }

    #[test]
    fn qutrit_wob_phases_match_printed_matrices() {
        let w = 2.0 * std::f64::consts::PI / 3.0;
        let u11 = wob_element(3, 1, 1).unwrap();
        let expect = ComplexMatrix::from_fn(3, 3, |r, s| match (r, s) {
            (0, 1) => Complex64::ONE,
            (1, 2) => c(w.cos(), w.sin()),
            (2, 0) => c(w.cos(), -w.sin()),
            _ => Complex64::ZERO,
        });
        assert_close(&u11, &expect, 1e-15);
    }

    #[test]
    fn wob_is_unitary_orthogonal_and_traceless() {
        for d in 2..=8 {
            let basis = wob_basis(d).unwrap();
            assert_eq!(basis.len(), d * d);
            let id = ComplexMatrix::identity(d);
            for (la, a) in basis.elements() {
                let prod = a.dagger().mul(a).unwrap();
                assert!(prod.max_abs_diff(&id).unwrap() < 1e-13, "U_{la} not unitary");
                if !la.is_identity() {
                    assert!(a.trace().norm() < 1e-13, "U_{la} not traceless");
                }
            }
            for (i, (_, a)) in basis.elements().iter().enumerate() {
                for (j, (_, b)) in basis.elements().iter().enumerate() {
                    let want = if i == j { d as f64 } else { 0.0 };
                    let got = hs_inner(a, b).unwrap();
                    assert!((got - c(want, 0.0)).norm() < 1e-12, "d={d} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn roots_of_unity_sum_indicator() {
        for d in 2..=7usize {
            for x in -(2 * d as i64 - 1)..(2 * d as i64) {
                let got = roots_of_unity_sum(d, x);
                let want = if x.rem_euclid(d as i64) == 0 {
                    c(d as f64, 0.0)
                } else {
                    Complex64::ZERO
                };
                assert!((got - want).norm() < 1e-12, "d={d} x={x}");
            }
        }
    }

    #[test]
    fn invalid_labels_and_dimensions_error() {
        assert!(ggm_basis(1).is_err());
        assert!(pob_basis(0).is_err());
        assert!(wob_basis(1).is_err());
        assert!(ggm_element(3, BasisElementLabel::GgmSymmetric { j: 2, k: 2 }).is_err());
        assert!(ggm_element(3, BasisElementLabel::GgmDiagonal { l: 3 }).is_err());
        assert!(pob_element(3, 3, 0).is_err());
        assert!(pob_element(3, 1, 2).is_err());
        assert!(wob_element(3, 3, 0).is_err());
    }

    #[test]
    fn label_strings_round_trip() {
        let cases = [
            (
                BasisFamily::Ggm,
                BasisElementLabel::GgmSymmetric { j: 1, k: 3 },
            ),
            (
                BasisFamily::Ggm,
                BasisElementLabel::GgmAntisymmetric { j: 2, k: 4 },
            ),
            (BasisFamily::Ggm, BasisElementLabel::GgmDiagonal { l: 2 }),
            (BasisFamily::Pob, BasisElementLabel::Pob { l: 2, m: -1 }),
            (BasisFamily::Wob, BasisElementLabel::Wob { n: 1, m: 2 }),
        ];
        for (family, label) in cases {
            let s = label.to_string();
            assert_eq!(BasisElementLabel::parse(family, &s).unwrap(), label);
        }
        assert!(BasisElementLabel::parse(BasisFamily::Ggm, "x:1,2").is_err());
        assert!(BasisElementLabel::parse(BasisFamily::Wob, "1,-2").is_err());
    }
}
