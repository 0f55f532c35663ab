//! Stable file formats for matrices, Bloch vectors and basis archives.
//!
//! Everything is JSON with complex numbers spelled out as `[re, im]` pairs.
//! Serialization uses the shortest decimal that round-trips the exact f64
//! bit pattern, so write-then-read is lossless. Formats:
//!
//! - **MatrixFile**: `{"dim": [rows, cols], "data": [[re, im], ...]}` in
//!   row-major order, optional free-form `"meta"` map.
//! - **BlochFile**: `{"family": "ggm"|"pob"|"wob", "dim": d, "components":
//!   [{"label": "...", "re": .., "im": ..}, ...]}` with components in basis
//!   order and labels `s:j,k` / `a:j,k` / `d:l` (Gell-Mann), `L,M`
//!   (polarization), `n,m` (Weyl).
//! - **BasisFile**: one archive holding every element of a generated basis
//!   as a labeled MatrixFile entry.
//! - **BipartiteFile**: the n/m/c coefficient grids of a two-qudit
//!   decomposition.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bases::{BasisElementLabel, BasisFamily, OperatorBasis};
use crate::bloch::{BipartiteBlochDecomposition, BlochVector};
use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix};

/// On-disk form of a complex matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    /// `[rows, cols]`.
    pub dim: [usize; 2],
    /// Row-major `[re, im]` pairs, length rows×cols.
    pub data: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Map<String, serde_json::Value>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            dim: [m.rows(), m.cols()],
            data: m.entries().iter().map(|z| [z.re, z.im]).collect(),
            meta: None,
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        ComplexMatrix::from_vec(
            self.dim[0],
            self.dim[1],
            self.data
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
        )
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, serde_json::to_string_pretty(self)?)?)
    }
}

/// One Bloch component with its label string.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlochComponent {
    pub label: String,
    pub re: f64,
    pub im: f64,
}

/// On-disk form of a Bloch vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlochFile {
    /// `ggm`, `pob` or `wob`.
    pub family: String,
    pub dim: usize,
    /// d²−1 components in basis element order.
    pub components: Vec<BlochComponent>,
}

impl BlochFile {
    pub fn from_bloch_vector(b: &BlochVector) -> Result<Self> {
        let labels = b.labels()?;
        Ok(Self {
            family: b.family().tag().to_string(),
            dim: b.dim(),
            components: labels
                .iter()
                .zip(b.components())
                .map(|(label, z)| BlochComponent {
                    label: label.to_string(),
                    re: z.re,
                    im: z.im,
                })
                .collect(),
        })
    }

    /// Parses and validates the component list, requiring the labels to
    /// appear exactly in basis order.
    pub fn to_bloch_vector(&self) -> Result<BlochVector> {
        let family = BasisFamily::parse(&self.family)?;
        let basis = OperatorBasis::generate(family, self.dim)?;
        let expected: Vec<BasisElementLabel> = basis
            .traceless_elements()
            .iter()
            .map(|(l, _)| *l)
            .collect();
        if expected.len() != self.components.len() {
            return Err(Error::BadComponentCount {
                expected: expected.len(),
                found: self.components.len(),
            });
        }
        let mut components = Vec::with_capacity(expected.len());
        for (want, comp) in expected.iter().zip(&self.components) {
            let got = BasisElementLabel::parse(family, &comp.label)?;
            if got != *want {
                return Err(Error::format(format!(
                    "component label '{}' out of order: expected '{want}'",
                    comp.label
                )));
            }
            if !(comp.re.is_finite() && comp.im.is_finite()) {
                return Err(Error::NonFinite);
            }
            components.push(Complex64::new(comp.re, comp.im));
        }
        BlochVector::new(family, self.dim, components)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, serde_json::to_string_pretty(self)?)?)
    }
}

/// One labeled element of a basis archive.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisFileElement {
    pub label: String,
    pub matrix: MatrixFile,
}

/// On-disk archive of a whole operator basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisFile {
    pub family: String,
    pub dim: usize,
    /// Orthogonality constant N in Tr(A_i†A_j) = N δ_ij.
    pub norm_constant: f64,
    pub elements: Vec<BasisFileElement>,
}

impl BasisFile {
    pub fn from_basis(basis: &OperatorBasis) -> Self {
        Self {
            family: basis.family().tag().to_string(),
            dim: basis.dim(),
            norm_constant: basis.norm_constant(),
            elements: basis
                .elements()
                .iter()
                .map(|(label, matrix)| BasisFileElement {
                    label: label.to_string(),
                    matrix: MatrixFile::from_matrix(matrix),
                })
                .collect(),
        }
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, serde_json::to_string_pretty(self)?)?)
    }
}

/// On-disk form of a two-qudit coefficient decomposition.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BipartiteFile {
    pub family: String,
    /// Local dimension d.
    pub dim: usize,
    pub labels: Vec<String>,
    /// Γ_i ⊗ 𝟙 coefficients as `[re, im]`.
    pub n_coeffs: Vec<[f64; 2]>,
    /// 𝟙 ⊗ Γ_i coefficients.
    pub m_coeffs: Vec<[f64; 2]>,
    /// Row-major (d²−1)² grid of Γ_i ⊗ Γ_j coefficients.
    pub c_matrix: Vec<[f64; 2]>,
}

impl BipartiteFile {
    pub fn from_decomposition(dec: &BipartiteBlochDecomposition) -> Result<Self> {
        let pair = |z: &Complex64| [z.re, z.im];
        Ok(Self {
            family: dec.family.tag().to_string(),
            dim: dec.dim,
            labels: dec.labels()?.iter().map(|l| l.to_string()).collect(),
            n_coeffs: dec.n_coeffs.iter().map(pair).collect(),
            m_coeffs: dec.m_coeffs.iter().map(pair).collect(),
            c_matrix: dec.c_matrix.iter().map(pair).collect(),
        })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, serde_json::to_string_pretty(self)?)?)
    }
}
