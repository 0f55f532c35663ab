//! C ABI for the qudit-bloch library.
//!
//! Objects cross the boundary as opaque handles created and freed by this
//! crate; every fallible call returns a [`QbStatus`] and leaves a
//! human-readable message retrievable via [`qb_last_error_message`].
//! Complex data travels as interleaved `[re, im]` doubles in row-major
//! order. The generated header lives at `include/qudit_bloch.h`.
//!
//! Conventions:
//! - Out-parameters are written only on `QB_STATUS_OK`.
//! - Handles returned through `out` pointers are owned by the caller and
//!   must be released with the matching `qb_*_free` (null is ignored).
//! - Buffers are caller-allocated; `*_len` counts elements, not bytes.

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use qudit_bloch::bloch::{
    decompose, radius_bound, reconstruct, BlochVector, DensityMatrix, Reconstruction,
};
use qudit_bloch::linalg::{
    hermitian_eigenvalues, hs_inner, hs_norm, is_positive_semidefinite, kron, Complex64,
    ComplexMatrix,
};
use qudit_bloch::spin1::{witness_expectation_terms, ExpectationReport};
use qudit_bloch::states::{
    bell_state, isotropic_state, lambda_operator, random_density_matrix,
    random_pure_product_state, t_operator, u_operator,
};
use qudit_bloch::witness::{
    eval_witness, guess_witness, hs_measure_iso, max_violation_iso, nearest_separable_iso,
    optimal_witness_iso, verify_witness, EntanglementWitness,
};
use qudit_bloch::{BasisFamily, Error, OperatorBasis};

/// Result code of every fallible C-API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QbStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was out of range or otherwise invalid.
    InvalidArgument = 2,
    /// Matrix or buffer dimensions do not match.
    DimensionMismatch = 3,
    /// Input failed a state/witness validation (Hermiticity, trace,
    /// positivity).
    ValidationFailed = 4,
    /// A numerical procedure failed (non-convergence, non-finite values).
    NumericFailure = 5,
    /// A caller-provided buffer is too small.
    BufferTooSmall = 6,
}

/// Operator basis family selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QbBasisFamily {
    Ggm = 0,
    Pob = 1,
    Wob = 2,
}

impl From<QbBasisFamily> for BasisFamily {
    fn from(f: QbBasisFamily) -> Self {
        match f {
            QbBasisFamily::Ggm => BasisFamily::Ggm,
            QbBasisFamily::Pob => BasisFamily::Pob,
            QbBasisFamily::Wob => BasisFamily::Wob,
        }
    }
}

/// Outcome of a witness verification sweep.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct QbWitnessVerdict {
    /// Minimum expectation over the sampled pure product states.
    pub min_sep_expectation: f64,
    /// Expectation on the witness's target state.
    pub value_on_target: f64,
    pub n_samples: u64,
    /// Negative on target, nonnegative (to 1e-9) on all samples.
    pub detected: bool,
}

/// Opaque dense complex matrix.
pub struct QbMatrix(ComplexMatrix);
/// Opaque validated density matrix.
pub struct QbState(DensityMatrix);
/// Opaque operator basis.
pub struct QbBasis(OperatorBasis);
/// Opaque Bloch coefficient vector.
pub struct QbBloch(BlochVector);
/// Opaque entanglement witness.
pub struct QbWitness(EntanglementWitness);
/// Opaque spin-1 measurement report.
pub struct QbSpin1Report(ExpectationReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let text = CString::new(msg).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn status_of(err: &Error) -> QbStatus {
    match err {
        Error::DimensionMismatch { .. }
        | Error::NotSquare { .. }
        | Error::BadEntryCount { .. }
        | Error::BadComponentCount { .. } => QbStatus::DimensionMismatch,
        Error::NotHermitian { .. }
        | Error::TraceNotOne { .. }
        | Error::NotPositiveSemidefinite { .. } => QbStatus::ValidationFailed,
        Error::NoConvergence { .. } | Error::NotReal { .. } | Error::NonFinite => {
            QbStatus::NumericFailure
        }
        _ => QbStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> QbStatus {
    let code = status_of(&err);
    set_error(err.to_string());
    code
}

/// Copies the most recent error message of this thread into `buf` (NUL
/// terminated, truncated to `len` bytes). Returns the full message length
/// including the terminator, or 0 when `buf` is null or no error is set.
///
/// # Safety
/// `buf` must point to at least `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn qb_last_error_message(buf: *mut c_char, len: usize) -> usize {
    if buf.is_null() || len == 0 {
        return 0;
    }
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        let bytes = msg.as_bytes_with_nul();
        if bytes.len() == 1 {
            return 0;
        }
        let n = bytes.len().min(len);
        std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
        // Guarantee termination even when truncated.
        *buf.add(n - 1) = 0;
        bytes.len()
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> QbStatus {
    if out.is_null() {
        set_error("out pointer is null");
        return QbStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(value));
    QbStatus::Ok
}

macro_rules! deref {
    ($ptr:expr) => {
        match $ptr.as_ref() {
            Some(v) => v,
            None => {
                set_error("handle is null");
                return QbStatus::NullArgument;
            }
        }
    };
}

macro_rules! free_fn {
    ($(#[$doc:meta])* $name:ident, $ty:ty) => {
        $(#[$doc])*
        /// # Safety
        /// `handle` must be null or a pointer previously returned by this
        /// library and not yet freed.
        #[no_mangle]
        pub unsafe extern "C" fn $name(handle: *mut $ty) {
            if !handle.is_null() {
                drop(Box::from_raw(handle));
            }
        }
    };
}

free_fn!(
    /// Releases a matrix handle.
    qb_matrix_free,
    QbMatrix
);
free_fn!(
    /// Releases a density-matrix handle.
    qb_state_free,
    QbState
);
free_fn!(
    /// Releases a basis handle.
    qb_basis_free,
    QbBasis
);
free_fn!(
    /// Releases a Bloch vector handle.
    qb_bloch_free,
    QbBloch
);
free_fn!(
    /// Releases a witness handle.
    qb_witness_free,
    QbWitness
);
free_fn!(
    /// Releases a spin-1 report handle.
    qb_spin1_report_free,
    QbSpin1Report
);

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Creates a matrix from `rows`×`cols` interleaved `[re, im]` doubles
/// (row-major, so `data` holds `2*rows*cols` values).
///
/// # Safety
/// `data` must point to `2*rows*cols` readable doubles; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_new(
    rows: usize,
    cols: usize,
    data: *const f64,
    out: *mut *mut QbMatrix,
) -> QbStatus {
    if data.is_null() {
        set_error("data pointer is null");
        return QbStatus::NullArgument;
    }
    let slice = std::slice::from_raw_parts(data, 2 * rows * cols);
    let entries = slice
        .chunks_exact(2)
        .map(|pair| Complex64::new(pair[0], pair[1]))
        .collect();
    match ComplexMatrix::from_vec(rows, cols, entries) {
        Ok(m) => write_out(out, QbMatrix(m)),
        Err(e) => fail(e),
    }
}

/// Number of rows (0 for a null handle).
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_rows(m: *const QbMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns (0 for a null handle).
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_cols(m: *const QbMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Copies the entries out as interleaved `[re, im]` doubles; `buf_len`
/// must be at least `2*rows*cols`.
///
/// # Safety
/// `buf` must point to `buf_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_entries(
    m: *const QbMatrix,
    buf: *mut f64,
    buf_len: usize,
) -> QbStatus {
    let m = deref!(m);
    if buf.is_null() {
        set_error("buffer is null");
        return QbStatus::NullArgument;
    }
    let needed = 2 * m.0.rows() * m.0.cols();
    if buf_len < needed {
        set_error(format!("buffer holds {buf_len} doubles, need {needed}"));
        return QbStatus::BufferTooSmall;
    }
    let out = std::slice::from_raw_parts_mut(buf, needed);
    for (pair, z) in out.chunks_exact_mut(2).zip(m.0.entries()) {
        pair[0] = z.re;
        pair[1] = z.im;
    }
    QbStatus::Ok
}

/// Kronecker product `a ⊗ b`.
///
/// # Safety
/// `a` and `b` must be live matrix handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_kron(
    a: *const QbMatrix,
    b: *const QbMatrix,
    out: *mut *mut QbMatrix,
) -> QbStatus {
    let a = deref!(a);
    let b = deref!(b);
    write_out(out, QbMatrix(kron(&a.0, &b.0)))
}

/// Hilbert-Schmidt inner product Tr(A†B).
///
/// # Safety
/// Handles must be live; `re`/`im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_hs_inner(
    a: *const QbMatrix,
    b: *const QbMatrix,
    re: *mut f64,
    im: *mut f64,
) -> QbStatus {
    let a = deref!(a);
    let b = deref!(b);
    if re.is_null() || im.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match hs_inner(&a.0, &b.0) {
        Ok(v) => {
            *re = v.re;
            *im = v.im;
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Hilbert-Schmidt norm sqrt(Tr A†A).
///
/// # Safety
/// `a` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_hs_norm(a: *const QbMatrix, out: *mut f64) -> QbStatus {
    let a = deref!(a);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match hs_norm(&a.0) {
        Ok(v) => {
            *out = v;
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Ascending eigenvalues of a Hermitian matrix; `buf_len` must be at least
/// the dimension.
///
/// # Safety
/// `a` must be live; `buf` must point to `buf_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_hermitian_eigenvalues(
    a: *const QbMatrix,
    tol: f64,
    buf: *mut f64,
    buf_len: usize,
) -> QbStatus {
    let a = deref!(a);
    if buf.is_null() {
        set_error("buffer is null");
        return QbStatus::NullArgument;
    }
    if buf_len < a.0.rows() {
        set_error(format!(
            "buffer holds {buf_len} doubles, need {}",
            a.0.rows()
        ));
        return QbStatus::BufferTooSmall;
    }
    match hermitian_eigenvalues(&a.0, tol) {
        Ok(eigs) => {
            std::ptr::copy_nonoverlapping(eigs.as_ptr(), buf, eigs.len());
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Positivity check: min eigenvalue ≥ −tol.
///
/// # Safety
/// `a` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_matrix_is_positive_semidefinite(
    a: *const QbMatrix,
    tol: f64,
    out: *mut bool,
) -> QbStatus {
    let a = deref!(a);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match is_positive_semidefinite(&a.0, tol) {
        Ok(v) => {
            *out = v;
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Validates a matrix as a density matrix (Hermitian, unit trace, positive
/// semidefinite within `tol`).
///
/// # Safety
/// `matrix` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_state_new(
    matrix: *const QbMatrix,
    tol: f64,
    out: *mut *mut QbState,
) -> QbStatus {
    let m = deref!(matrix);
    match DensityMatrix::new(m.0.clone(), tol) {
        Ok(rho) => write_out(out, QbState(rho)),
        Err(e) => fail(e),
    }
}

/// Copies the underlying matrix out of a state.
///
/// # Safety
/// `state` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_state_matrix(
    state: *const QbState,
    out: *mut *mut QbMatrix,
) -> QbStatus {
    let s = deref!(state);
    write_out(out, QbMatrix(s.0.matrix().clone()))
}

/// Hilbert-space dimension of the state (0 for null).
///
/// # Safety
/// `state` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn qb_state_dim(state: *const QbState) -> usize {
    state.as_ref().map_or(0, |s| s.0.dim())
}

/// Purity Tr ρ².
///
/// # Safety
/// `state` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_state_purity(state: *const QbState, out: *mut f64) -> QbStatus {
    let s = deref!(state);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    *out = s.0.purity();
    QbStatus::Ok
}

macro_rules! state_factory {
    ($(#[$doc:meta])* $name:ident, |$($arg:ident : $ty:ty),*| $body:expr) => {
        $(#[$doc])*
        /// # Safety
        /// `out` must be a valid pointer.
        #[no_mangle]
        pub unsafe extern "C" fn $name($($arg: $ty,)* out: *mut *mut QbState) -> QbStatus {
            match $body {
                Ok(rho) => write_out(out, QbState(rho)),
                Err(e) => fail(e),
            }
        }
    };
}

state_factory!(
    /// Maximally entangled two-qudit state |φ₊⟩⟨φ₊| on d².
    qb_bell_state,
    |d: usize| bell_state(d)
);
state_factory!(
    /// Isotropic state α|φ₊⟩⟨φ₊| + (1−α)/d²·1; α ∈ [−1/(d²−1), 1].
    qb_isotropic_state,
    |d: usize, alpha: f64| isotropic_state(d, alpha)
);
state_factory!(
    /// Separable state closest to the entangled isotropic family.
    qb_nearest_separable_iso,
    |d: usize| nearest_separable_iso(d)
);
state_factory!(
    /// Seeded random density matrix G G†/Tr(G G†).
    qb_random_density_matrix,
    |d: usize, seed: u64| random_density_matrix(d, seed)
);
state_factory!(
    /// Seeded random pure product state on d².
    qb_random_pure_product_state,
    |d: usize, seed: u64| random_pure_product_state(d, seed)
);

macro_rules! operator_factory {
    ($(#[$doc:meta])* $name:ident, $f:path) => {
        $(#[$doc])*
        /// # Safety
        /// `out` must be a valid pointer.
        #[no_mangle]
        pub unsafe extern "C" fn $name(d: usize, out: *mut *mut QbMatrix) -> QbStatus {
            match $f(d) {
                Ok(m) => write_out(out, QbMatrix(m)),
                Err(e) => fail(e),
            }
        }
    };
}

operator_factory!(
    /// Gell-Mann correlation operator Λ on d².
    qb_lambda_operator,
    lambda_operator
);
operator_factory!(
    /// Polarization correlation operator T on d² (Λ = 2T).
    qb_t_operator,
    t_operator
);
operator_factory!(
    /// Weyl correlation operator U on d² (T = U/d).
    qb_u_operator,
    u_operator
);

// ---------------------------------------------------------------------------
// Bases and Bloch vectors
// ---------------------------------------------------------------------------

/// Generates an operator basis for dimension `d`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qb_basis_generate(
    family: QbBasisFamily,
    d: usize,
    out: *mut *mut QbBasis,
) -> QbStatus {
    match OperatorBasis::generate(family.into(), d) {
        Ok(b) => write_out(out, QbBasis(b)),
        Err(e) => fail(e),
    }
}

/// Number of elements (d²−1 for the Gell-Mann family, d² otherwise).
///
/// # Safety
/// `basis` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn qb_basis_len(basis: *const QbBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.0.len())
}

/// Orthogonality constant N in Tr(A_i†A_j) = N δ_ij.
///
/// # Safety
/// `basis` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_basis_norm_constant(
    basis: *const QbBasis,
    out: *mut f64,
) -> QbStatus {
    let b = deref!(basis);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    *out = b.0.norm_constant();
    QbStatus::Ok
}

/// Copies element `index` of the basis into a fresh matrix handle.
///
/// # Safety
/// `basis` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_basis_element(
    basis: *const QbBasis,
    index: usize,
    out: *mut *mut QbMatrix,
) -> QbStatus {
    let b = deref!(basis);
    match b.0.elements().get(index) {
        Some((_, m)) => write_out(out, QbMatrix(m.clone())),
        None => {
            set_error(format!(
                "element index {index} out of range 0..{}",
                b.0.len()
            ));
            QbStatus::InvalidArgument
        }
    }
}

/// Writes the label of element `index` (e.g. `s:1,2` or `1,-1`) into `buf`
/// as a NUL-terminated string. Returns the full length including the
/// terminator.
///
/// # Safety
/// `basis` must be live; `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn qb_basis_label(
    basis: *const QbBasis,
    index: usize,
    buf: *mut c_char,
    buf_len: usize,
) -> QbStatus {
    let b = deref!(basis);
    if buf.is_null() || buf_len == 0 {
        set_error("label buffer is null or empty");
        return QbStatus::NullArgument;
    }
    let Some((label, _)) = b.0.elements().get(index) else {
        set_error(format!(
            "element index {index} out of range 0..{}",
            b.0.len()
        ));
        return QbStatus::InvalidArgument;
    };
    let text = CString::new(label.to_string()).expect("labels have no NUL");
    let bytes = text.as_bytes_with_nul();
    if buf_len < bytes.len() {
        set_error(format!(
            "label buffer holds {buf_len} bytes, need {}",
            bytes.len()
        ));
        return QbStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
    QbStatus::Ok
}

/// Projects a state onto a basis family, producing its Bloch vector.
///
/// # Safety
/// `state` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_decompose(
    state: *const QbState,
    family: QbBasisFamily,
    out: *mut *mut QbBloch,
) -> QbStatus {
    let s = deref!(state);
    match decompose(&s.0, family.into()) {
        Ok(b) => write_out(out, QbBloch(b)),
        Err(e) => fail(e),
    }
}

/// Builds a Bloch vector from `len/2` interleaved complex components
/// (must equal d²−1 components in basis order).
///
/// # Safety
/// `components` must point to `len` readable doubles; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_bloch_new(
    family: QbBasisFamily,
    dim: usize,
    components: *const f64,
    len: usize,
    out: *mut *mut QbBloch,
) -> QbStatus {
    if components.is_null() {
        set_error("component pointer is null");
        return QbStatus::NullArgument;
    }
    if !len.is_multiple_of(2) {
        set_error("component buffer length must be even (interleaved re, im)");
        return QbStatus::InvalidArgument;
    }
    let slice = std::slice::from_raw_parts(components, len);
    let comps = slice
        .chunks_exact(2)
        .map(|pair| Complex64::new(pair[0], pair[1]))
        .collect();
    match BlochVector::new(family.into(), dim, comps) {
        Ok(b) => write_out(out, QbBloch(b)),
        Err(e) => fail(e),
    }
}

/// Number of components (d²−1; 0 for null).
///
/// # Safety
/// `bloch` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn qb_bloch_len(bloch: *const QbBloch) -> usize {
    bloch.as_ref().map_or(0, |b| b.0.components().len())
}

/// Copies the components out as interleaved `[re, im]` doubles
/// (`buf_len ≥ 2·len`).
///
/// # Safety
/// `bloch` must be live; `buf` must point to `buf_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qb_bloch_components(
    bloch: *const QbBloch,
    buf: *mut f64,
    buf_len: usize,
) -> QbStatus {
    let b = deref!(bloch);
    if buf.is_null() {
        set_error("buffer is null");
        return QbStatus::NullArgument;
    }
    let needed = 2 * b.0.components().len();
    if buf_len < needed {
        set_error(format!("buffer holds {buf_len} doubles, need {needed}"));
        return QbStatus::BufferTooSmall;
    }
    let out = std::slice::from_raw_parts_mut(buf, needed);
    for (pair, z) in out.chunks_exact_mut(2).zip(b.0.components()) {
        pair[0] = z.re;
        pair[1] = z.im;
    }
    QbStatus::Ok
}

/// Euclidean length of the Bloch vector.
///
/// # Safety
/// `bloch` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_bloch_radius(bloch: *const QbBloch, out: *mut f64) -> QbStatus {
    let b = deref!(bloch);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    *out = b.0.radius();
    QbStatus::Ok
}

/// Family radius bound: pure states sit on it, all states inside.
#[no_mangle]
pub extern "C" fn qb_radius_bound(family: QbBasisFamily, d: usize) -> f64 {
    radius_bound(family.into(), d)
}

/// Rebuilds the matrix (1/d)·1 + Σ b_i A_i. `is_state` reports whether it
/// is positive semidefinite; when false the matrix is still returned and
/// `min_eigenvalue` carries the offending eigenvalue.
///
/// # Safety
/// `bloch` must be live; `out_matrix`, `is_state`, `min_eigenvalue` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qb_reconstruct(
    bloch: *const QbBloch,
    tol: f64,
    out_matrix: *mut *mut QbMatrix,
    is_state: *mut bool,
    min_eigenvalue: *mut f64,
) -> QbStatus {
    let b = deref!(bloch);
    if is_state.is_null() || min_eigenvalue.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match reconstruct(&b.0, tol) {
        Ok(Reconstruction::State(rho)) => {
            *is_state = true;
            *min_eigenvalue = 0.0;
            write_out(out_matrix, QbMatrix(rho.matrix().clone()))
        }
        Ok(Reconstruction::NonState {
            matrix,
            min_eigenvalue: min,
        }) => {
            *is_state = false;
            *min_eigenvalue = min;
            write_out(out_matrix, QbMatrix(matrix))
        }
        Err(e) => fail(e),
    }
}

// ---------------------------------------------------------------------------
// Witnesses and the spin-1 layer
// ---------------------------------------------------------------------------

/// Hilbert-Schmidt measure of the isotropic state (α in the entangled
/// range [1/(d+1), 1]).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_hs_measure_iso(d: usize, alpha: f64, out: *mut f64) -> QbStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match hs_measure_iso(d, alpha) {
        Ok(v) => {
            *out = v;
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Maximal violation of the witness inequality; equals the measure.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_max_violation_iso(d: usize, alpha: f64, out: *mut f64) -> QbStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match max_violation_iso(d, alpha) {
        Ok(v) => {
            *out = v;
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Closed-form optimal witness for entangled isotropic states.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qb_optimal_witness_iso(
    d: usize,
    family: QbBasisFamily,
    out: *mut *mut QbWitness,
) -> QbStatus {
    match optimal_witness_iso(d, family.into()) {
        Ok(w) => write_out(out, QbWitness(w)),
        Err(e) => fail(e),
    }
}

/// Guess-method operator for a candidate nearest separable state.
///
/// # Safety
/// `guess` and `target` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_guess_witness(
    guess: *const QbState,
    target: *const QbState,
    out: *mut *mut QbWitness,
) -> QbStatus {
    let g = deref!(guess);
    let t = deref!(target);
    match guess_witness(&g.0, &t.0) {
        Ok(w) => write_out(out, QbWitness(w)),
        Err(e) => fail(e),
    }
}

/// Copies the witness operator into a fresh matrix handle.
///
/// # Safety
/// `witness` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_witness_operator(
    witness: *const QbWitness,
    out: *mut *mut QbMatrix,
) -> QbStatus {
    let w = deref!(witness);
    write_out(out, QbMatrix(w.0.operator().clone()))
}

/// ‖ρ̃ − ρ_ent‖ of the witness construction (0 when not applicable).
///
/// # Safety
/// `witness` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn qb_witness_direction_norm(witness: *const QbWitness) -> f64 {
    witness.as_ref().map_or(0.0, |w| w.0.direction_norm())
}

/// Expectation value Tr(Aρ).
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_eval_witness(
    witness: *const QbWitness,
    state: *const QbState,
    out: *mut f64,
) -> QbStatus {
    let w = deref!(witness);
    let s = deref!(state);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match eval_witness(&w.0, &s.0) {
        Ok(v) => {
            *out = v;
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Evaluates the witness on `n_samples` seeded random pure product states.
///
/// # Safety
/// `witness` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qb_verify_witness(
    witness: *const QbWitness,
    d: usize,
    n_samples: usize,
    seed: u64,
    out: *mut QbWitnessVerdict,
) -> QbStatus {
    let w = deref!(witness);
    if out.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    match verify_witness(&w.0, d, n_samples, seed) {
        Ok(v) => {
            *out = QbWitnessVerdict {
                min_sep_expectation: v.min_sep_expectation,
                value_on_target: v.value_on_target,
                n_samples: v.n_samples as u64,
                detected: v.detected,
            };
            QbStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Spin-1 measurement report for a 9×9 two-qutrit state.
///
/// # Safety
/// `state` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qb_spin1_report(
    state: *const QbState,
    out: *mut *mut QbSpin1Report,
) -> QbStatus {
    let s = deref!(state);
    match witness_expectation_terms(&s.0) {
        Ok(report) => write_out(out, QbSpin1Report(report)),
        Err(e) => fail(e),
    }
}

/// Number of measured observables in the report (0 for null).
///
/// # Safety
/// `report` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn qb_spin1_report_len(report: *const QbSpin1Report) -> usize {
    report.as_ref().map_or(0, |r| r.0.terms.len())
}

/// Reads term `index`: observable name (NUL-terminated, truncated to
/// `name_len`), measured value and its weight in the ⟨Λ⟩ assembly.
///
/// # Safety
/// `report` must be live; `name` must point to `name_len` writable bytes;
/// `value` and `weight` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_spin1_report_term(
    report: *const QbSpin1Report,
    index: usize,
    name: *mut c_char,
    name_len: usize,
    value: *mut f64,
    weight: *mut f64,
) -> QbStatus {
    let r = deref!(report);
    let Some(term) = r.0.terms.get(index) else {
        set_error(format!(
            "term index {index} out of range 0..{}",
            r.0.terms.len()
        ));
        return QbStatus::InvalidArgument;
    };
    if name.is_null() || name_len == 0 || value.is_null() || weight.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    let text = CString::new(term.observable.clone()).expect("names have no NUL");
    let bytes = text.as_bytes_with_nul();
    let n = bytes.len().min(name_len);
    std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, name, n);
    *name.add(n - 1) = 0;
    *value = term.value;
    *weight = term.lambda_coefficient;
    QbStatus::Ok
}

/// Assembled ⟨Λ⟩ and witness expectation ⟨A_iso⟩ of the report.
///
/// # Safety
/// `report` must be live; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn qb_spin1_report_totals(
    report: *const QbSpin1Report,
    lambda_expectation: *mut f64,
    witness_expectation: *mut f64,
) -> QbStatus {
    let r = deref!(report);
    if lambda_expectation.is_null() || witness_expectation.is_null() {
        set_error("output pointer is null");
        return QbStatus::NullArgument;
    }
    *lambda_expectation = r.0.lambda_expectation;
    *witness_expectation = r.0.witness_expectation;
    QbStatus::Ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip_and_kron() {
        unsafe {
            let data = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0]; // diag(1,-1)
            let mut m: *mut QbMatrix = std::ptr::null_mut();
            assert_eq!(qb_matrix_new(2, 2, data.as_ptr(), &mut m), QbStatus::Ok);
            assert_eq!(qb_matrix_rows(m), 2);

            let mut out = [0.0f64; 8];
            assert_eq!(qb_matrix_entries(m, out.as_mut_ptr(), 8), QbStatus::Ok);
            assert_eq!(out, data);

            let mut k: *mut QbMatrix = std::ptr::null_mut();
            assert_eq!(qb_matrix_kron(m, m, &mut k), QbStatus::Ok);
            assert_eq!(qb_matrix_rows(k), 4);
            let mut norm = 0.0;
            assert_eq!(qb_matrix_hs_norm(k, &mut norm), QbStatus::Ok);
            assert!((norm - 2.0).abs() < 1e-12);

            qb_matrix_free(k);
            qb_matrix_free(m);
        }
    }

    #[test]
    fn status_and_error_message_on_bad_input() {
        unsafe {
            let data = [f64::NAN, 0.0];
            let mut m: *mut QbMatrix = std::ptr::null_mut();
            let status = qb_matrix_new(1, 1, data.as_ptr(), &mut m);
            assert_eq!(status, QbStatus::NumericFailure);
            let mut buf = [0i8; 128];
            let len = qb_last_error_message(buf.as_mut_ptr(), buf.len());
            assert!(len > 0);
        }
    }

    #[test]
    fn witness_flow_over_the_c_surface() {
        unsafe {
            let mut w: *mut QbWitness = std::ptr::null_mut();
            assert_eq!(
                qb_optimal_witness_iso(3, QbBasisFamily::Ggm, &mut w),
                QbStatus::Ok
            );
            let mut rho: *mut QbState = std::ptr::null_mut();
            assert_eq!(qb_bell_state(3, &mut rho), QbStatus::Ok);
            let mut value = 0.0;
            assert_eq!(qb_eval_witness(w, rho, &mut value), QbStatus::Ok);
            assert!((value + 1.0 / 2f64.sqrt()).abs() < 1e-9);

            let mut verdict = QbWitnessVerdict {
                min_sep_expectation: 0.0,
                value_on_target: 0.0,
                n_samples: 0,
                detected: false,
            };
            assert_eq!(qb_verify_witness(w, 3, 500, 11, &mut verdict), QbStatus::Ok);
            assert!(verdict.detected);
            assert!(verdict.min_sep_expectation >= -1e-9);

            let mut report: *mut QbSpin1Report = std::ptr::null_mut();
            assert_eq!(qb_spin1_report(rho, &mut report), QbStatus::Ok);
            assert_eq!(qb_spin1_report_len(report), 15);
            let mut lambda = 0.0;
            let mut witness_value = 0.0;
            assert_eq!(
                qb_spin1_report_totals(report, &mut lambda, &mut witness_value),
                QbStatus::Ok
            );
            assert!((lambda - 16.0 / 3.0).abs() < 1e-9);

            qb_spin1_report_free(report);
            qb_state_free(rho);
            qb_witness_free(w);
        }
    }

    #[test]
    fn decompose_reconstruct_over_the_c_surface() {
        unsafe {
            let mut rho: *mut QbState = std::ptr::null_mut();
            assert_eq!(qb_random_density_matrix(3, 42, &mut rho), QbStatus::Ok);
            let mut bloch: *mut QbBloch = std::ptr::null_mut();
            assert_eq!(
                qb_decompose(rho, QbBasisFamily::Wob, &mut bloch),
                QbStatus::Ok
            );
            assert_eq!(qb_bloch_len(bloch), 8);
            let mut radius = 0.0;
            assert_eq!(qb_bloch_radius(bloch, &mut radius), QbStatus::Ok);
            assert!(radius <= qb_radius_bound(QbBasisFamily::Wob, 3) + 1e-12);

            let mut matrix: *mut QbMatrix = std::ptr::null_mut();
            let mut is_state = false;
            let mut min_eig = 0.0;
            assert_eq!(
                qb_reconstruct(bloch, 1e-9, &mut matrix, &mut is_state, &mut min_eig),
                QbStatus::Ok
            );
            assert!(is_state);

            let mut original: *mut QbMatrix = std::ptr::null_mut();
            assert_eq!(qb_state_matrix(rho, &mut original), QbStatus::Ok);
            let mut a = [0.0f64; 18];
            let mut b = [0.0f64; 18];
            assert_eq!(qb_matrix_entries(matrix, a.as_mut_ptr(), 18), QbStatus::Ok);
            assert_eq!(qb_matrix_entries(original, b.as_mut_ptr(), 18), QbStatus::Ok);
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9);
            }

            qb_matrix_free(matrix);
            qb_matrix_free(original);
            qb_bloch_free(bloch);
            qb_state_free(rho);
        }
    }

    #[test]
    fn basis_labels_and_buffer_guards() {
        unsafe {
            let mut basis: *mut QbBasis = std::ptr::null_mut();
            assert_eq!(
                qb_basis_generate(QbBasisFamily::Pob, 3, &mut basis),
                QbStatus::Ok
            );
            assert_eq!(qb_basis_len(basis), 9);
            let mut n = 0.0;
            assert_eq!(qb_basis_norm_constant(basis, &mut n), QbStatus::Ok);
            assert_eq!(n, 1.0);

            let mut buf = [0i8; 16];
            assert_eq!(
                qb_basis_label(basis, 1, buf.as_mut_ptr(), buf.len()),
                QbStatus::Ok
            );
            let label = std::ffi::CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
            assert_eq!(label, "1,-1");

            let mut tiny = [0i8; 2];
            assert_eq!(
                qb_basis_label(basis, 1, tiny.as_mut_ptr(), tiny.len()),
                QbStatus::BufferTooSmall
            );
            assert_eq!(
                qb_basis_element(basis, 99, &mut std::ptr::null_mut()),
                QbStatus::InvalidArgument
            );
            qb_basis_free(basis);
        }
    }
}
