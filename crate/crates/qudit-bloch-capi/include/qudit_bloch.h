#ifndef QUDIT_BLOCH_H
#define QUDIT_BLOCH_H

/* This file is generated by cbindgen from qudit-bloch-capi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible C-API call.
typedef enum QbStatus {
  QB_STATUS_OK = 0,
  // A required pointer argument was null.
  QB_STATUS_NULL_ARGUMENT = 1,
  // An argument was out of range or otherwise invalid.
  QB_STATUS_INVALID_ARGUMENT = 2,
  // Matrix or buffer dimensions do not match.
  QB_STATUS_DIMENSION_MISMATCH = 3,
  // Input failed a state/witness validation (Hermiticity, trace,
  // positivity).
  QB_STATUS_VALIDATION_FAILED = 4,
  // A numerical procedure failed (non-convergence, non-finite values).
  QB_STATUS_NUMERIC_FAILURE = 5,
  // A caller-provided buffer is too small.
  QB_STATUS_BUFFER_TOO_SMALL = 6,
} QbStatus;

// Operator basis family selector.
typedef enum QbBasisFamily {
  QB_BASIS_FAMILY_GGM = 0,
  QB_BASIS_FAMILY_POB = 1,
  QB_BASIS_FAMILY_WOB = 2,
} QbBasisFamily;

// Opaque operator basis.
typedef struct QbBasis QbBasis;

// Opaque Bloch coefficient vector.
typedef struct QbBloch QbBloch;

// Opaque dense complex matrix.
typedef struct QbMatrix QbMatrix;

// Opaque spin-1 measurement report.
typedef struct QbSpin1Report QbSpin1Report;

// Opaque validated density matrix.
typedef struct QbState QbState;

// Opaque entanglement witness.
typedef struct QbWitness QbWitness;

// Outcome of a witness verification sweep.
typedef struct QbWitnessVerdict {
  // Minimum expectation over the sampled pure product states.
  double min_sep_expectation;
  // Expectation on the witness's target state.
  double value_on_target;
  uint64_t n_samples;
  // Negative on target, nonnegative (to 1e-9) on all samples.
  bool detected;
} QbWitnessVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the most recent error message of this thread into `buf` (NUL
// terminated, truncated to `len` bytes). Returns the full message length
// including the terminator, or 0 when `buf` is null or no error is set.
//
// # Safety
// `buf` must point to at least `len` writable bytes.
size_t qb_last_error_message(char *buf, size_t len);

// Creates a matrix from `rows`×`cols` interleaved `[re, im]` doubles
// (row-major, so `data` holds `2*rows*cols` values).
//
// # Safety
// `data` must point to `2*rows*cols` readable doubles; `out` must be a
// valid pointer.
enum QbStatus qb_matrix_new(size_t rows, size_t cols, const double *data, struct QbMatrix **out);

// Number of rows (0 for a null handle).
//
// # Safety
// `m` must be null or a live matrix handle.
size_t qb_matrix_rows(const struct QbMatrix *m);

// Number of columns (0 for a null handle).
//
// # Safety
// `m` must be null or a live matrix handle.
size_t qb_matrix_cols(const struct QbMatrix *m);

// Copies the entries out as interleaved `[re, im]` doubles; `buf_len`
// must be at least `2*rows*cols`.
//
// # Safety
// `buf` must point to `buf_len` writable doubles.
enum QbStatus qb_matrix_entries(const struct QbMatrix *m, double *buf, size_t buf_len);

// Kronecker product `a ⊗ b`.
//
// # Safety
// `a` and `b` must be live matrix handles; `out` must be valid.
enum QbStatus qb_matrix_kron(const struct QbMatrix *a,
                             const struct QbMatrix *b,
                             struct QbMatrix **out);

// Hilbert-Schmidt inner product Tr(A†B).
//
// # Safety
// Handles must be live; `re`/`im` must be writable.
enum QbStatus qb_matrix_hs_inner(const struct QbMatrix *a,
                                 const struct QbMatrix *b,
                                 double *re,
                                 double *im);

// Hilbert-Schmidt norm sqrt(Tr A†A).
//
// # Safety
// `a` must be live; `out` writable.
enum QbStatus qb_matrix_hs_norm(const struct QbMatrix *a, double *out);

// Ascending eigenvalues of a Hermitian matrix; `buf_len` must be at least
// the dimension.
//
// # Safety
// `a` must be live; `buf` must point to `buf_len` writable doubles.
enum QbStatus qb_matrix_hermitian_eigenvalues(const struct QbMatrix *a,
                                              double tol,
                                              double *buf,
                                              size_t buf_len);

// Positivity check: min eigenvalue ≥ −tol.
//
// # Safety
// `a` must be live; `out` writable.
enum QbStatus qb_matrix_is_positive_semidefinite(const struct QbMatrix *a, double tol, bool *out);

// Validates a matrix as a density matrix (Hermitian, unit trace, positive
// semidefinite within `tol`).
//
// # Safety
// `matrix` must be live; `out` valid.
enum QbStatus qb_state_new(const struct QbMatrix *matrix, double tol, struct QbState **out);

// Copies the underlying matrix out of a state.
//
// # Safety
// `state` must be live; `out` valid.
enum QbStatus qb_state_matrix(const struct QbState *state, struct QbMatrix **out);

// Hilbert-space dimension of the state (0 for null).
//
// # Safety
// `state` must be null or live.
size_t qb_state_dim(const struct QbState *state);

// Purity Tr ρ².
//
// # Safety
// `state` must be live; `out` writable.
enum QbStatus qb_state_purity(const struct QbState *state, double *out);

// Generates an operator basis for dimension `d`.
//
// # Safety
// `out` must be a valid pointer.
enum QbStatus qb_basis_generate(enum QbBasisFamily family, size_t d, struct QbBasis **out);

// Number of elements (d²−1 for the Gell-Mann family, d² otherwise).
//
// # Safety
// `basis` must be null or live.
size_t qb_basis_len(const struct QbBasis *basis);

// Orthogonality constant N in Tr(A_i†A_j) = N δ_ij.
//
// # Safety
// `basis` must be live; `out` writable.
enum QbStatus qb_basis_norm_constant(const struct QbBasis *basis, double *out);

// Copies element `index` of the basis into a fresh matrix handle.
//
// # Safety
// `basis` must be live; `out` valid.
enum QbStatus qb_basis_element(const struct QbBasis *basis, size_t index, struct QbMatrix **out);

// Writes the label of element `index` (e.g. `s:1,2` or `1,-1`) into `buf`
// as a NUL-terminated string. Returns the full length including the
// terminator.
//
// # Safety
// `basis` must be live; `buf` must point to `buf_len` writable bytes.
enum QbStatus qb_basis_label(const struct QbBasis *basis, size_t index, char *buf, size_t buf_len);

// Projects a state onto a basis family, producing its Bloch vector.
//
// # Safety
// `state` must be live; `out` valid.
enum QbStatus qb_decompose(const struct QbState *state,
                           enum QbBasisFamily family,
                           struct QbBloch **out);

// Builds a Bloch vector from `len/2` interleaved complex components
// (must equal d²−1 components in basis order).
//
// # Safety
// `components` must point to `len` readable doubles; `out` valid.
enum QbStatus qb_bloch_new(enum QbBasisFamily family,
                           size_t dim,
                           const double *components,
                           size_t len,
                           struct QbBloch **out);

// Number of components (d²−1; 0 for null).
//
// # Safety
// `bloch` must be null or live.
size_t qb_bloch_len(const struct QbBloch *bloch);

// Copies the components out as interleaved `[re, im]` doubles
// (`buf_len ≥ 2·len`).
//
// # Safety
// `bloch` must be live; `buf` must point to `buf_len` writable doubles.
enum QbStatus qb_bloch_components(const struct QbBloch *bloch, double *buf, size_t buf_len);

// Euclidean length of the Bloch vector.
//
// # Safety
// `bloch` must be live; `out` writable.
enum QbStatus qb_bloch_radius(const struct QbBloch *bloch, double *out);

// Family radius bound: pure states sit on it, all states inside.
double qb_radius_bound(enum QbBasisFamily family, size_t d);

// Rebuilds the matrix (1/d)·1 + Σ b_i A_i. `is_state` reports whether it
// is positive semidefinite; when false the matrix is still returned and
// `min_eigenvalue` carries the offending eigenvalue.
//
// # Safety
// `bloch` must be live; `out_matrix`, `is_state`, `min_eigenvalue` must be
// valid pointers.
enum QbStatus qb_reconstruct(const struct QbBloch *bloch,
                             double tol,
                             struct QbMatrix **out_matrix,
                             bool *is_state,
                             double *min_eigenvalue);

// Hilbert-Schmidt measure of the isotropic state (α in the entangled
// range [1/(d+1), 1]).
//
// # Safety
// `out` must be writable.
enum QbStatus qb_hs_measure_iso(size_t d, double alpha, double *out);

// Maximal violation of the witness inequality; equals the measure.
//
// # Safety
// `out` must be writable.
enum QbStatus qb_max_violation_iso(size_t d, double alpha, double *out);

// Closed-form optimal witness for entangled isotropic states.
//
// # Safety
// `out` must be a valid pointer.
enum QbStatus qb_optimal_witness_iso(size_t d, enum QbBasisFamily family, struct QbWitness **out);

// Guess-method operator for a candidate nearest separable state.
//
// # Safety
// `guess` and `target` must be live; `out` valid.
enum QbStatus qb_guess_witness(const struct QbState *guess,
                               const struct QbState *target,
                               struct QbWitness **out);

// Copies the witness operator into a fresh matrix handle.
//
// # Safety
// `witness` must be live; `out` valid.
enum QbStatus qb_witness_operator(const struct QbWitness *witness, struct QbMatrix **out);

// ‖ρ̃ − ρ_ent‖ of the witness construction (0 when not applicable).
//
// # Safety
// `witness` must be null or live.
double qb_witness_direction_norm(const struct QbWitness *witness);

// Expectation value Tr(Aρ).
//
// # Safety
// Handles must be live; `out` writable.
enum QbStatus qb_eval_witness(const struct QbWitness *witness,
                              const struct QbState *state,
                              double *out);

// Evaluates the witness on `n_samples` seeded random pure product states.
//
// # Safety
// `witness` must be live; `out` writable.
enum QbStatus qb_verify_witness(const struct QbWitness *witness,
                                size_t d,
                                size_t n_samples,
                                uint64_t seed,
                                struct QbWitnessVerdict *out);

// Spin-1 measurement report for a 9×9 two-qutrit state.
//
// # Safety
// `state` must be live; `out` valid.
enum QbStatus qb_spin1_report(const struct QbState *state, struct QbSpin1Report **out);

// Number of measured observables in the report (0 for null).
//
// # Safety
// `report` must be null or live.
size_t qb_spin1_report_len(const struct QbSpin1Report *report);

// Reads term `index`: observable name (NUL-terminated, truncated to
// `name_len`), measured value and its weight in the ⟨Λ⟩ assembly.
//
// # Safety
// `report` must be live; `name` must point to `name_len` writable bytes;
// `value` and `weight` must be writable.
enum QbStatus qb_spin1_report_term(const struct QbSpin1Report *report,
                                   size_t index,
                                   char *name,
                                   size_t name_len,
                                   double *value,
                                   double *weight);

// Assembled ⟨Λ⟩ and witness expectation ⟨A_iso⟩ of the report.
//
// # Safety
// `report` must be live; outputs writable.
enum QbStatus qb_spin1_report_totals(const struct QbSpin1Report *report,
                                     double *lambda_expectation,
                                     double *witness_expectation);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUDIT_BLOCH_H */
