#pragma once

#include "mdk/mdmatrix.hpp"

/// Dense brute-force routines. They ignore all structure and exist to
/// cross-check the structured kernels (tests, benchmark, `mdk check`).
/// Single-threaded; intended for orders up to a few hundred.
namespace mdk::reference {

/// Textbook triple loop.
template <Field F>
DenseMatrix<F> dense_mul(const DenseMatrix<F>& a, const DenseMatrix<F>& b);

/// Exact mode: Bareiss fraction-free elimination. Float mode: LU with
/// partial pivoting.
template <Field F>
F dense_det(const DenseMatrix<F>& a);

/// Gauss-Jordan elimination (partial pivoting in float mode). Throws
/// SingularMatrix when no usable pivot exists.
template <Field F>
DenseMatrix<F> dense_inv(const DenseMatrix<F>& a);

/// max |a_ij - b_ij| as a double.
template <Field F>
double max_abs_diff(const DenseMatrix<F>& a, const DenseMatrix<F>& b);

/// max_i sum_j |a_ij|.
template <Field F>
double norm_inf(const DenseMatrix<F>& a);

}  // namespace mdk::reference
