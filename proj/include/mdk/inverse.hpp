#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdk/algebra.hpp"
#include "mdk/mdmatrix.hpp"

namespace mdk {

/// The three diagonals of a k-tridiagonal matrix
///   A = N^{-k} D(a) + D(b) + D(c) N^{k},
/// i.e. a(j + k, j) = a_j, a(j, j) = b_j, a(j, j + k) = c_j. a and c carry
/// zeros beyond index n - k.
template <Field F>
struct KTridiagonal {
  std::size_t n;
  std::size_t k;
  DiagVec<F> a;
  DiagVec<F> b;
  DiagVec<F> c;

  /// Throws PreconditionViolated if m has diagonals beyond offsets -1, 0, +1.
  static KTridiagonal from_matrix(const MDMatrix<F>& m);
  MDMatrix<F> to_matrix() const;
};

/// True when every stored diagonal of m has offset -1, 0 or +1.
template <Field F>
bool is_k_tridiagonal(const MDMatrix<F>& m) {
  return m.bandwidth() <= 1;
}

/// Determinant of a k-tridiagonal matrix, fraction-free. Indices split into k
/// chains r, r+k, r+2k, ...; along each chain the continuant
///   g_m = b_j g_{m-1} - a_{j-k} c_{j-k} g_{m-2}
/// gives the determinant of that block, and the result is the product over
/// chains. Valid with zero pivots.
template <Field F>
F det_k_tridiagonal(const KTridiagonal<F>& a);

/// The pivot-quotient form prod f_j with f_j = b_j for j < k and
/// f_j = b_j - a_{j-k} c_{j-k} / f_{j-k} otherwise. nullopt when a needed
/// f_{j-k} is zero.
template <Field F>
std::optional<F> det_k_tridiagonal_quotient(const KTridiagonal<F>& a);

/// First failed nonsingularity condition for n + 1 <= 2k.
struct SingularityWitness {
  enum class Kind {
    ZeroMiddlePivot,  ///< b_j = 0 for some n+1-k <= j <= k-1
    ZeroPairMinor,    ///< b_j b_{j+k} - a_j c_j = 0 for some 0 <= j <= n-k
  };
  Kind kind;
  std::size_t j;
  std::string describe(std::size_t k) const;
};

struct NonsingularityReport {
  bool nonsingular;
  std::optional<SingularityWitness> witness;
};

/// Nonsingularity test valid when n + 1 <= 2k: A is invertible iff
///   b_j != 0           for j = n+1-k, ..., k-1   (empty when n + 1 = 2k)
///   b_j b_{j+k} - a_j c_j != 0   for j = 0, ..., n-k.
/// Throws PreconditionViolated when n + 1 > 2k.
template <Field F>
NonsingularityReport is_nonsingular_thm2(const KTridiagonal<F>& a);

/// Closed-form inverse for n + 1 <= 2k. The result is k-tridiagonal with
///   x_j = -a_j / d_j,  z_j = -c_j / d_j,  y_j = b_{j+k} / d_j,  y_{j+k} = b_j / d_j
/// for j = 0..n-k where d_j = b_j b_{j+k} - a_j c_j, and y_j = 1 / b_j on the
/// middle range n+1-k..k-1.
/// Throws SingularMatrix (with witness) or PreconditionViolated.
template <Field F>
MDMatrix<F> inv_thm2(const KTridiagonal<F>& a);

/// Coefficients nu_0..nu_{n+1} of Det(V - lambda E) in ascending powers.
template <Field F>
struct CharPoly {
  std::vector<F> coeffs;
};

/// Faddeev-LeVerrier run on structured products and traces only. Exact mode
/// only; throws ModeUnsupported for floats.
template <Field F>
CharPoly<F> char_poly(const MDMatrix<F>& v);

/// V^{-1} = -(1/nu_0) sum_{j=1}^{n+1} nu_j V^{j-1}, evaluated by Horner over
/// structured products. `on_step` sees every intermediate matrix. Exact mode
/// only; throws SingularMatrix when nu_0 = 0.
template <Field F>
MDMatrix<F> inv_cayley_hamilton(const MDMatrix<F>& v,
                                const std::function<void(const MDMatrix<F>&)>& on_step = {});

/// Production inverse. Grouping indices by residue mod k turns any member of
/// MD_{n,k} into k independent blocks with unit spacing; each is inverted by
/// Gauss-Jordan (first nonzero pivot in exact mode, partial pivoting in
/// float mode) and scattered back. Blocks run in parallel.
template <Field F>
MDMatrix<F> inv_general(const MDMatrix<F>& v);

/// a^m for any signed m; negative exponents invert via inv_general first.
template <Field F>
MDMatrix<F> pow_signed(const MDMatrix<F>& a, std::int64_t m);

}  // namespace mdk
