#pragma once

#include <cstdint>

#include "mdk/mdmatrix.hpp"

namespace mdk {

/// Product of two members of MD_{n,k}, computed diagonal by diagonal.
///
/// The diagonal at offset p of V times the diagonal at offset q of W lands on
/// offset p + q; pairs with |p + q|*k > n vanish. Each output coordinate is a
/// fixed-order sum over the contributing pairs, and the coordinates of one
/// output diagonal are filled in parallel (OpenMP). Cost is
/// O(#pairs * (n+1)) scalar products; no dense intermediate is formed.
template <Field F>
MDMatrix<F> mul(const MDMatrix<F>& v, const MDMatrix<F>& w);

/// a^m by repeated squaring; a^0 is the identity.
template <Field F>
MDMatrix<F> pow(const MDMatrix<F>& a, std::uint64_t m);

namespace serial {

/// Single-threaded reference product written in the shift-operator calculus:
/// every diagonal pair contributes one term built from tau and star, and
/// terms with equal offsets are summed. Kept for cross-checking mul() and as
/// the baseline in the benchmark.
template <Field F>
MDMatrix<F> mul(const MDMatrix<F>& v, const MDMatrix<F>& w);

}  // namespace serial

}  // namespace mdk
