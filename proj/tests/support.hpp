// Shared generators and checks for the unit and acceptance suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "mdk/mdk.hpp"

namespace mdk::testing {

using Q = ExactScalar;
using C = FloatScalar;

inline Q q(long p, long d = 1) { return Q::ratio(p, d); }

/// Rational with numerator in [-range, range] and denominator in [1, range].
inline Q random_rational(std::mt19937_64& rng, long range = 5) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return Q::ratio(num(rng), den(rng));
}

/// Zero with probability zero_chance, else a random rational.
inline Q sparse_rational(std::mt19937_64& rng, double zero_chance, long range = 5) {
  std::bernoulli_distribution zero(zero_chance);
  return zero(rng) ? Q{} : random_rational(rng, range);
}

/// Random member of MD_{n,k} with diagonals up to |p| <= max_offset (default
/// all of them), coordinates drawn by `draw`, trailing-zero convention
/// respected.
template <Field F, class Draw>
MDMatrix<F> random_md(std::size_t n, std::size_t k, Draw&& draw, std::optional<std::size_t> max_offset = {}) {
  const int s = static_cast<int>(std::min(n / k, max_offset.value_or(n / k)));
  typename MDMatrix<F>::Diagonals diags;
  for (int p = -s; p <= s; ++p) {
    auto v = DiagVec<F>::zeros(n);
    const std::size_t shift = static_cast<std::size_t>(std::abs(p)) * k;
    for (std::size_t j = 0; j + shift <= n; ++j) v[j] = draw();
    diags.emplace(p, std::move(v));
  }
  return MDMatrix<F>(n, k, std::move(diags));
}

inline MDMatrix<Q> random_exact_md(std::mt19937_64& rng, std::size_t n, std::size_t k,
                                   std::optional<std::size_t> max_offset = {}) {
  return random_md<Q>(n, k, [&] { return random_rational(rng); }, max_offset);
}

template <Field F, class Draw>
KTridiagonal<F> random_k_tridiagonal(std::size_t n, std::size_t k, Draw&& draw) {
  KTridiagonal<F> t{n, k, DiagVec<F>::zeros(n), DiagVec<F>::zeros(n), DiagVec<F>::zeros(n)};
  for (std::size_t j = 0; j <= n; ++j) t.b[j] = draw();
  for (std::size_t j = 0; j + k <= n; ++j) {
    t.a[j] = draw();
    t.c[j] = draw();
  }
  return t;
}

/// Every entry with |i - j| not a multiple of k is exactly zero.
template <Field F>
bool lattice_conforming(const DenseMatrix<F>& d, std::size_t k) {
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap % k != 0 && !(d(i, j) == F{})) return false;
    }
  }
  return true;
}

/// Every stored diagonal is zero past coordinate n - |p|k.
template <Field F>
bool trailing_zeros_hold(const MDMatrix<F>& m) {
  for (const auto& [p, v] : m.diagonals()) {
    const std::size_t shift = static_cast<std::size_t>(std::abs(p)) * m.k();
    for (std::size_t j = m.n() + 1 - shift; j <= m.n(); ++j) {
      if (!(v[j] == F{})) return false;
    }
  }
  return true;
}

}  // namespace mdk::testing
