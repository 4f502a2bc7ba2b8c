#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "mdk/diagvec.hpp"
#include "mdk/error.hpp"
#include "mdk/field.hpp"

namespace mdk {

/// Full (n+1)x(n+1) row-major array. Used by the reference routines and for
/// conversions; the structured kernels never build one.
template <Field F>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  DenseMatrix(std::size_t dim, std::vector<F> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) throw ShapeMismatch("dense matrix data is not square");
  }
  DenseMatrix(std::initializer_list<std::initializer_list<F>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw ShapeMismatch("dense matrix rows must form a square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix e(dim);
    for (std::size_t i = 0; i < dim; ++i) e(i, i) = F(1);
    return e;
  }

  std::size_t dim() const noexcept { return dim_; }
  F& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<F> data_;
};

/// A member of MD_{n,k}: an (n+1)x(n+1) matrix whose only nonzero diagonals
/// sit at offsets p*k, |p| <= s = floor(n/k).
///
/// Storage follows A = sum_{p<0} N^{|p|k} D(v_p) + D(v_0) + sum_{p>0} D(v_p) N^{pk},
/// which fixes where each coordinate lands:
///   p >= 0:  a(i, i + p*k) = v_p[i]      (indexed by row)
///   p <  0:  a(j + |p|*k, j) = v_p[j]    (indexed by column)
/// Either way only coordinates 0..n-|p|*k are meaningful; the rest must be
/// zero. Absent offsets are zero diagonals, and all-zero diagonals are never
/// stored, so two equal matrices have equal diagonal maps.
template <Field F>
class MDMatrix {
 public:
  using scalar_type = F;
  using Diagonals = std::map<int, DiagVec<F>>;

  MDMatrix(std::size_t n, std::size_t k) : n_(n), k_(k) { validate_shape(); }

  MDMatrix(std::size_t n, std::size_t k, Diagonals diagonals) : n_(n), k_(k) {
    validate_shape();
    for (auto& [p, v] : diagonals) {
      validate_diagonal(p, v);
      if (!v.is_zero()) diags_.emplace(p, std::move(v));
    }
  }

  static MDMatrix zero(std::size_t n, std::size_t k) { return MDMatrix(n, k); }
  static MDMatrix identity(std::size_t n, std::size_t k) {
    return MDMatrix(n, k, {{0, DiagVec<F>::ones(n)}});
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t s() const noexcept { return n_ / k_; }
  std::size_t dim() const noexcept { return n_ + 1; }

  const Diagonals& diagonals() const noexcept { return diags_; }

  /// nullptr when the diagonal at offset p is zero.
  const DiagVec<F>* diagonal(int p) const {
    const auto it = diags_.find(p);
    return it == diags_.end() ? nullptr : &it->second;
  }

  DiagVec<F> diagonal_or_zero(int p) const {
    const auto* v = diagonal(p);
    return v ? *v : DiagVec<F>::zeros(n_);
  }

  /// Largest |p| with a nonzero diagonal (0 for diagonal and zero matrices).
  std::size_t bandwidth() const noexcept {
    if (diags_.empty()) return 0;
    const int lo = -diags_.begin()->first;
    const int hi = diags_.rbegin()->first;
    return static_cast<std::size_t>(std::max({lo, hi, 0}));
  }

  F entry(std::size_t i, std::size_t j) const {
    if (i > n_ || j > n_) {
      throw PreconditionViolated("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") outside a matrix of order " + std::to_string(dim()));
    }
    const auto gap = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i);
    if (gap % static_cast<std::ptrdiff_t>(k_) != 0) return F{};
    const int p = static_cast<int>(gap / static_cast<std::ptrdiff_t>(k_));
    const auto* v = diagonal(p);
    if (!v) return F{};
    return (*v)[p >= 0 ? i : j];
  }

  friend bool operator==(const MDMatrix&, const MDMatrix&) = default;

 private:
  void validate_shape() const {
    if (k_ < 1 || k_ > n_) {
      throw PreconditionViolated("spacing k=" + std::to_string(k_) + " must satisfy 1 <= k <= n=" +
                                 std::to_string(n_));
    }
  }

  void validate_diagonal(int p, DiagVec<F>& v) const {
    const auto mag = static_cast<std::size_t>(std::abs(p));
    if (mag > s()) {
      throw PreconditionViolated("offset " + std::to_string(p) + " exceeds s=" + std::to_string(s()));
    }
    if (v.size() != dim()) {
      throw ShapeMismatch("diagonal " + std::to_string(p) + " has " + std::to_string(v.size()) +
                          " coordinates, expected " + std::to_string(dim()));
    }
    for (std::size_t j = n_ - mag * k_ + 1; j <= n_; ++j) {
      if (!v[j].is_zero()) {
        throw PreconditionViolated("diagonal " + std::to_string(p) + " coordinate " + std::to_string(j) +
                                   " must be zero (only 0.." + std::to_string(n_ - mag * k_) +
                                   " lie inside the matrix)");
      }
      v[j] = F{};
    }
  }

  std::size_t n_;
  std::size_t k_;
  Diagonals diags_;
};

template <Field F>
DenseMatrix<F> to_dense(const MDMatrix<F>& a) {
  const std::size_t n = a.n();
  const std::size_t k = a.k();
  DenseMatrix<F> out(a.dim());
  for (const auto& [p, v] : a.diagonals()) {
    const std::size_t shift = static_cast<std::size_t>(std::abs(p)) * k;
    for (std::size_t j = 0; j + shift <= n; ++j) {
      if (p >= 0) {
        out(j, j + shift) = v[j];
      } else {
        out(j + shift, j) = v[j];
      }
    }
  }
  return out;
}

/// Extracts the diagonals at offsets p*k. Entries off that lattice must pass
/// the scalar zero test, otherwise OffLatticeNonzero names the first one.
template <Field F>
MDMatrix<F> from_dense(const DenseMatrix<F>& m, std::size_t k) {
  if (m.dim() < 2) throw PreconditionViolated("from_dense needs a matrix of order >= 2");
  const std::size_t n = m.dim() - 1;
  if (k < 1 || k > n) {
    throw PreconditionViolated("spacing k=" + std::to_string(k) + " must satisfy 1 <= k <= n=" +
                               std::to_string(n));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap % k != 0 && !m(i, j).is_zero()) throw OffLatticeNonzero(i, j);
    }
  }
  typename MDMatrix<F>::Diagonals diags;
  const int s = static_cast<int>(n / k);
  for (int p = -s; p <= s; ++p) {
    const std::size_t shift = static_cast<std::size_t>(std::abs(p)) * k;
    auto v = DiagVec<F>::zeros(n);
    for (std::size_t j = 0; j + shift <= n; ++j) {
      v[j] = p >= 0 ? m(j, j + shift) : m(j + shift, j);
    }
    diags.emplace(p, std::move(v));
  }
  return MDMatrix<F>(n, k, std::move(diags));
}

template <Field F>
F trace(const MDMatrix<F>& a) {
  F sum{};
  if (const auto* d = a.diagonal(0)) {
    for (const auto& x : *d) sum += x;
  }
  return sum;
}

namespace detail {
template <Field F>
void require_same_shape(const MDMatrix<F>& a, const MDMatrix<F>& b, const char* op) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw ShapeMismatch(std::string(op) + ": shapes (n=" + std::to_string(a.n()) + ", k=" +
                        std::to_string(a.k()) + ") and (n=" + std::to_string(b.n()) +
                        ", k=" + std::to_string(b.k()) + ") differ");
  }
}
}  // namespace detail

template <Field F>
MDMatrix<F> add(const MDMatrix<F>& a, const MDMatrix<F>& b) {
  detail::require_same_shape(a, b, "add");
  auto diags = a.diagonals();
  for (const auto& [p, w] : b.diagonals()) {
    auto [it, inserted] = diags.try_emplace(p, w);
    if (!inserted) it->second = add(it->second, w);
  }
  return MDMatrix<F>(a.n(), a.k(), std::move(diags));
}

template <Field F>
MDMatrix<F> scale(const MDMatrix<F>& a, const F& factor) {
  auto diags = a.diagonals();
  for (auto& [p, v] : diags) {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] *= factor;
  }
  return MDMatrix<F>(a.n(), a.k(), std::move(diags));
}

/// a + c*E.
template <Field F>
MDMatrix<F> add_identity(const MDMatrix<F>& a, const F& c) {
  auto diags = a.diagonals();
  auto [it, inserted] = diags.try_emplace(0, DiagVec<F>::zeros(a.n()));
  for (std::size_t j = 0; j < it->second.size(); ++j) it->second[j] += c;
  return MDMatrix<F>(a.n(), a.k(), std::move(diags));
}

template <Field To, Field From>
MDMatrix<To> convert(const MDMatrix<From>& a) {
  typename MDMatrix<To>::Diagonals diags;
  for (const auto& [p, v] : a.diagonals()) {
    std::vector<To> coords;
    coords.reserve(v.size());
    for (const auto& x : v) coords.push_back(field_cast<To>(x));
    diags.emplace(p, DiagVec<To>(std::move(coords)));
  }
  return MDMatrix<To>(a.n(), a.k(), std::move(diags));
}

}  // namespace mdk
