#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mdk/error.hpp"
#include "mdk/field.hpp"

namespace mdk {

/// Coordinate vector (v_0, ..., v_n) holding one diagonal. Reads outside
/// 0..n go through at() and yield zero.
template <Field F>
class DiagVec {
 public:
  DiagVec() = default;
  explicit DiagVec(std::vector<F> coords) : coords_(std::move(coords)) {}
  DiagVec(std::initializer_list<F> coords) : coords_(coords) {}

  /// Zero vector with coordinates 0..n.
  static DiagVec zeros(std::size_t n) { return DiagVec(std::vector<F>(n + 1)); }
  /// The unit vector (1, ..., 1) with coordinates 0..n.
  static DiagVec ones(std::size_t n) { return DiagVec(std::vector<F>(n + 1, F(1))); }

  std::size_t size() const noexcept { return coords_.size(); }
  /// Largest coordinate index.
  std::size_t n() const noexcept { return coords_.size() - 1; }

  /// Zero-extended read: v_j = 0 for j < 0 or j > n.
  const F& at(std::ptrdiff_t j) const noexcept {
    static const F zero{};
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(coords_.size())) return zero;
    return coords_[static_cast<std::size_t>(j)];
  }

  F& operator[](std::size_t j) noexcept { return coords_[j]; }
  const F& operator[](std::size_t j) const noexcept { return coords_[j]; }

  std::span<const F> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  /// Exact zero test: every coordinate compares equal to F{}.
  bool is_zero() const {
    for (const auto& x : coords_) {
      if (!(x == F{})) return false;
    }
    return true;
  }

  friend bool operator==(const DiagVec&, const DiagVec&) = default;

 private:
  std::vector<F> coords_;
};

namespace detail {
template <Field F>
void require_same_length(const DiagVec<F>& v, const DiagVec<F>& w, const char* op) {
  if (v.size() != w.size()) {
    throw ShapeMismatch(std::string(op) + ": diagonal vectors of length " + std::to_string(v.size()) +
                        " and " + std::to_string(w.size()));
  }
}
}  // namespace detail

/// Shift operator tau^i: result_j = v_{j+i}, zero-extended.
template <Field F>
DiagVec<F> tau(const DiagVec<F>& v, std::ptrdiff_t i) {
  std::vector<F> out(v.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = v.at(static_cast<std::ptrdiff_t>(j) + i);
  }
  return DiagVec<F>(std::move(out));
}

/// Coordinatewise (Hadamard) product.
template <Field F>
DiagVec<F> star(const DiagVec<F>& v, const DiagVec<F>& w) {
  detail::require_same_length(v, w, "star");
  std::vector<F> out(v.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = v[j] * w[j];
  return DiagVec<F>(std::move(out));
}

template <Field F>
DiagVec<F> add(const DiagVec<F>& v, const DiagVec<F>& w) {
  detail::require_same_length(v, w, "add");
  std::vector<F> out(v.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = v[j] + w[j];
  return DiagVec<F>(std::move(out));
}

template <Field F>
DiagVec<F> ones(std::size_t n) {
  return DiagVec<F>::ones(n);
}

}  // namespace mdk
