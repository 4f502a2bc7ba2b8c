#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "mdk/error.hpp"

namespace mdk {

inline constexpr double kDefaultZeroTolerance = 1e-12;

/// Gaussian rational: a pair of arbitrary-precision rationals kept in
/// canonical form (reduced, positive denominator), so equality of values is
/// equality of representations.
class ExactScalar {
 public:
  static constexpr bool is_exact = true;
  static constexpr std::string_view mode_name = "exact";

  ExactScalar() = default;
  template <std::integral I>
  ExactScalar(I value) : re_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class re, mpq_class im = 0);

  /// p/q with q != 0.
  static ExactScalar ratio(long p, long q);
  static ExactScalar parse(std::string_view text);

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  double magnitude() const;
  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Double-precision complex scalar. Zero tests use a process-wide tolerance
/// (default kDefaultZeroTolerance), absolute unless a scale is supplied.
class FloatScalar {
 public:
  static constexpr bool is_exact = false;
  static constexpr std::string_view mode_name = "float";

  FloatScalar() = default;
  template <typename T>
    requires std::is_arithmetic_v<T>
  FloatScalar(T value) : value_(static_cast<double>(value), 0.0) {}  // NOLINT(google-explicit-constructor)
  FloatScalar(double re, double im) : value_(re, im) {}
  explicit FloatScalar(std::complex<double> value) : value_(value) {}

  static FloatScalar parse(std::string_view text);

  static double zero_tolerance() noexcept;
  static void set_zero_tolerance(double tol);

  std::complex<double> value() const noexcept { return value_; }
  double real() const noexcept { return value_.real(); }
  double imag() const noexcept { return value_.imag(); }
  bool is_real() const noexcept { return value_.imag() == 0.0; }

  /// |a| <= tol (absolute).
  bool is_zero() const noexcept;
  /// |a| <= tol * scale.
  bool is_zero(double scale) const noexcept;
  double magnitude() const noexcept { return std::abs(value_); }
  std::string to_string() const;

  FloatScalar& operator+=(const FloatScalar& rhs) { value_ += rhs.value_; return *this; }
  FloatScalar& operator-=(const FloatScalar& rhs) { value_ -= rhs.value_; return *this; }
  FloatScalar& operator*=(const FloatScalar& rhs) { value_ *= rhs.value_; return *this; }
  FloatScalar& operator/=(const FloatScalar& rhs);

  friend FloatScalar operator+(FloatScalar lhs, const FloatScalar& rhs) { return lhs += rhs; }
  friend FloatScalar operator-(FloatScalar lhs, const FloatScalar& rhs) { return lhs -= rhs; }
  friend FloatScalar operator*(FloatScalar lhs, const FloatScalar& rhs) { return lhs *= rhs; }
  friend FloatScalar operator/(FloatScalar lhs, const FloatScalar& rhs) { return lhs /= rhs; }
  FloatScalar operator-() const { return FloatScalar(-value_); }

  friend bool operator==(const FloatScalar& a, const FloatScalar& b) { return a.value_ == b.value_; }

 private:
  std::complex<double> value_{0.0, 0.0};
};

template <class F>
concept Field = std::regular<F> && requires(const F a, const F b, std::string_view text) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.magnitude() } -> std::convertible_to<double>;
  { a.to_string() } -> std::same_as<std::string>;
  { F::parse(text) } -> std::same_as<F>;
  { F::is_exact } -> std::convertible_to<bool>;
  { F::mode_name } -> std::convertible_to<std::string_view>;
};

static_assert(Field<ExactScalar>);
static_assert(Field<FloatScalar>);

/// Mode conversion. Float to exact is exact (every finite double is a
/// dyadic rational); exact to float rounds.
template <Field To, Field From>
To field_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (To::is_exact) {
    return To(mpq_class(x.real()), mpq_class(x.imag()));
  } else {
    return To(x.real().get_d(), x.imag().get_d());
  }
}

}  // namespace mdk
