#include "mdk/field.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <string>

namespace mdk {

namespace {

std::atomic<double> g_zero_tolerance{kDefaultZeroTolerance};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct ComplexParts {
  std::string_view re;
  std::string_view im;  // sign and magnitude, without the trailing 'i'
  bool has_im = false;
};

// Splits "re", "re+imi", "re-imi", "imi". A sign directly after an exponent
// marker belongs to the number.
ComplexParts split_complex(std::string_view s) {
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return {s, {}, false};
  const auto body = s.substr(0, s.size() - 1);
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char ch = body[pos];
    if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      return {body.substr(0, pos), body.substr(pos), true};
    }
  }
  return {{}, body, true};
}

// "" / "+" / "-" stand for a unit imaginary coefficient.
std::string unit_if_bare(std::string_view im) {
  if (im.empty() || im == "+") return "1";
  if (im == "-") return "-1";
  return std::string(im.front() == '+' ? im.substr(1) : im);
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpq_class parse_rational(std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (den.find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q;
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  q.set_str(canonical, 10);
  q.canonicalize();
  return q;
}

double parse_double(std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const double num = parse_double(s.substr(0, slash));
    const double den = parse_double(s.substr(slash + 1));
    if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError("malformed float '" + std::string(text) + "'");
  }
  return value;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

template <typename Part, typename IsNeg, typename Fmt>
std::string format_complex(const Part& re, const Part& im, bool im_zero, IsNeg is_negative, Fmt fmt) {
  std::string out = fmt(re);
  if (im_zero) return out;
  if (is_negative(im)) {
    out += '-';
    out += fmt(-im);
  } else {
    out += '+';
    out += fmt(im);
  }
  out += 'i';
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactScalar ExactScalar::ratio(long p, long q) {
  if (q == 0) throw DivisionByZero();
  mpq_class r(p, q);
  r.canonicalize();
  return ExactScalar(std::move(r));
}

ExactScalar ExactScalar::parse(std::string_view text) {
  const auto parts = split_complex(trim(text));
  mpq_class re = parts.re.empty() ? mpq_class(0) : parse_rational(parts.re);
  mpq_class im = parts.has_im ? parse_rational(unit_if_bare(parts.im)) : mpq_class(0);
  return ExactScalar(std::move(re), std::move(im));
}

double ExactScalar::magnitude() const {
  return std::hypot(re_.get_d(), im_.get_d());
}

std::string ExactScalar::to_string() const {
  return format_complex(
      re_, im_, sgn(im_) == 0, [](const mpq_class& q) { return sgn(q) < 0; },
      [](const mpq_class& q) { return q.get_str(10); });
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    return *this;
  }
  const mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
  mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar ExactScalar::operator-() const {
  return ExactScalar(mpq_class(-re_), mpq_class(-im_));
}

// ---------------------------------------------------------------------------
// FloatScalar

FloatScalar FloatScalar::parse(std::string_view text) {
  const auto parts = split_complex(trim(text));
  const double re = parts.re.empty() ? 0.0 : parse_double(parts.re);
  const double im = parts.has_im ? parse_double(unit_if_bare(parts.im)) : 0.0;
  return FloatScalar(re, im);
}

double FloatScalar::zero_tolerance() noexcept {
  return g_zero_tolerance.load(std::memory_order_relaxed);
}

void FloatScalar::set_zero_tolerance(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw PreconditionViolated("zero tolerance must be finite and nonnegative");
  }
  g_zero_tolerance.store(tol, std::memory_order_relaxed);
}

bool FloatScalar::is_zero() const noexcept {
  return std::abs(value_) <= zero_tolerance();
}

bool FloatScalar::is_zero(double scale) const noexcept {
  return std::abs(value_) <= zero_tolerance() * scale;
}

std::string FloatScalar::to_string() const {
  return format_complex(
      value_.real(), value_.imag(), value_.imag() == 0.0, [](double x) { return std::signbit(x); },
      format_double);
}

FloatScalar& FloatScalar::operator/=(const FloatScalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

}  // namespace mdk
