#pragma once

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "mpoly/error.hpp"

namespace mpoly {

/// The squarefree integer d adjoined as sqrt(d), or none() for plain Q.
/// Negative d makes sqrt(d) imaginary, so d = -1 and d = -3 give exact
/// Gaussian and Eisenstein arithmetic.
class Radicand {
 public:
  constexpr Radicand() = default;

  static constexpr Radicand none() { return Radicand{}; }
  /// Throws DomainError unless d is squarefree and d not in {0, 1}.
  static Radicand of(std::int64_t d);

  constexpr bool is_none() const { return d_ == 0; }
  constexpr std::int64_t value() const { return d_; }

  constexpr bool operator==(const Radicand&) const = default;

 private:
  constexpr explicit Radicand(std::int64_t d) : d_(d) {}
  std::int64_t d_ = 0;
};

bool is_squarefree(std::int64_t d);

/// a + b*sqrt(d) with rational a, b. Canonical: GMP keeps rationals in
/// lowest terms with positive denominator, so equality is coefficientwise.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value, Radicand ctx = Radicand::none()) : a_(value), ctx_(ctx) {}  // NOLINT
  ExactScalar(mpq_class a, Radicand ctx = Radicand::none());
  ExactScalar(mpq_class a, mpq_class b, Radicand ctx);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  Radicand context() const { return ctx_; }

  /// A rational constant in this scalar's context.
  ExactScalar like(const mpq_class& value) const { return ExactScalar(value, ctx_); }
  ExactScalar scaled(const mpq_class& factor) const;

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_real() const { return ctx_.value() > 0 || is_rational(); }

  ExactScalar conj() const;
  /// x * conj(x) for d < 0, x * galois(x) otherwise; always rational.
  mpq_class norm() const;
  ExactScalar inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& y);
  ExactScalar& operator-=(const ExactScalar& y);
  ExactScalar& operator*=(const ExactScalar& y);
  ExactScalar& operator/=(const ExactScalar& y);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

 private:
  void require_same_context(const ExactScalar& y) const;

  mpq_class a_{0};
  mpq_class b_{0};
  Radicand ctx_{};
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Double-precision complex number with an absolute comparison tolerance.
/// Equality is |re diff| <= tol and |im diff| <= tol, using the larger tol.
class ApproxScalar {
 public:
  ApproxScalar() = default;
  ApproxScalar(double re, double im = 0.0, double tol = kDefaultTolerance);  // NOLINT
  ApproxScalar(std::complex<double> value, double tol = kDefaultTolerance);  // NOLINT

  double real() const { return value_.real(); }
  double imag() const { return value_.imag(); }
  double tolerance() const { return tol_; }
  std::complex<double> to_complex() const { return value_; }

  ApproxScalar like(const mpq_class& value) const { return {value.get_d(), 0.0, tol_}; }
  ApproxScalar scaled(const mpq_class& factor) const { return {value_ * factor.get_d(), tol_}; }
  ApproxScalar with_tolerance(double tol) const { return {value_, tol}; }

  /// Exact zero test (both components are 0.0); use == for tolerance comparison.
  bool is_zero() const { return value_ == std::complex<double>{}; }
  bool is_real() const { return value_.imag() == 0.0; }

  ApproxScalar conj() const { return {std::conj(value_), tol_}; }
  ApproxScalar inverse() const;

  /// Shortest round-trip form: "re" or "re,im".
  std::string to_string() const;

  ApproxScalar& operator+=(const ApproxScalar& y);
  ApproxScalar& operator-=(const ApproxScalar& y);
  ApproxScalar& operator*=(const ApproxScalar& y);
  ApproxScalar& operator/=(const ApproxScalar& y);

  friend ApproxScalar operator+(ApproxScalar x, const ApproxScalar& y) { return x += y; }
  friend ApproxScalar operator-(ApproxScalar x, const ApproxScalar& y) { return x -= y; }
  friend ApproxScalar operator*(ApproxScalar x, const ApproxScalar& y) { return x *= y; }
  friend ApproxScalar operator/(ApproxScalar x, const ApproxScalar& y) { return x /= y; }
  ApproxScalar operator-() const { return {-value_, tol_}; }

  friend bool operator==(const ApproxScalar& x, const ApproxScalar& y);

 private:
  std::complex<double> value_{};
  double tol_ = kDefaultTolerance;
};

/// The interface every algorithm module relies on.
template <class S>
concept Scalar = std::regular<S> && requires(const S x, const S y, const mpq_class& r) {
  { x + y } -> std::same_as<S>;
  { x - y } -> std::same_as<S>;
  { x * y } -> std::same_as<S>;
  { -x } -> std::same_as<S>;
  { x.conj() } -> std::same_as<S>;
  { x.like(r) } -> std::same_as<S>;
  { x.scaled(r) } -> std::same_as<S>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.to_complex() } -> std::same_as<std::complex<double>>;
  { x.to_string() } -> std::same_as<std::string>;
};

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, ExactScalar>;

inline bool same_context(const ExactScalar& x, const ExactScalar& y) {
  return x.context() == y.context();
}
inline bool same_context(const ApproxScalar&, const ApproxScalar&) { return true; }

/// x^k with 0^0 = 1.
template <Scalar S>
S pow_nonneg(const S& x, unsigned k) {
  S result = x.like(1);
  S base = x;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

template <Scalar S>
S conj(const S& x) {
  return x.conj();
}

/// |x - y| as a complex modulus.
template <Scalar S>
double abs_deviation(const S& x, const S& y) {
  return std::abs(x.to_complex() - y.to_complex());
}

/// Exact literal grammar, with 'r' standing for sqrt(d):
///   rat    := ['-'] digits ['/' digits]
///   term   := rat | rat '*' 'r' | 'r' | '-' 'r'
///   scalar := term [('+'|'-') (rat '*' 'r' | 'r')]
/// Whitespace is ignored. Throws ParseError.
ExactScalar parse_scalar(std::string_view text, Radicand ctx = Radicand::none());

/// Approximate literal: float [',' float] meaning re[,im].
ApproxScalar parse_approx_scalar(std::string_view text, double tol = kDefaultTolerance);

}  // namespace mpoly
