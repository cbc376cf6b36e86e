#include "mpoly/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace mpoly {

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  // |INT64_MIN| is divisible by 4.
  if (d == INT64_MIN) return false;
  std::uint64_t m = static_cast<std::uint64_t>(d < 0 ? -d : d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

Radicand Radicand::of(std::int64_t d) {
  if (d == 0 || d == 1) {
    throw DomainError("radicand must not be 0 or 1, got " + std::to_string(d));
  }
  if (!is_squarefree(d)) {
    throw DomainError("radicand " + std::to_string(d) + " is not squarefree");
  }
  return Radicand{d};
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(mpq_class a, Radicand ctx) : a_(std::move(a)), ctx_(ctx) {
  a_.canonicalize();
}

ExactScalar::ExactScalar(mpq_class a, mpq_class b, Radicand ctx)
    : a_(std::move(a)), b_(std::move(b)), ctx_(ctx) {
  a_.canonicalize();
  b_.canonicalize();
  if (ctx_.is_none() && sgn(b_) != 0) {
    throw ContextMismatch("nonzero sqrt coefficient in a scalar without radicand");
  }
}

void ExactScalar::require_same_context(const ExactScalar& y) const {
  if (!(ctx_ == y.ctx_)) {
    throw ContextMismatch("scalars over sqrt(" + std::to_string(ctx_.value()) + ") and sqrt(" +
                          std::to_string(y.ctx_.value()) + ") cannot be combined");
  }
}

ExactScalar ExactScalar::scaled(const mpq_class& factor) const {
  ExactScalar r = *this;
  r.a_ *= factor;
  r.b_ *= factor;
  return r;
}

ExactScalar ExactScalar::conj() const {
  if (ctx_.value() >= 0) return *this;
  ExactScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

mpq_class ExactScalar::norm() const {
  mpq_class n = a_ * a_ - b_ * b_ * mpq_class(mpz_class(static_cast<long>(ctx_.value())));
  return n;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  // (a + b r)^-1 = (a - b r) / (a^2 - b^2 d); the norm is nonzero because d is not a square.
  const mpq_class n = norm();
  ExactScalar r = *this;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  return r;
}

std::complex<double> ExactScalar::to_complex() const {
  const double d = static_cast<double>(ctx_.value());
  const double a = a_.get_d();
  const double b = b_.get_d();
  if (d >= 0) return {a + b * std::sqrt(d), 0.0};
  return {a, b * std::sqrt(-d)};
}

std::string ExactScalar::to_string() const {
  const bool has_a = sgn(a_) != 0;
  const int sb = sgn(b_);
  if (sb == 0) return a_.get_str();

  std::string out = has_a ? a_.get_str() : std::string{};
  const mpq_class mag = abs(b_);
  const std::string radical = mag == 1 ? std::string{"r"} : mag.get_str() + "*r";
  if (sb < 0) {
    out += "-";
  } else if (has_a) {
    out += "+";
  }
  return out + radical;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& y) {
  require_same_context(y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& y) {
  require_same_context(y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& y) {
  require_same_context(y);
  if (sgn(b_) == 0 && sgn(y.b_) == 0) {
    a_ *= y.a_;
    return *this;
  }
  const mpq_class d(mpz_class(static_cast<long>(ctx_.value())));
  mpq_class a = a_ * y.a_ + b_ * y.b_ * d;
  mpq_class b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& y) {
  require_same_context(y);
  return *this *= y.inverse();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  x.require_same_context(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

// ---------------------------------------------------------------------------
// ApproxScalar

ApproxScalar::ApproxScalar(double re, double im, double tol) : value_(re, im), tol_(tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be nonnegative");
}

ApproxScalar::ApproxScalar(std::complex<double> value, double tol) : value_(value), tol_(tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be nonnegative");
}

ApproxScalar ApproxScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return {1.0 / value_, tol_};
}

namespace {

std::string shortest(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), end};
}

}  // namespace

std::string ApproxScalar::to_string() const {
  if (value_.imag() == 0.0) return shortest(value_.real());
  return shortest(value_.real()) + "," + shortest(value_.imag());
}

ApproxScalar& ApproxScalar::operator+=(const ApproxScalar& y) {
  value_ += y.value_;
  tol_ = std::max(tol_, y.tol_);
  return *this;
}

ApproxScalar& ApproxScalar::operator-=(const ApproxScalar& y) {
  value_ -= y.value_;
  tol_ = std::max(tol_, y.tol_);
  return *this;
}

ApproxScalar& ApproxScalar::operator*=(const ApproxScalar& y) {
  value_ *= y.value_;
  tol_ = std::max(tol_, y.tol_);
  return *this;
}

ApproxScalar& ApproxScalar::operator/=(const ApproxScalar& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  value_ /= y.value_;
  tol_ = std::max(tol_, y.tol_);
  return *this;
}

bool operator==(const ApproxScalar& x, const ApproxScalar& y) {
  const double tol = std::max(x.tol_, y.tol_);
  return std::abs(x.value_.real() - y.value_.real()) <= tol &&
         std::abs(x.value_.imag() - y.value_.imag()) <= tol;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, Radicand ctx) : text_(text), ctx_(ctx) {}

  ExactScalar parse() {
    mpq_class a(0);
    mpq_class b(0);
    std::size_t radical_at = std::string_view::npos;

    skip_ws();
    if (at_end()) fail("empty literal");

    // term
    if (peek() == 'r') {
      radical_at = pos_;
      ++pos_;
      b = 1;
    } else if (peek() == '-' && next_non_ws_is('r')) {
      ++pos_;
      skip_ws();
      radical_at = pos_;
      ++pos_;
      b = -1;
    } else {
      mpq_class value = rat();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        radical_at = pos_;
        expect('r');
        b = value;
      } else {
        a = value;
      }
    }

    // optional radical tail
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const int sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      if (at_end()) fail("expected 'r' or a rational after sign");
      mpq_class coeff(1);
      if (peek() == 'r') {
        if (radical_at == std::string_view::npos) radical_at = pos_;
        ++pos_;
      } else {
        coeff = rat();
        skip_ws();
        expect('*');
        skip_ws();
        if (radical_at == std::string_view::npos) radical_at = pos_;
        expect('r');
      }
      b += sign * coeff;
    }

    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");

    if (ctx_.is_none() && radical_at != std::string_view::npos && sgn(b) != 0) {
      throw ParseError("sqrt term 'r' used without a radicand", radical_at);
    }
    if (ctx_.is_none()) return ExactScalar(a, ctx_);
    return ExactScalar(a, b, ctx_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool next_non_ws_is(char c) const {
    std::size_t i = pos_ + 1;
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i < text_.size() && text_[i] == c;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  mpq_class rat() {
    skip_ws();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class num = digits();
    mpz_class den(1);
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_at = pos_;
      den = digits();
      if (den == 0) throw ParseError("zero denominator", den_at);
    }
    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  Radicand ctx_;
  std::size_t pos_ = 0;
};

double parse_double(std::string_view text, std::size_t offset) {
  std::size_t lo = 0;
  std::size_t hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  if (lo == hi) throw ParseError("expected a number", offset + lo);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
  if (ec != std::errc{} || ptr != text.data() + hi) {
    throw ParseError("malformed number", offset + static_cast<std::size_t>(ptr - text.data()));
  }
  if (!std::isfinite(value)) throw ParseError("non-finite number", offset + lo);
  return value;
}

}  // namespace

ExactScalar parse_scalar(std::string_view text, Radicand ctx) {
  return LiteralParser(text, ctx).parse();
}

ApproxScalar parse_approx_scalar(std::string_view text, double tol) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text, 0), 0.0, tol};
  if (text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("too many components", text.find(',', comma + 1));
  }
  return {parse_double(text.substr(0, comma), 0), parse_double(text.substr(comma + 1), comma + 1),
          tol};
}

}  // namespace mpoly
