#include <gtest/gtest.h>

#include <random>

#include "mpoly/scalar.hpp"
#include "test_support.hpp"

using namespace mpoly;
using mpoly::testing::random_exact;

namespace {

const Radicand kSqrt3 = Radicand::of(3);
const Radicand kSqrtM3 = Radicand::of(-3);

ExactScalar lit(const char* text, Radicand ctx = Radicand::none()) {
  return parse_scalar(text, ctx);
}

}  // namespace

TEST(Radicand, RejectsNonSquarefreeAndTrivial) {
  EXPECT_THROW(Radicand::of(0), DomainError);
  EXPECT_THROW(Radicand::of(1), DomainError);
  EXPECT_THROW(Radicand::of(12), DomainError);
  EXPECT_THROW(Radicand::of(-8), DomainError);
  EXPECT_NO_THROW(Radicand::of(-1));
  EXPECT_NO_THROW(Radicand::of(30));
  EXPECT_TRUE(Radicand::none().is_none());
}

TEST(ExactScalar, Add) {
  EXPECT_EQ(lit("1/2", kSqrt3) + lit("1/2+r", kSqrt3), lit("1+r", kSqrt3));
  EXPECT_EQ(lit("3/7+2*r", kSqrt3) + lit("0", kSqrt3), lit("3/7+2*r", kSqrt3));
  EXPECT_EQ(lit("1/2-1/2*r", kSqrt3) + lit("1/2+1/2*r", kSqrt3), lit("1", kSqrt3));
}

TEST(ExactScalar, Mul) {
  EXPECT_EQ(lit("r", kSqrt3) * lit("r", kSqrt3), lit("3", kSqrt3));
  EXPECT_EQ(lit("1/2-1/2*r", kSqrt3) * lit("1/2+1/2*r", kSqrt3), lit("-1/2", kSqrt3));
  EXPECT_EQ(lit("r", kSqrtM3) * lit("r", kSqrtM3), lit("-3", kSqrtM3));
}

TEST(ExactScalar, ContextMismatch) {
  EXPECT_THROW(lit("r", kSqrt3) + lit("r", kSqrtM3), ContextMismatch);
  EXPECT_THROW(lit("1", kSqrt3) * lit("1"), ContextMismatch);
  EXPECT_THROW(ExactScalar(mpq_class(1), mpq_class(1), Radicand::none()), ContextMismatch);
}

TEST(ExactScalar, Conj) {
  EXPECT_EQ(lit("-1/2+1/2*r", kSqrtM3).conj(), lit("-1/2-1/2*r", kSqrtM3));
  EXPECT_EQ(lit("5/7").conj(), lit("5/7"));
  EXPECT_EQ(lit("1+r", kSqrt3).conj(), lit("1+r", kSqrt3));
}

TEST(ExactScalar, PowNonneg) {
  EXPECT_EQ(pow_nonneg(ExactScalar(0), 0), ExactScalar(1));
  EXPECT_EQ(pow_nonneg(ExactScalar(0), 3), ExactScalar(0));
  EXPECT_EQ(pow_nonneg(ExactScalar(-1), 5), ExactScalar(-1));
  // ((1+sqrt3)/2)^2 = (4+2 sqrt3)/4
  EXPECT_EQ(pow_nonneg(lit("1/2+1/2*r", kSqrt3), 2), lit("1+1/2*r", kSqrt3));
}

TEST(ExactScalar, InverseAndDivision) {
  const ExactScalar x = lit("2-r", kSqrt3);
  EXPECT_EQ(x * x.inverse(), lit("1", kSqrt3));
  EXPECT_EQ(x.inverse(), lit("2+r", kSqrt3));  // norm 4 - 3 = 1
  EXPECT_THROW(ExactScalar(0).inverse(), DomainError);
}

TEST(ExactScalar, ToComplex) {
  const auto w = lit("-1/2+1/2*r", kSqrtM3).to_complex();
  EXPECT_NEAR(w.real(), -0.5, 1e-15);
  EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(ParseScalar, Examples) {
  const ExactScalar x = parse_scalar("1/2-1/2*r", kSqrt3);
  EXPECT_EQ(x.rational_part(), mpq_class(1, 2));
  EXPECT_EQ(x.radical_part(), mpq_class(-1, 2));
  EXPECT_EQ(parse_scalar("-1"), ExactScalar(-1));
  EXPECT_EQ(parse_scalar("3/6").rational_part().get_den(), 2);
  EXPECT_EQ(parse_scalar(" - r ", kSqrt3), lit("-1*r", kSqrt3));
  EXPECT_EQ(parse_scalar("-2/3 * r", kSqrt3).radical_part(), mpq_class(-2, 3));
  EXPECT_EQ(parse_scalar("4 - r", kSqrt3), lit("4-1*r", kSqrt3));
  EXPECT_EQ(parse_scalar("1+-2*r", kSqrt3), lit("1-2*r", kSqrt3));
}

TEST(ParseScalar, Errors) {
  EXPECT_THROW(parse_scalar(""), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("1+2"), ParseError);
  EXPECT_THROW(parse_scalar("r+1", kSqrt3), ParseError);
  EXPECT_THROW(parse_scalar("1.5"), ParseError);
  EXPECT_THROW(parse_scalar("2*x", kSqrt3), ParseError);
  try {
    parse_scalar("1+r");
    FAIL() << "sqrt term accepted without a radicand";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_scalar("12#");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ParseScalar, CanonicalPrinting) {
  EXPECT_EQ(lit("1/2-1/2*r", kSqrt3).to_string(), "1/2-1/2*r");
  EXPECT_EQ(lit("0+r", kSqrt3).to_string(), "r");
  EXPECT_EQ(lit("-r", kSqrt3).to_string(), "-r");
  EXPECT_EQ(lit("-6/4*r", kSqrt3).to_string(), "-3/2*r");
  EXPECT_EQ(lit("-7").to_string(), "-7");
  EXPECT_EQ(lit("0").to_string(), "0");
}

TEST(ExactScalarProperty, FieldAxiomsAndConjugation) {
  std::mt19937 rng(20261015);
  for (Radicand ctx : {Radicand::none(), kSqrt3, kSqrtM3, Radicand::of(-1), Radicand::of(5)}) {
    const ExactScalar zero = ExactScalar(0, ctx);
    const ExactScalar one = ExactScalar(1, ctx);
    for (int trial = 0; trial < 200; ++trial) {
      const ExactScalar x = random_exact(rng, ctx);
      const ExactScalar y = random_exact(rng, ctx);
      const ExactScalar z = random_exact(rng, ctx);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + (-x), zero);
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), one);
      EXPECT_EQ(x.conj().conj(), x);
      EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
      EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
      if (ctx.value() < 0) EXPECT_TRUE((x * x.conj()).is_rational());
      EXPECT_EQ(parse_scalar(x.to_string(), ctx), x);
    }
  }
}

TEST(ApproxScalar, ToleranceEquality) {
  EXPECT_EQ(ApproxScalar(1.0), ApproxScalar(1.0 + 1e-12));
  EXPECT_FALSE(ApproxScalar(1.0) == ApproxScalar(1.0 + 1e-6));
  EXPECT_EQ(ApproxScalar(1.0, 0.0, 1e-3), ApproxScalar(1.0005));
  EXPECT_EQ(ApproxScalar(0.0, 2.0).conj(), ApproxScalar(0.0, -2.0));
  EXPECT_EQ(pow_nonneg(ApproxScalar(0.0), 0), ApproxScalar(1.0));
  EXPECT_THROW(ApproxScalar(1.0, 0.0, -1.0), DomainError);
}

TEST(ApproxScalar, ParseAndPrintRoundTrip) {
  EXPECT_EQ(parse_approx_scalar("0.5, -2").imag(), -2.0);
  EXPECT_EQ(parse_approx_scalar("3").real(), 3.0);
  EXPECT_THROW(parse_approx_scalar("1,2,3"), ParseError);
  EXPECT_THROW(parse_approx_scalar("abc"), ParseError);
  EXPECT_THROW(parse_approx_scalar("inf"), ParseError);
  const ApproxScalar x(std::polar(1.0, 0.4));
  const ApproxScalar y = parse_approx_scalar(x.to_string());
  EXPECT_EQ(y.real(), x.real());
  EXPECT_EQ(y.imag(), x.imag());
}
