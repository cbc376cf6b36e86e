#include <gtest/gtest.h>

#include <random>

#include "mpoly/expansion.hpp"
#include "test_support.hpp"

using namespace mpoly;
using namespace mpoly::testing;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

GridFunction<ExactScalar> x0x1(int n) {
  const int e[] = {1, 1};
  return GridFunction<ExactScalar>::monomial(n, 2, e, ExactScalar(1));
}

GridFunction<ExactScalar> random_grid(std::mt19937& rng, int n, const Matrix<ExactScalar>& g) {
  std::uniform_int_distribution<int> dist(-9, 9);
  return GridFunction<ExactScalar>::tabulate(
      n, g.q(), [&](const Composition&) { return g.constant(dist(rng)); });
}

std::vector<ExactScalar> ints(std::initializer_list<long> v) {
  std::vector<ExactScalar> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(ExpandBeta, PrintedCoefficients) {
  const auto r = expand_beta(symmetric2(), x0x1(6));
  EXPECT_EQ(r.variant, ExpansionVariant::symmetric);
  EXPECT_EQ(r.coefficients, to_exact({"0", "0", "0", "0", "-1/2", "0", "15/2"}));
  EXPECT_TRUE(r.round_trip_ok);
}

TEST(ExpandAlpha, ReconstructsProduct) {
  const auto r = expand_alpha(symmetric2(), x0x1(6));
  EXPECT_TRUE(r.round_trip_ok);
  EXPECT_EQ(reconstruct(symmetric2(), r), x0x1(6));
  // independent oracle: solve sum_s alpha_s MG(x;s) = x0 x1 from the printed table
  std::vector<std::vector<mpq_class>> a(7, std::vector<mpq_class>(7));
  std::vector<mpq_class> b(7);
  for (int x = 0; x < 7; ++x) {
    for (int s = 0; s < 7; ++s) a[x][s] = kPrintedTable[x][s];
    b[x] = x * (6 - x);
  }
  const auto alpha = solve_rational(a, b);
  for (int s = 0; s < 7; ++s) EXPECT_EQ(r.coefficients[s], ExactScalar(alpha[s]));
}

TEST(Reconstruct, TwoTermClosedForm) {
  const auto t = mg_table(symmetric2(), 6);
  for (int k = 0; k <= 6; ++k) {
    const ExactScalar value = t(C({4, 2}), C({k, 6 - k})).scaled(mpq_class(-1, 2)) +
                              t(C({6, 0}), C({k, 6 - k})).scaled(mpq_class(15, 2));
    EXPECT_EQ(value, ExactScalar(k * (6 - k)));
  }
}

TEST(Expand, ZeroFunction) {
  for (const auto& g : {symmetric2(), core3()}) {
    const auto zero = GridFunction<ExactScalar>::tabulate(
        3, g.q(), [&](const Composition&) { return g.constant(0); });
    for (auto side : {ExpansionSide::alpha, ExpansionSide::beta}) {
      const auto r = expand(g, mg_table(g, 3), zero, side);
      for (const auto& c : r.coefficients) EXPECT_TRUE(c.is_zero());
      EXPECT_EQ(reconstruct(g, r), zero);
    }
  }
}

TEST(Expand, ConstantOneRoundTrips) {
  for (const auto& g : {symmetric2(), core2(), core3()}) {
    const auto one = GridFunction<ExactScalar>::tabulate(
        4, g.q(), [&](const Composition&) { return g.constant(1); });
    for (auto side : {ExpansionSide::alpha, ExpansionSide::beta}) {
      EXPECT_TRUE(expand(g, mg_table(g, 4), one, side).round_trip_ok);
    }
  }
}

TEST(Expand, RandomRoundTripBothVariants) {
  std::mt19937 rng(31337);
  struct Case {
    Matrix<ExactScalar> g;
    int max_n;
  };
  const std::vector<Case> cases{{symmetric2(), 6}, {core2(), 4}, {core3(), 4}, {dft3(), 3}};
  for (const auto& [g, max_n] : cases) {
    for (int n = 0; n <= max_n; ++n) {
      const auto table = mg_table(g, n);
      for (int trial = 0; trial < 3; ++trial) {
        const auto f = random_grid(rng, n, g);
        for (auto side : {ExpansionSide::alpha, ExpansionSide::beta}) {
          const auto r = expand(g, table, f, side);
          EXPECT_TRUE(r.round_trip_ok);
          EXPECT_EQ(reconstruct(table, r), f);
        }
      }
    }
  }
}

TEST(Expand, Linearity) {
  std::mt19937 rng(5);
  for (const auto& g : {symmetric2(), core3()}) {
    const auto table = mg_table(g, 3);
    const auto f = random_grid(rng, 3, g);
    const auto h = random_grid(rng, 3, g);
    const ExactScalar a = random_exact(rng, g(0, 0).context());
    const ExactScalar b = random_exact(rng, g(0, 0).context());
    std::vector<ExactScalar> mix;
    for (std::size_t i = 0; i < f.values().size(); ++i) mix.push_back(a * f.at(i) + b * h.at(i));
    const GridFunction<ExactScalar> combo(f.order(), mix);
    for (auto side : {ExpansionSide::alpha, ExpansionSide::beta}) {
      const auto rf = expand(g, table, f, side);
      const auto rh = expand(g, table, h, side);
      const auto rc = expand(g, table, combo, side);
      for (std::size_t i = 0; i < rc.coefficients.size(); ++i) {
        EXPECT_EQ(rc.coefficients[i], a * rf.coefficients[i] + b * rh.coefficients[i]);
      }
    }
  }
}

TEST(Expand, DeltaExpansion) {
  for (const auto& g : {symmetric2(), core2(), core3()}) {
    const auto table = mg_table(g, 3);
    for (std::size_t star = 0; star < table.size(); ++star) {
      std::vector<ExactScalar> column, row;
      for (std::size_t x = 0; x < table.size(); ++x) {
        column.push_back(table.at(x, star));
        row.push_back(table.at(star, x));
      }
      const auto alpha = expand(g, table, GridFunction<ExactScalar>(table.order(), column),
                                ExpansionSide::alpha);
      const auto beta = expand(g, table, GridFunction<ExactScalar>(table.order(), row),
                               ExpansionSide::beta);
      for (std::size_t l = 0; l < table.size(); ++l) {
        EXPECT_EQ(alpha.coefficients[l], g.constant(l == star ? 1 : 0));
        EXPECT_EQ(beta.coefficients[l], g.constant(l == star ? 1 : 0));
      }
    }
  }
}

TEST(Expand, VariantSelectionAndHypotheses) {
  EXPECT_EQ(expand_alpha(core3(), GridFunction<ExactScalar>::tabulate(
                                      2, 3, [](const Composition&) { return ExactScalar(1, sqrt3()); }))
                .variant,
            ExpansionVariant::core);
  const auto ones = GridFunction<ExactScalar>::tabulate(
      2, 2, [](const Composition&) { return ExactScalar(1); });
  EXPECT_THROW(expand_alpha(all_ones(2), ones), HypothesisError);
  EXPECT_THROW(expand_alpha(symmetric2(), ones, ExpansionVariant::core), HypothesisError);
  const auto forced =
      expand_alpha(all_ones(2), ones, std::nullopt, HypothesisPolicy::force);
  EXPECT_FALSE(forced.hypothesis_holds);
  EXPECT_THROW(expand(symmetric2(), mg_table(symmetric2(), 3), ones, ExpansionSide::alpha),
               DomainError);
}

TEST(GridFunction, FromPairsValidation) {
  using Pairs = std::vector<std::pair<Composition, ExactScalar>>;
  EXPECT_NO_THROW(GridFunction<ExactScalar>::from_pairs(
      1, 2, Pairs{{C({1, 0}), ExactScalar(1)}, {C({0, 1}), ExactScalar(2)}}));
  EXPECT_THROW(GridFunction<ExactScalar>::from_pairs(1, 2, Pairs{{C({1, 0}), ExactScalar(1)}}),
               DomainError);
  EXPECT_THROW(GridFunction<ExactScalar>::from_pairs(
                   1, 2, Pairs{{C({1, 0}), ExactScalar(1)}, {C({1, 0}), ExactScalar(2)}}),
               DomainError);
  EXPECT_THROW(GridFunction<ExactScalar>::from_pairs(
                   1, 2, Pairs{{C({1, 0}), ExactScalar(1)}, {C({0, 2}), ExactScalar(2)}}),
               DomainError);
}

TEST(FitUnivariate, PrintedFits) {
  for (int k = 0; k <= 6; ++k) {
    const auto in_s = fit_univariate(symmetric2(), 6, C({k, 6 - k}), FitSide::vary_s);
    EXPECT_EQ(in_s.coefficients, to_exact(printed_fits_in_s()[k])) << "p=" << k;
    const auto in_p = fit_univariate(symmetric2(), 6, C({k, 6 - k}), FitSide::vary_p);
    EXPECT_EQ(in_p.coefficients, to_exact(printed_fits_in_p()[k])) << "s=" << k;
  }
  EXPECT_EQ(fit_univariate(symmetric2(), 6, C({3, 3}), FitSide::vary_s).coefficients,
            to_exact({"0", "-8/3", "0", "1/6"}));
  EXPECT_EQ(fit_univariate(symmetric2(), 6, C({6, 0}), FitSide::vary_s).coefficients, ints({1}));
}

TEST(FitUnivariate, MatchesVandermondeAndReproducesNodes) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_int_matrix(rng, 2);
    for (int n = 0; n <= 5; ++n) {
      const auto t = mg_table(g, n);
      std::vector<long> nodes;
      for (int k = 0; k <= n; ++k) nodes.push_back(2 * k - n);
      for (std::size_t f = 0; f < t.size(); ++f) {
        for (auto side : {FitSide::vary_s, FitSide::vary_p}) {
          std::vector<mpq_class> values;
          for (std::size_t k = 0; k < t.size(); ++k) {
            const auto& v = side == FitSide::vary_s ? t.at(f, k) : t.at(k, f);
            values.push_back(v.rational_part());
          }
          const auto fit = fit_univariate(g, n, t.order()[f], side);
          std::vector<ExactScalar> oracle;
          for (const auto& c : vandermonde_fit(nodes, values)) oracle.emplace_back(c);
          EXPECT_EQ(fit.coefficients, oracle);
          for (std::size_t k = 0; k < t.size(); ++k) {
            EXPECT_EQ(fit(mpq_class(nodes[k])), ExactScalar(values[k]));
          }
        }
      }
    }
  }
}

TEST(FitUnivariate, Errors) {
  EXPECT_THROW(fit_univariate(core3(), 2, C({1, 1, 0}), FitSide::vary_s), DomainError);
  EXPECT_THROW(fit_univariate(symmetric2(), 6, C({1, 1}), FitSide::vary_s), DomainError);
  EXPECT_EQ(parse_fit_side("p"), FitSide::vary_p);
  EXPECT_THROW(parse_fit_side("x"), DomainError);
}
