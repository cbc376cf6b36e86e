#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mpoly/mpoly.hpp"
#include "mpoly/orthogonality.hpp"

namespace mpoly {

/// A function gamma on V(n,q), stored in canonical order.
template <Scalar S>
class GridFunction {
 public:
  GridFunction(CanonicalOrder order, std::vector<S> values)
      : order_(std::move(order)), values_(std::move(values)) {
    if (values_.size() != order_.size()) {
      throw DomainError("grid function has " + std::to_string(values_.size()) +
                        " values for " + std::to_string(order_.size()) + " grid points");
    }
  }

  /// Values must cover V(n,q) exactly once each; DomainError names the first
  /// missing, duplicate or foreign point.
  static GridFunction from_pairs(int n, std::size_t q,
                                 const std::vector<std::pair<Composition, S>>& pairs) {
    CanonicalOrder order(n, q);
    std::vector<std::optional<S>> slots(order.size());
    for (const auto& [x, value] : pairs) {
      auto i = order.find(x);
      if (!i) {
        throw DomainError("grid point " + x.to_string() + " is not in V(" + std::to_string(n) +
                          "," + std::to_string(q) + ")");
      }
      if (slots[*i]) throw DomainError("grid point " + x.to_string() + " given twice");
      slots[*i] = value;
    }
    std::vector<S> values;
    values.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!slots[i]) throw DomainError("incomplete grid function: missing " + order[i].to_string());
      values.push_back(*slots[i]);
    }
    return GridFunction(std::move(order), std::move(values));
  }

  template <class F>
  static GridFunction tabulate(int n, std::size_t q, F&& fn) {
    CanonicalOrder order(n, q);
    std::vector<S> values;
    values.reserve(order.size());
    for (const Composition& x : order) values.push_back(fn(x));
    return GridFunction(std::move(order), std::move(values));
  }

  /// gamma(x) = prod_j x_j^{e_j} with 0^0 = 1.
  static GridFunction monomial(int n, std::size_t q, std::span<const int> exponents,
                               const S& like) {
    if (exponents.size() != q) {
      throw DomainError("monomial needs " + std::to_string(q) + " exponents, got " +
                        std::to_string(exponents.size()));
    }
    for (int e : exponents) {
      if (e < 0) throw DomainError("monomial exponents must be nonnegative");
    }
    return tabulate(n, q, [&](const Composition& x) {
      S value = like.like(1);
      for (std::size_t j = 0; j < q; ++j) {
        value = value * pow_nonneg(like.like(x[j]), static_cast<unsigned>(exponents[j]));
      }
      return value;
    });
  }

  int n() const { return order_.n(); }
  std::size_t q() const { return order_.q(); }
  const CanonicalOrder& order() const { return order_; }
  const std::vector<S>& values() const { return values_; }
  const S& at(std::size_t i) const { return values_[i]; }
  const S& operator()(const Composition& x) const { return values_[order_.index_of(x)]; }

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    return a.order_.items() == b.order_.items() && a.values_ == b.values_;
  }

 private:
  CanonicalOrder order_;
  std::vector<S> values_;
};

/// alpha: gamma(x) = sum_s alpha_s MG(x;s).  beta: gamma(x) = sum_s beta_s MG(s;x).
enum class ExpansionSide { alpha, beta };
enum class ExpansionVariant { symmetric, core };

std::string_view to_string(ExpansionSide side);
std::string_view to_string(ExpansionVariant variant);
ExpansionSide parse_expansion_side(std::string_view name);
ExpansionVariant parse_expansion_variant(std::string_view name);

template <Scalar S>
struct ExpansionResult {
  ExpansionSide side;
  ExpansionVariant variant;
  CanonicalOrder order;
  std::vector<S> coefficients;
  /// reconstruct() reproduced the input exactly (within tolerance in approximate mode).
  bool round_trip_ok = false;
  bool hypothesis_holds = true;
};

/// Coefficients for G Hadamard and symmetric:
///   alpha_l = q^-n sum_i gamma(i) conj MG(l;i),   beta_l = q^-n sum_i gamma(i) conj MG(i;l)
/// and for the symmetric-core pattern with the extra signs (-1)^{l_0} (-1)^{i_0}.
/// Without an explicit variant the symmetric one is used if G is symmetric,
/// otherwise the core one if G has the pattern.
template <Scalar S>
ExpansionResult<S> expand(const Matrix<S>& g, const MTable<S>& table, const GridFunction<S>& f,
                          ExpansionSide side, std::optional<ExpansionVariant> variant = {},
                          HypothesisPolicy policy = HypothesisPolicy::enforce);

template <Scalar S>
ExpansionResult<S> expand_alpha(const Matrix<S>& g, const GridFunction<S>& f,
                                std::optional<ExpansionVariant> variant = {},
                                HypothesisPolicy policy = HypothesisPolicy::enforce) {
  return expand(g, mg_table(g, f.n()), f, ExpansionSide::alpha, variant, policy);
}

template <Scalar S>
ExpansionResult<S> expand_beta(const Matrix<S>& g, const GridFunction<S>& f,
                               std::optional<ExpansionVariant> variant = {},
                               HypothesisPolicy policy = HypothesisPolicy::enforce) {
  return expand(g, mg_table(g, f.n()), f, ExpansionSide::beta, variant, policy);
}

/// Evaluates the expansion at every grid point.
template <Scalar S>
GridFunction<S> reconstruct(const MTable<S>& table, const ExpansionResult<S>& coeffs);

template <Scalar S>
GridFunction<S> reconstruct(const Matrix<S>& g, const ExpansionResult<S>& coeffs) {
  return reconstruct(mg_table(g, coeffs.order.n()), coeffs);
}

/// Which argument of MG varies; the other one is held fixed.
enum class FitSide { vary_s, vary_p };

std::string_view to_string(FitSide side);
/// "s" -> vary_s, "p" -> vary_p.
FitSide parse_fit_side(std::string_view name);

template <Scalar S>
struct UnivariateFit {
  FitSide side;
  Composition fixed;
  /// Coefficients of u = x_0 - x_1, lowest degree first, trailing zeros trimmed.
  std::vector<S> coefficients;

  S operator()(const mpq_class& u) const {
    S value = coefficients.front().like(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
      value = value.scaled(u) + *it;
    }
    return value;
  }
};

/// q = 2 only: the polynomial of degree <= n in u = x_0 - x_1 through the n+1
/// grid values of MG(fixed; x) (vary_s) or MG(x; fixed) (vary_p). Solved exactly
/// with Newton divided differences.
template <Scalar S>
UnivariateFit<S> fit_univariate(const Matrix<S>& g, int n, const Composition& fixed, FitSide side);

#define MPOLY_DECLARE_EXPANSION(S)                                                            \
  extern template ExpansionResult<S> expand(const Matrix<S>&, const MTable<S>&,               \
                                            const GridFunction<S>&, ExpansionSide,            \
                                            std::optional<ExpansionVariant>, HypothesisPolicy); \
  extern template GridFunction<S> reconstruct(const MTable<S>&, const ExpansionResult<S>&);   \
  extern template UnivariateFit<S> fit_univariate(const Matrix<S>&, int, const Composition&,  \
                                                  FitSide);

MPOLY_DECLARE_EXPANSION(ExactScalar)
MPOLY_DECLARE_EXPANSION(ApproxScalar)
#undef MPOLY_DECLARE_EXPANSION

}  // namespace mpoly
