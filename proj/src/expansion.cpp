#include "mpoly/expansion.hpp"

#include <string>

#include "mpoly/structure.hpp"

namespace mpoly {

std::string_view to_string(ExpansionSide side) {
  return side == ExpansionSide::alpha ? "alpha" : "beta";
}

std::string_view to_string(ExpansionVariant variant) {
  return variant == ExpansionVariant::symmetric ? "symmetric" : "core";
}

ExpansionSide parse_expansion_side(std::string_view name) {
  if (name == "alpha") return ExpansionSide::alpha;
  if (name == "beta") return ExpansionSide::beta;
  throw DomainError("unknown expansion side '" + std::string(name) + "' (expected alpha or beta)");
}

ExpansionVariant parse_expansion_variant(std::string_view name) {
  if (name == "symmetric") return ExpansionVariant::symmetric;
  if (name == "core") return ExpansionVariant::core;
  throw DomainError("unknown expansion variant '" + std::string(name) +
                    "' (expected symmetric or core)");
}

std::string_view to_string(FitSide side) { return side == FitSide::vary_s ? "s" : "p"; }

FitSide parse_fit_side(std::string_view name) {
  if (name == "s") return FitSide::vary_s;
  if (name == "p") return FitSide::vary_p;
  throw DomainError("unknown fit side '" + std::string(name) + "' (expected s or p)");
}

namespace {

struct ResolvedVariant {
  ExpansionVariant variant;
  bool hypothesis_holds;
};

template <Scalar S>
ResolvedVariant resolve_variant(const Matrix<S>& g, std::optional<ExpansionVariant> requested,
                                HypothesisPolicy policy) {
  const bool hadamard = check_hadamard(g).is_hadamard.value_or(false);
  const bool symmetric = check_symmetric(g);
  const bool core = check_core_pattern(g);

  ExpansionVariant variant;
  if (requested) {
    variant = *requested;
  } else if (symmetric || !core) {
    variant = ExpansionVariant::symmetric;
  } else {
    variant = ExpansionVariant::core;
  }

  const bool shape_ok = variant == ExpansionVariant::symmetric ? symmetric : core;
  const bool holds = hadamard && shape_ok;
  if (!holds && policy == HypothesisPolicy::enforce) {
    std::string why;
    if (!hadamard) why = "matrix is not a generalized Hadamard matrix";
    else if (requested) why = "matrix does not satisfy the " + std::string(to_string(variant)) + " hypothesis";
    else why = "matrix is neither symmetric nor of the symmetric-core pattern";
    throw HypothesisError("expansion: " + why);
  }
  return {variant, holds};
}

}  // namespace

template <Scalar S>
ExpansionResult<S> expand(const Matrix<S>& g, const MTable<S>& table, const GridFunction<S>& f,
                          ExpansionSide side, std::optional<ExpansionVariant> variant,
                          HypothesisPolicy policy) {
  if (table.matrix_fingerprint() != fingerprint(g)) {
    throw DomainError("MG table was not built from this matrix");
  }
  if (f.q() != g.q() || f.n() != table.n()) {
    throw DomainError("grid function lives on V(" + std::to_string(f.n()) + "," +
                      std::to_string(f.q()) + "), table on V(" + std::to_string(table.n()) + "," +
                      std::to_string(table.q()) + ")");
  }
  const ResolvedVariant resolved = resolve_variant(g, variant, policy);
  const CanonicalOrder& order = table.order();
  const bool signed_core = resolved.variant == ExpansionVariant::core;
  auto odd = [&](std::size_t i) { return signed_core && order[i][0] % 2 != 0; };

  mpz_class q_pow;
  mpz_ui_pow_ui(q_pow.get_mpz_t(), g.q(), static_cast<unsigned long>(table.n()));
  const mpq_class inv_q_pow(1, q_pow);

  ExpansionResult<S> result{side, resolved.variant, order, {}, false, resolved.hypothesis_holds};
  result.coefficients.reserve(order.size());
  for (std::size_t l = 0; l < order.size(); ++l) {
    S sum = g.constant(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const S& mg = side == ExpansionSide::alpha ? table.at(l, i) : table.at(i, l);
      const S term = f.at(i) * mg.conj();
      sum = odd(i) ? sum - term : sum + term;
    }
    // q^-n applied last
    sum = sum.scaled(inv_q_pow);
    result.coefficients.push_back(odd(l) ? -sum : sum);
  }
  result.round_trip_ok = reconstruct(table, result) == f;
  return result;
}

template <Scalar S>
GridFunction<S> reconstruct(const MTable<S>& table, const ExpansionResult<S>& coeffs) {
  const CanonicalOrder& order = table.order();
  if (coeffs.coefficients.size() != order.size() || coeffs.order.n() != order.n() ||
      coeffs.order.q() != order.q()) {
    throw DomainError("coefficient vector does not match the table");
  }
  std::vector<S> values;
  values.reserve(order.size());
  for (std::size_t x = 0; x < order.size(); ++x) {
    S value = coeffs.coefficients.front().like(0);
    for (std::size_t s = 0; s < order.size(); ++s) {
      const S& mg = coeffs.side == ExpansionSide::alpha ? table.at(x, s) : table.at(s, x);
      value = value + coeffs.coefficients[s] * mg;
    }
    values.push_back(value);
  }
  return GridFunction<S>(order, std::move(values));
}

template <Scalar S>
UnivariateFit<S> fit_univariate(const Matrix<S>& g, int n, const Composition& fixed,
                                FitSide side) {
  if (g.q() != 2) {
    throw DomainError("univariate fits need q = 2, got q = " + std::to_string(g.q()));
  }
  if (fixed.q() != 2 || fixed.n() != n) {
    throw DomainError("fixed composition " + fixed.to_string() + " is not in V(" +
                      std::to_string(n) + ",2)");
  }
  const MTable<S> table = mg_table(g, n);
  const CanonicalOrder& order = table.order();
  const std::size_t f = order.index_of(fixed);

  // Canonical order on V(n,2) is x = (k, n-k) for k = 0..n, so u = 2k - n is increasing.
  std::vector<long> nodes;
  std::vector<S> coeff;
  for (std::size_t k = 0; k < order.size(); ++k) {
    nodes.push_back(order[k][0] - order[k][1]);
    coeff.push_back(side == FitSide::vary_s ? table.at(f, k) : table.at(k, f));
  }

  // Newton divided differences; node spacings are nonzero integers.
  const std::size_t m = nodes.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      const long gap = nodes[i] - nodes[i - j];
      if (gap == 0) throw VerificationError("interpolation nodes are not distinct");
      coeff[i] = (coeff[i] - coeff[i - 1]).scaled(mpq_class(1, gap));
    }
  }

  // Newton form to monomial basis, innermost term first.
  std::vector<S> poly{coeff[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<S> next(poly.size() + 1, g.constant(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - poly[k].scaled(mpq_class(nodes[i]));
    }
    next[0] = next[0] + coeff[i];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();

  return {side, fixed, std::move(poly)};
}

#define MPOLY_INSTANTIATE_EXPANSION(S)                                                         \
  template ExpansionResult<S> expand(const Matrix<S>&, const MTable<S>&, const GridFunction<S>&, \
                                     ExpansionSide, std::optional<ExpansionVariant>,           \
                                     HypothesisPolicy);                                        \
  template GridFunction<S> reconstruct(const MTable<S>&, const ExpansionResult<S>&);           \
  template UnivariateFit<S> fit_univariate(const Matrix<S>&, int, const Composition&, FitSide);

MPOLY_INSTANTIATE_EXPANSION(ExactScalar)
MPOLY_INSTANTIATE_EXPANSION(ApproxScalar)

}  // namespace mpoly
