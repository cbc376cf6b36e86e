#include "mpoly/orthogonality.hpp"

#include <algorithm>
#include <string>

#include "mpoly/structure.hpp"

namespace mpoly {

std::string_view to_string(OrthogonalityVariant v) {
  switch (v) {
    case OrthogonalityVariant::basic:
      return "basic";
    case OrthogonalityVariant::symmetric:
      return "symmetric";
    case OrthogonalityVariant::core:
      return "core";
  }
  return "?";
}

OrthogonalityVariant parse_orthogonality_variant(std::string_view name) {
  if (name == "basic") return OrthogonalityVariant::basic;
  if (name == "symmetric") return OrthogonalityVariant::symmetric;
  if (name == "core") return OrthogonalityVariant::core;
  throw DomainError("unknown orthogonality variant '" + std::string(name) +
                    "' (expected basic, symmetric or core)");
}

namespace {

template <Scalar S>
bool hypothesis_holds(const Matrix<S>& g, OrthogonalityVariant variant, std::string& missing) {
  if (!check_hadamard(g).is_hadamard.value_or(false)) {
    missing = "matrix is not a generalized Hadamard matrix";
    return false;
  }
  if (variant == OrthogonalityVariant::symmetric && !check_symmetric(g)) {
    missing = "matrix is not symmetric";
    return false;
  }
  if (variant == OrthogonalityVariant::core && !check_core_pattern(g)) {
    missing = "matrix does not have the symmetric-core pattern";
    return false;
  }
  return true;
}

template <Scalar S>
OrthogonalityReport<S> start_report(const Matrix<S>& g, const MTable<S>& table,
                                    OrthogonalityVariant variant, HypothesisPolicy policy) {
  if (table.q() != g.q() || table.matrix_fingerprint() != fingerprint(g)) {
    throw DomainError("MG table was not built from this matrix");
  }
  OrthogonalityReport<S> report;
  report.variant = variant;
  report.n = table.n();
  std::string missing;
  report.hypothesis_holds = hypothesis_holds(g, variant, missing);
  if (!report.hypothesis_holds && policy == HypothesisPolicy::enforce) {
    throw HypothesisError(std::string(to_string(variant)) + " orthogonality: " + missing);
  }
  if constexpr (!is_exact_v<S>) report.max_abs_deviation = 0.0;
  return report;
}

template <Scalar S>
void record(OrthogonalityReport<S>& report, const CanonicalOrder& order, std::size_t p,
            std::size_t t, const S& computed, const S& expected, bool ok) {
  ++report.pairs_checked;
  if (report.max_abs_deviation) {
    report.max_abs_deviation = std::max(*report.max_abs_deviation, abs_deviation(computed, expected));
  }
  if (!ok) report.violations.push_back({order[p], order[t], computed, expected});
}

mpz_class power(unsigned long base, int exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exponent));
  return r;
}

}  // namespace

template <Scalar S>
OrthogonalityReport<S> verify_basic(const Matrix<S>& g, const MTable<S>& table,
                                    HypothesisPolicy policy) {
  auto report = start_report(g, table, OrthogonalityVariant::basic, policy);
  const CanonicalOrder& order = table.order();
  const int n = table.n();
  const mpz_class n_fact = factorial(static_cast<unsigned>(n));
  const mpz_class q_pow = power(g.q(), n);

  std::vector<mpz_class> weight;  // n!/s!
  for (const Composition& s : order) weight.push_back(multinomial(n, s));

  for (std::size_t p = 0; p < order.size(); ++p) {
    const mpz_class p_fact = multi_factorial(order[p]);
    for (std::size_t t = 0; t < order.size(); ++t) {
      S weighted = g.constant(0);
      for (std::size_t s = 0; s < order.size(); ++s) {
        weighted = weighted + (table.at(p, s) * table.at(t, s).conj()).scaled(mpq_class(weight[s]));
      }
      const S computed = weighted.scaled(mpq_class(1, n_fact));
      const S expected = p == t ? g.constant(mpq_class(q_pow, p_fact)) : g.constant(0);
      bool ok;
      if constexpr (is_exact_v<S>) {
        const S rhs = p == t ? g.constant(mpq_class(n_fact * q_pow)) : g.constant(0);
        ok = weighted.scaled(mpq_class(p_fact)) == rhs;
      } else {
        ok = computed == expected;
      }
      record(report, order, p, t, computed, expected, ok);
    }
  }
  return report;
}

namespace {

// sum_s sign(s) MG(p;s) conj MG(s;t) = sign(t) q^n delta_{p,t}
template <Scalar S>
void verify_transposed(const Matrix<S>& g, const MTable<S>& table, bool signed_by_s0,
                       OrthogonalityReport<S>& report) {
  const CanonicalOrder& order = table.order();
  const S q_pow = g.constant(mpq_class(power(g.q(), table.n())));
  auto odd = [&](std::size_t i) { return signed_by_s0 && order[i][0] % 2 != 0; };

  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t t = 0; t < order.size(); ++t) {
      S computed = g.constant(0);
      for (std::size_t s = 0; s < order.size(); ++s) {
        const S term = table.at(p, s) * table.at(s, t).conj();
        computed = odd(s) ? computed - term : computed + term;
      }
      S expected = g.constant(0);
      if (p == t) expected = odd(t) ? -q_pow : q_pow;
      record(report, order, p, t, computed, expected, computed == expected);
    }
  }
}

}  // namespace

template <Scalar S>
OrthogonalityReport<S> verify_symmetric(const Matrix<S>& g, const MTable<S>& table,
                                        HypothesisPolicy policy) {
  auto report = start_report(g, table, OrthogonalityVariant::symmetric, policy);
  verify_transposed(g, table, false, report);
  return report;
}

template <Scalar S>
OrthogonalityReport<S> verify_core(const Matrix<S>& g, const MTable<S>& table,
                                   HypothesisPolicy policy) {
  auto report = start_report(g, table, OrthogonalityVariant::core, policy);
  verify_transposed(g, table, true, report);
  return report;
}

template <Scalar S>
OrthogonalityReport<S> verify_orthogonality(const Matrix<S>& g, const MTable<S>& table,
                                            OrthogonalityVariant variant, HypothesisPolicy policy) {
  switch (variant) {
    case OrthogonalityVariant::basic:
      return verify_basic(g, table, policy);
    case OrthogonalityVariant::symmetric:
      return verify_symmetric(g, table, policy);
    case OrthogonalityVariant::core:
      return verify_core(g, table, policy);
  }
  throw DomainError("unknown orthogonality variant");
}

#define MPOLY_INSTANTIATE_ORTHO(S)                                                              \
  template OrthogonalityReport<S> verify_basic(const Matrix<S>&, const MTable<S>&,              \
                                               HypothesisPolicy);                               \
  template OrthogonalityReport<S> verify_symmetric(const Matrix<S>&, const MTable<S>&,          \
                                                   HypothesisPolicy);                           \
  template OrthogonalityReport<S> verify_core(const Matrix<S>&, const MTable<S>&,               \
                                              HypothesisPolicy);                                \
  template OrthogonalityReport<S> verify_orthogonality(const Matrix<S>&, const MTable<S>&,      \
                                                       OrthogonalityVariant, HypothesisPolicy);

MPOLY_INSTANTIATE_ORTHO(ExactScalar)
MPOLY_INSTANTIATE_ORTHO(ApproxScalar)

}  // namespace mpoly
