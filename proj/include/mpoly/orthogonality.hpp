#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mpoly/mpoly.hpp"

namespace mpoly {

enum class OrthogonalityVariant { basic, symmetric, core };

std::string_view to_string(OrthogonalityVariant v);
/// Throws DomainError on an unknown name.
OrthogonalityVariant parse_orthogonality_variant(std::string_view name);

/// enforce: throw HypothesisError when the theorem's hypothesis fails.
/// force: run anyway and flag the report as unverified-hypothesis.
enum class HypothesisPolicy { enforce, force };

template <Scalar S>
struct OrthogonalityViolation {
  Composition p;
  Composition t;
  S computed;
  S expected;
};

template <Scalar S>
struct OrthogonalityReport {
  OrthogonalityVariant variant = OrthogonalityVariant::basic;
  int n = 0;
  std::size_t pairs_checked = 0;
  bool hypothesis_holds = true;
  std::vector<OrthogonalityViolation<S>> violations;
  /// Largest |computed - expected| over all pairs; approximate mode only.
  std::optional<double> max_abs_deviation;

  bool holds() const { return violations.empty(); }
};

// basic:     sum_s (1/s!) MG(p;s) conj MG(t;s)        = q^n / p! delta_{p,t}   (G Hadamard)
// symmetric: sum_s MG(p;s) conj MG(s;t)              = q^n delta_{p,t}        (and G = G^T)
// core:      sum_s (-1)^{s_0} MG(p;s) conj MG(s;t)   = (-1)^{t_0} q^n delta   (and core pattern)
//
// Exact mode checks the basic relation in the division-free form
//   p! sum_s (n!/s!) MG(p;s) conj MG(t;s) = n! q^n delta_{p,t},
// which stays integral for integral G; reported values use the normalization above.

template <Scalar S>
OrthogonalityReport<S> verify_basic(const Matrix<S>& g, const MTable<S>& table,
                                    HypothesisPolicy policy = HypothesisPolicy::enforce);
template <Scalar S>
OrthogonalityReport<S> verify_symmetric(const Matrix<S>& g, const MTable<S>& table,
                                        HypothesisPolicy policy = HypothesisPolicy::enforce);
template <Scalar S>
OrthogonalityReport<S> verify_core(const Matrix<S>& g, const MTable<S>& table,
                                   HypothesisPolicy policy = HypothesisPolicy::enforce);

template <Scalar S>
OrthogonalityReport<S> verify_orthogonality(const Matrix<S>& g, const MTable<S>& table,
                                            OrthogonalityVariant variant,
                                            HypothesisPolicy policy = HypothesisPolicy::enforce);

template <Scalar S>
OrthogonalityReport<S> verify_basic(const Matrix<S>& g, int n,
                                    HypothesisPolicy policy = HypothesisPolicy::enforce) {
  return verify_basic(g, mg_table(g, n), policy);
}
template <Scalar S>
OrthogonalityReport<S> verify_symmetric(const Matrix<S>& g, int n,
                                        HypothesisPolicy policy = HypothesisPolicy::enforce) {
  return verify_symmetric(g, mg_table(g, n), policy);
}
template <Scalar S>
OrthogonalityReport<S> verify_core(const Matrix<S>& g, int n,
                                   HypothesisPolicy policy = HypothesisPolicy::enforce) {
  return verify_core(g, mg_table(g, n), policy);
}

#define MPOLY_DECLARE_ORTHO(S)                                                              \
  extern template OrthogonalityReport<S> verify_basic(const Matrix<S>&, const MTable<S>&,   \
                                                      HypothesisPolicy);                    \
  extern template OrthogonalityReport<S> verify_symmetric(const Matrix<S>&,                 \
                                                          const MTable<S>&,                 \
                                                          HypothesisPolicy);                \
  extern template OrthogonalityReport<S> verify_core(const Matrix<S>&, const MTable<S>&,    \
                                                     HypothesisPolicy);                     \
  extern template OrthogonalityReport<S> verify_orthogonality(                              \
      const Matrix<S>&, const MTable<S>&, OrthogonalityVariant, HypothesisPolicy);

MPOLY_DECLARE_ORTHO(ExactScalar)
MPOLY_DECLARE_ORTHO(ApproxScalar)
#undef MPOLY_DECLARE_ORTHO

}  // namespace mpoly
