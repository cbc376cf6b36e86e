#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mpoly/combinatorics.hpp"
#include "mpoly/matrix.hpp"

namespace mpoly {

inline constexpr unsigned long long kDefaultCellBudget = 1'000'000ULL;

/// MG(p;s) = s! * sum over tables r with row sums s and column sums p of
/// prod_{a,b} g_ab^{r_ab} / r_ab!. Throws DomainError when |p| != |s| or the
/// lengths do not match q.
template <Scalar S>
S mg_direct(const Matrix<S>& g, const Composition& p, const Composition& s);

/// Coefficients of prod_i (sum_j g_ij z_j)^{s_i}: MG(p;s) for every p in V(|s|,q).
template <Scalar S>
std::map<Composition, S> mg_generator(const Matrix<S>& g, const Composition& s);

/// Dense MG values over V(n,q); rows are p, columns are s.
template <Scalar S>
class MTable {
 public:
  MTable(CanonicalOrder order, std::vector<S> values, std::uint64_t matrix_fingerprint);

  int n() const { return order_.n(); }
  std::size_t q() const { return order_.q(); }
  std::size_t size() const { return order_.size(); }
  const CanonicalOrder& order() const { return order_; }
  std::uint64_t matrix_fingerprint() const { return fingerprint_; }

  const S& at(std::size_t p_index, std::size_t s_index) const {
    return values_[p_index * order_.size() + s_index];
  }
  const S& operator()(const Composition& p, const Composition& s) const {
    return at(order_.index_of(p), order_.index_of(s));
  }

 private:
  CanonicalOrder order_;
  std::vector<S> values_;
  std::uint64_t fingerprint_;
};

/// One generator expansion per column. Throws BudgetExceeded when |V(n,q)|^2 > cell_budget.
template <Scalar S>
MTable<S> mg_table(const Matrix<S>& g, int n, unsigned long long cell_budget = kDefaultCellBudget);

/// prod_i (sum_j g_ij)^{s_i}, the sum of MG(p;s) over p. With `verify`, also
/// sums the generator column and throws VerificationError on disagreement.
template <Scalar S>
S mg_sum_over_p(const Matrix<S>& g, const Composition& s, bool verify = false);

/// MG(s;p) predicted from MG(p;s): (p!/s!) MG(p;s) for symmetric G, and
/// (-1)^{s_0+p_0} (p!/s!) MG(p;s) for the core pattern. HypothesisError otherwise.
template <Scalar S>
S symmetry_factor(const Matrix<S>& g, const Composition& p, const Composition& s);

/// L_{p,s}(G) = MG(p;s) / s!
template <Scalar S>
S l_poly(const Matrix<S>& g, const Composition& p, const Composition& s);

/// Which product appears on the left of the multiplication identity.
/// With MG read off (Gz)^s, generators compose as MG(G1 G2) = MG(G2) MG(G1),
/// so the identity below only holds in general for `reversed`.
enum class ProductOrder { as_stated, reversed };

template <Scalar S>
struct MultiplicationViolation {
  Composition p;
  Composition t;
  S lhs;
  S rhs;
};

template <Scalar S>
struct MultiplicationReport {
  int n = 0;
  ProductOrder product_order = ProductOrder::as_stated;
  std::size_t pairs_checked = 0;
  std::vector<MultiplicationViolation<S>> violations;

  bool holds() const { return violations.empty(); }
};

/// Checks L_{p,t}(P) = sum_s s! L_{p,s}(G1) L_{s,t}(G2) for all p, t in V(n,q),
/// where P = G1 G2 (as_stated) or G2 G1 (reversed).
template <Scalar S>
MultiplicationReport<S> verify_multiplication(const Matrix<S>& g1, const Matrix<S>& g2, int n,
                                              ProductOrder order = ProductOrder::as_stated);

#define MPOLY_DECLARE_MPOLY(S)                                                                  \
  extern template S mg_direct(const Matrix<S>&, const Composition&, const Composition&);        \
  extern template std::map<Composition, S> mg_generator(const Matrix<S>&, const Composition&); \
  extern template class MTable<S>;                                                              \
  extern template MTable<S> mg_table(const Matrix<S>&, int, unsigned long long);                \
  extern template S mg_sum_over_p(const Matrix<S>&, const Composition&, bool);                  \
  extern template S symmetry_factor(const Matrix<S>&, const Composition&, const Composition&);  \
  extern template S l_poly(const Matrix<S>&, const Composition&, const Composition&);           \
  extern template MultiplicationReport<S> verify_multiplication(                                \
      const Matrix<S>&, const Matrix<S>&, int, ProductOrder);

MPOLY_DECLARE_MPOLY(ExactScalar)
MPOLY_DECLARE_MPOLY(ApproxScalar)
#undef MPOLY_DECLARE_MPOLY

}  // namespace mpoly
