#include "mpoly/mpoly.hpp"

#include <limits>

#include "mpoly/structure.hpp"

namespace mpoly {

namespace {

template <Scalar S>
void require_pair(const Matrix<S>& g, const Composition& p, const Composition& s) {
  if (p.q() != g.q() || s.q() != g.q()) {
    throw DomainError("compositions " + p.to_string() + " and " + s.to_string() +
                      " must have q = " + std::to_string(g.q()) + " parts");
  }
  if (p.n() != s.n()) {
    throw DomainError("|p| = " + std::to_string(p.n()) + " differs from |s| = " +
                      std::to_string(s.n()));
  }
}

// Sparse polynomial in z_0..z_{q-1}; keys are exponent vectors.
template <Scalar S>
using SparsePoly = std::map<std::vector<int>, S>;

template <Scalar S>
SparsePoly<S> expand_generator(const Matrix<S>& g, const Composition& s) {
  const std::size_t q = g.q();
  SparsePoly<S> poly;
  poly.emplace(std::vector<int>(q, 0), g.constant(1));
  for (std::size_t i = 0; i < q; ++i) {
    for (int k = 0; k < s[i]; ++k) {
      SparsePoly<S> next;
      for (const auto& [exponent, coeff] : poly) {
        for (std::size_t j = 0; j < q; ++j) {
          if (g(i, j).is_zero()) continue;
          std::vector<int> e = exponent;
          ++e[j];
          const S term = coeff * g(i, j);
          auto [it, inserted] = next.try_emplace(std::move(e), term);
          if (!inserted) it->second = it->second + term;
        }
      }
      poly = std::move(next);
    }
  }
  return poly;
}

template <Scalar S>
std::vector<S> generator_column(const Matrix<S>& g, const Composition& s,
                                const CanonicalOrder& order) {
  const SparsePoly<S> poly = expand_generator(g, s);
  std::vector<S> column(order.size(), g.constant(0));
  for (const auto& [exponent, coeff] : poly) {
    const Composition p(exponent);
    column[order.index_of(p)] = coeff;
  }
  return column;
}

mpq_class factorial_ratio(const Composition& num, const Composition& den) {
  mpq_class r(multi_factorial(num), multi_factorial(den));
  r.canonicalize();
  return r;
}

}  // namespace

template <Scalar S>
S mg_direct(const Matrix<S>& g, const Composition& p, const Composition& s) {
  require_pair(g, p, s);
  const std::size_t q = g.q();
  S total = g.constant(0);
  for (const ContingencyTable& r : enumerate_tables(s, p)) {
    // s! / prod r_ab! factors row by row into integer multinomials.
    mpz_class weight = 1;
    S term = g.constant(1);
    for (std::size_t a = 0; a < q; ++a) {
      weight *= multinomial(s[a], Composition(std::vector<int>(r.row(a).begin(), r.row(a).end())));
      for (std::size_t b = 0; b < q; ++b) {
        if (r(a, b) > 0) term = term * pow_nonneg(g(a, b), static_cast<unsigned>(r(a, b)));
      }
    }
    total = total + term.scaled(mpq_class(weight));
  }
  return total;
}

template <Scalar S>
std::map<Composition, S> mg_generator(const Matrix<S>& g, const Composition& s) {
  if (s.q() != g.q()) {
    throw DomainError("composition " + s.to_string() + " must have q = " +
                      std::to_string(g.q()) + " parts");
  }
  const CanonicalOrder order(s.n(), g.q());
  const std::vector<S> column = generator_column(g, s, order);
  std::map<Composition, S> out;
  for (std::size_t i = 0; i < order.size(); ++i) out.emplace(order[i], column[i]);
  return out;
}

template <Scalar S>
MTable<S>::MTable(CanonicalOrder order, std::vector<S> values, std::uint64_t matrix_fingerprint)
    : order_(std::move(order)), values_(std::move(values)), fingerprint_(matrix_fingerprint) {
  if (values_.size() != order_.size() * order_.size()) {
    throw DomainError("table values do not match |V(n,q)|^2");
  }
}

template <Scalar S>
MTable<S> mg_table(const Matrix<S>& g, int n, unsigned long long cell_budget) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const mpz_class count = composition_count(n, g.q());
  const mpz_class cells = count * count;
  if (cells > mpz_class(std::to_string(cell_budget), 10)) {
    const unsigned long long required =
        cells.fits_ulong_p() ? cells.get_ui() : std::numeric_limits<unsigned long long>::max();
    throw BudgetExceeded("table for n=" + std::to_string(n) + ", q=" + std::to_string(g.q()) +
                             " needs " + cells.get_str() + " cells, budget is " +
                             std::to_string(cell_budget),
                         required);
  }
  CanonicalOrder order(n, g.q());
  const std::size_t size = order.size();
  std::vector<S> values(size * size, g.constant(0));
  for (std::size_t si = 0; si < size; ++si) {
    const std::vector<S> column = generator_column(g, order[si], order);
    for (std::size_t pi = 0; pi < size; ++pi) values[pi * size + si] = column[pi];
  }
  return MTable<S>(std::move(order), std::move(values), fingerprint(g));
}

template <Scalar S>
S mg_sum_over_p(const Matrix<S>& g, const Composition& s, bool verify) {
  if (s.q() != g.q()) throw DomainError("composition length does not match q");
  S product = g.constant(1);
  for (std::size_t i = 0; i < g.q(); ++i) {
    S row_sum = g.constant(0);
    for (const S& x : g.row(i)) row_sum = row_sum + x;
    product = product * pow_nonneg(row_sum, static_cast<unsigned>(s[i]));
  }
  if (verify) {
    S total = g.constant(0);
    for (const auto& [p, value] : mg_generator(g, s)) total = total + value;
    if (!(total == product)) {
      throw VerificationError("sum of MG(p;" + s.to_string() + ") over p is " + total.to_string() +
                              ", expected " + product.to_string());
    }
  }
  return product;
}

template <Scalar S>
S symmetry_factor(const Matrix<S>& g, const Composition& p, const Composition& s) {
  require_pair(g, p, s);
  const mpq_class ratio = factorial_ratio(p, s);
  if (check_symmetric(g)) return mg_direct(g, p, s).scaled(ratio);
  if (check_core_pattern(g)) {
    const S value = mg_direct(g, p, s).scaled(ratio);
    return (s[0] + p[0]) % 2 == 0 ? value : -value;
  }
  throw HypothesisError("matrix is neither symmetric nor of the symmetric-core pattern");
}

template <Scalar S>
S l_poly(const Matrix<S>& g, const Composition& p, const Composition& s) {
  return mg_direct(g, p, s).scaled(mpq_class(1, multi_factorial(s)));
}

template <Scalar S>
MultiplicationReport<S> verify_multiplication(const Matrix<S>& g1, const Matrix<S>& g2, int n,
                                              ProductOrder product_order) {
  if (g1.q() != g2.q()) throw DomainError("matrices have different orders");
  if (!same_context(g1(0, 0), g2(0, 0))) throw ContextMismatch("matrices use different radicands");

  const MTable<S> t1 = mg_table(g1, n);
  const MTable<S> t2 = mg_table(g2, n);
  const MTable<S> t12 =
      mg_table(product_order == ProductOrder::as_stated ? g1 * g2 : g2 * g1, n);
  const CanonicalOrder& order = t1.order();

  std::vector<mpq_class> inv_fact;
  std::vector<mpq_class> fact;
  for (const Composition& c : order) {
    fact.emplace_back(multi_factorial(c));
    inv_fact.emplace_back(1 / fact.back());
  }

  MultiplicationReport<S> report;
  report.n = n;
  report.product_order = product_order;
  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t t = 0; t < order.size(); ++t) {
      const S lhs = t12.at(p, t).scaled(inv_fact[t]);
      S rhs = g1.constant(0);
      for (std::size_t s = 0; s < order.size(); ++s) {
        const S l1 = t1.at(p, s).scaled(inv_fact[s]);
        const S l2 = t2.at(s, t).scaled(inv_fact[t]);
        rhs = rhs + (l1 * l2).scaled(fact[s]);
      }
      ++report.pairs_checked;
      if (!(lhs == rhs)) report.violations.push_back({order[p], order[t], lhs, rhs});
    }
  }
  return report;
}

#define MPOLY_INSTANTIATE_MPOLY(S)                                                       \
  template S mg_direct(const Matrix<S>&, const Composition&, const Composition&);        \
  template std::map<Composition, S> mg_generator(const Matrix<S>&, const Composition&); \
  template class MTable<S>;                                                              \
  template MTable<S> mg_table(const Matrix<S>&, int, unsigned long long);                \
  template S mg_sum_over_p(const Matrix<S>&, const Composition&, bool);                  \
  template S symmetry_factor(const Matrix<S>&, const Composition&, const Composition&);  \
  template S l_poly(const Matrix<S>&, const Composition&, const Composition&);           \
  template MultiplicationReport<S> verify_multiplication(const Matrix<S>&, const Matrix<S>&, int, \
                                                         ProductOrder);

MPOLY_INSTANTIATE_MPOLY(ExactScalar)
MPOLY_INSTANTIATE_MPOLY(ApproxScalar)

}  // namespace mpoly
