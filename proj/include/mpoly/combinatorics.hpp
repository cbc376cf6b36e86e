#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mpoly/scalar.hpp"

namespace mpoly {

/// An element of V(n,q): q >= 2 nonnegative parts summing to n.
class Composition {
 public:
  Composition() = default;
  /// Throws DomainError on a negative part or fewer than two parts.
  explicit Composition(std::vector<int> parts);

  std::size_t q() const { return parts_.size(); }
  int n() const { return n_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const { return parts_; }

  /// "(2,4)"
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& x, const Composition& y) {
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// C(n+q-1, q-1).
mpz_class composition_count(int n, std::size_t q);

/// V(n,q) in lexicographic ascending order: (0,..,0,n) first, (n,0,..,0) last.
std::vector<Composition> enumerate_compositions(int n, std::size_t q);

/// V(n,q) with O(log |V|) lookup of a composition's canonical index.
class CanonicalOrder {
 public:
  CanonicalOrder(int n, std::size_t q);

  int n() const { return n_; }
  std::size_t q() const { return q_; }
  std::size_t size() const { return items_.size(); }
  const Composition& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Composition>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  std::optional<std::size_t> find(const Composition& p) const;
  /// Throws DomainError when p is not in V(n,q).
  std::size_t index_of(const Composition& p) const;

 private:
  int n_;
  std::size_t q_;
  std::vector<Composition> items_;
};

mpz_class factorial(unsigned n);
/// prod p_i!
mpz_class multi_factorial(const Composition& p);
/// n! / p!; throws DomainError when |p| != n.
mpz_class multinomial(int n, const Composition& p);

/// q x q nonnegative integer matrix r_{i,j}, row-major.
class ContingencyTable {
 public:
  ContingencyTable() = default;
  explicit ContingencyTable(std::size_t q) : q_(q), cells_(q * q, 0) {}
  ContingencyTable(std::size_t q, std::vector<int> cells);

  std::size_t q() const { return q_; }
  int operator()(std::size_t i, std::size_t j) const { return cells_[i * q_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return cells_[i * q_ + j]; }
  std::span<const int> row(std::size_t i) const { return {cells_.data() + i * q_, q_}; }
  std::span<int> row(std::size_t i) { return {cells_.data() + i * q_, q_}; }

  int row_sum(std::size_t i) const;
  int column_sum(std::size_t j) const;

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;

 private:
  std::size_t q_ = 0;
  std::vector<int> cells_;
};

/// Lazy stream over all tables with row sums `rows` and column sums `columns`.
/// Rows are filled one at a time; each row is a composition of its margin bounded
/// by the column budget left by the rows above, so the last row is always forced
/// and every prefix extends to a valid table. Tables come out in lexicographic
/// order of their row-major cells.
class TableStream {
 public:
  /// Throws DomainError when |rows| != |columns| or the lengths differ.
  TableStream(Composition rows, Composition columns);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ContingencyTable;
    using difference_type = std::ptrdiff_t;
    using pointer = const ContingencyTable*;
    using reference = const ContingencyTable&;

    iterator() = default;
    reference operator*() const { return table_; }
    pointer operator->() const { return &table_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class TableStream;
    iterator(const TableStream* owner);
    bool advance();
    void fill_from(std::size_t row);

    const TableStream* owner_ = nullptr;
    ContingencyTable table_;
    std::vector<int> budget_;  // column budget remaining before each row, row-major
    bool done_ = true;
  };

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Composition rows_;
  Composition columns_;
};

/// Every table with row sums s and column sums p (the index set of MG(p;s)).
inline TableStream enumerate_tables(const Composition& s, const Composition& p) {
  return TableStream(s, p);
}

/// prod z_j^{p_j}, 0^0 = 1.
template <Scalar S>
S monomial_power(std::span<const S> z, const Composition& p) {
  if (z.size() != p.q()) {
    throw DomainError("monomial_power: " + std::to_string(z.size()) + " values for a " +
                      std::to_string(p.q()) + "-part exponent");
  }
  if (z.empty()) throw DomainError("monomial_power: empty point");
  S result = z[0].like(1);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (p[j] > 0) result = result * pow_nonneg(z[j], static_cast<unsigned>(p[j]));
  }
  return result;
}

}  // namespace mpoly
