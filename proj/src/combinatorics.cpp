#include "mpoly/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace mpoly {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw DomainError("a composition needs at least two parts, got " +
                      std::to_string(parts_.size()));
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw DomainError("composition part " + std::to_string(i) + " is negative");
    }
    n_ += parts_[i];
  }
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

mpz_class composition_count(int n, std::size_t q) {
  if (n < 0) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n) + q - 1, q - 1);
  return c;
}

namespace {

void enumerate_into(std::vector<int>& parts, std::size_t i, int remaining,
                    std::vector<Composition>& out) {
  if (i + 1 == parts.size()) {
    parts[i] = remaining;
    out.emplace_back(parts);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    parts[i] = v;
    enumerate_into(parts, i + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, std::size_t q) {
  if (q < 2) throw DomainError("q must be at least 2, got " + std::to_string(q));
  if (n < 0) throw DomainError("n must be nonnegative, got " + std::to_string(n));
  std::vector<Composition> out;
  out.reserve(composition_count(n, q).get_ui());
  std::vector<int> parts(q, 0);
  enumerate_into(parts, 0, n, out);
  return out;
}

CanonicalOrder::CanonicalOrder(int n, std::size_t q)
    : n_(n), q_(q), items_(enumerate_compositions(n, q)) {}

std::optional<std::size_t> CanonicalOrder::find(const Composition& p) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), p);
  if (it == items_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin());
}

std::size_t CanonicalOrder::index_of(const Composition& p) const {
  if (auto i = find(p)) return *i;
  throw DomainError(p.to_string() + " is not in V(" + std::to_string(n_) + "," +
                    std::to_string(q_) + ")");
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class multi_factorial(const Composition& p) {
  mpz_class f = 1;
  for (int part : p.parts()) f *= factorial(static_cast<unsigned>(part));
  return f;
}

mpz_class multinomial(int n, const Composition& p) {
  if (p.n() != n) {
    throw DomainError("multinomial: " + p.to_string() + " does not sum to " + std::to_string(n));
  }
  mpz_class r = factorial(static_cast<unsigned>(n));
  return mpz_class(r / multi_factorial(p));
}

ContingencyTable::ContingencyTable(std::size_t q, std::vector<int> cells)
    : q_(q), cells_(std::move(cells)) {
  if (cells_.size() != q * q) throw DomainError("table cell count does not match q*q");
}

int ContingencyTable::row_sum(std::size_t i) const {
  auto r = row(i);
  return std::accumulate(r.begin(), r.end(), 0);
}

int ContingencyTable::column_sum(std::size_t j) const {
  int sum = 0;
  for (std::size_t i = 0; i < q_; ++i) sum += (*this)(i, j);
  return sum;
}

// ---------------------------------------------------------------------------
// TableStream

namespace {

// Lexicographically smallest composition of `total` into row with row[k] <= caps[k].
void first_bounded(std::span<int> row, std::span<const int> caps, int total) {
  int tail = std::accumulate(caps.begin(), caps.end(), 0);
  for (std::size_t k = 0; k < row.size(); ++k) {
    tail -= caps[k];
    const int v = std::max(0, total - tail);
    row[k] = v;
    total -= v;
  }
}

bool next_bounded(std::span<int> row, std::span<const int> caps) {
  if (row.size() < 2) return false;
  const int total = std::accumulate(row.begin(), row.end(), 0);
  int prefix = std::accumulate(row.begin(), row.end() - 1, 0);
  for (std::size_t j = row.size() - 1; j-- > 0;) {
    const int rest = total - prefix - 1;
    if (row[j] < caps[j] && rest >= 0) {
      ++row[j];
      first_bounded(row.subspan(j + 1), caps.subspan(j + 1), rest);
      return true;
    }
    prefix -= row[j];
  }
  return false;
}

}  // namespace

TableStream::TableStream(Composition rows, Composition columns)
    : rows_(std::move(rows)), columns_(std::move(columns)) {
  if (rows_.q() != columns_.q()) {
    throw DomainError("margins have different lengths: " + rows_.to_string() + " and " +
                      columns_.to_string());
  }
  if (rows_.n() != columns_.n()) {
    throw DomainError("margin mismatch: row sums " + rows_.to_string() + " total " +
                      std::to_string(rows_.n()) + ", column sums " + columns_.to_string() +
                      " total " + std::to_string(columns_.n()));
  }
}

TableStream::iterator::iterator(const TableStream* owner)
    : owner_(owner), table_(owner->rows_.q()), budget_(owner->rows_.q() * owner->rows_.q()) {
  const std::size_t q = owner_->rows_.q();
  for (std::size_t j = 0; j < q; ++j) budget_[j] = owner_->columns_[j];
  fill_from(0);
  done_ = false;
}

void TableStream::iterator::fill_from(std::size_t start) {
  const std::size_t q = table_.q();
  for (std::size_t i = start; i < q; ++i) {
    std::span<const int> caps(budget_.data() + i * q, q);
    auto row = table_.row(i);
    if (i + 1 == q) {
      std::copy(caps.begin(), caps.end(), row.begin());
      return;
    }
    first_bounded(row, caps, owner_->rows_[i]);
    for (std::size_t j = 0; j < q; ++j) budget_[(i + 1) * q + j] = caps[j] - row[j];
  }
}

bool TableStream::iterator::advance() {
  const std::size_t q = table_.q();
  for (std::size_t i = q - 1; i-- > 0;) {
    std::span<const int> caps(budget_.data() + i * q, q);
    auto row = table_.row(i);
    if (next_bounded(row, caps)) {
      for (std::size_t j = 0; j < q; ++j) budget_[(i + 1) * q + j] = caps[j] - row[j];
      fill_from(i + 1);
      return true;
    }
  }
  return false;
}

TableStream::iterator& TableStream::iterator::operator++() {
  if (!done_ && !advance()) done_ = true;
  return *this;
}

}  // namespace mpoly
