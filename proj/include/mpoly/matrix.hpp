#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpoly/error.hpp"
#include "mpoly/scalar.hpp"

namespace mpoly {

/// Square q x q matrix G = (g_ij), 0-based, q >= 2, all entries in one scalar context.
template <Scalar S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix(std::size_t q, std::vector<S> entries) : q_(q), entries_(std::move(entries)) {
    if (q_ < 2) throw DomainError("matrix order must be at least 2, got " + std::to_string(q_));
    if (entries_.size() != q_ * q_) {
      throw DomainError("expected " + std::to_string(q_ * q_) + " entries, got " +
                        std::to_string(entries_.size()));
    }
    for (const S& e : entries_) {
      if (!same_context(e, entries_.front())) {
        throw ContextMismatch("matrix entries use different radicands");
      }
    }
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    std::vector<S> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw DomainError("matrix rows must have length q");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), std::move(flat));
  }

  static Matrix identity(std::size_t q, const S& like) {
    std::vector<S> e(q * q, like.like(0));
    for (std::size_t i = 0; i < q; ++i) e[i * q + i] = like.like(1);
    return Matrix(q, std::move(e));
  }

  std::size_t q() const { return q_; }
  const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * q_ + j]; }
  std::span<const S> row(std::size_t i) const { return {entries_.data() + i * q_, q_}; }
  const std::vector<S>& entries() const { return entries_; }

  /// A constant in the matrix's scalar context.
  S constant(const mpq_class& value) const { return entries_.front().like(value); }

  Matrix transpose() const {
    std::vector<S> e;
    e.reserve(entries_.size());
    for (std::size_t i = 0; i < q_; ++i)
      for (std::size_t j = 0; j < q_; ++j) e.push_back((*this)(j, i));
    return Matrix(q_, std::move(e));
  }

  Matrix conj_transpose() const {
    std::vector<S> e;
    e.reserve(entries_.size());
    for (std::size_t i = 0; i < q_; ++i)
      for (std::size_t j = 0; j < q_; ++j) e.push_back((*this)(j, i).conj());
    return Matrix(q_, std::move(e));
  }

  Matrix conjugate() const {
    std::vector<S> e;
    e.reserve(entries_.size());
    for (const S& x : entries_) e.push_back(x.conj());
    return Matrix(q_, std::move(e));
  }

  Matrix scaled(const S& factor) const {
    std::vector<S> e;
    e.reserve(entries_.size());
    for (const S& x : entries_) e.push_back(x * factor);
    return Matrix(q_, std::move(e));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.q_ != y.q_) throw DomainError("matrix product of different orders");
    std::vector<S> e;
    e.reserve(x.entries_.size());
    for (std::size_t i = 0; i < x.q_; ++i) {
      for (std::size_t k = 0; k < x.q_; ++k) {
        S sum = x.constant(0);
        for (std::size_t j = 0; j < x.q_; ++j) sum = sum + x(i, j) * y(j, k);
        e.push_back(sum);
      }
    }
    return Matrix(x.q_, std::move(e));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t q_;
  std::vector<S> entries_;
};

/// FNV-1a over the order and the canonical literals of the entries.
template <Scalar S>
std::uint64_t fingerprint(const Matrix<S>& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(std::to_string(g.q()));
  if constexpr (is_exact_v<S>) mix(std::to_string(g(0, 0).context().value()));
  for (const S& e : g.entries()) mix(e.to_string());
  return h;
}

}  // namespace mpoly
