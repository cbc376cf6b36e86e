#pragma once

// Fixtures and independent oracles shared by the unit and acceptance suites.
// Nothing here calls into the MG evaluation paths.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpoly/combinatorics.hpp"
#include "mpoly/matrix.hpp"
#include "mpoly/scalar.hpp"

namespace mpoly::testing {

inline Radicand sqrt3() { return Radicand::of(3); }
inline Radicand sqrt_minus3() { return Radicand::of(-3); }

inline Matrix<ExactScalar> int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<ExactScalar>> m;
  for (const auto& r : rows) {
    std::vector<ExactScalar> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return Matrix<ExactScalar>::from_rows(m);
}

inline Matrix<ExactScalar> literal_matrix(const std::vector<std::vector<std::string>>& rows,
                                          Radicand ctx) {
  std::vector<std::vector<ExactScalar>> m;
  for (const auto& r : rows) {
    std::vector<ExactScalar> row;
    for (const auto& v : r) row.push_back(parse_scalar(v, ctx));
    m.push_back(std::move(row));
  }
  return Matrix<ExactScalar>::from_rows(m);
}

/// [[1,1],[1,-1]], the matrix the printed 7x7 table, fits and coefficients belong to.
inline Matrix<ExactScalar> symmetric2() { return int_matrix({{1, 1}, {1, -1}}); }

/// [[1,1],[-1,1]], the matrix of the code listing (core pattern, core [1]).
inline Matrix<ExactScalar> core2() { return int_matrix({{1, 1}, {-1, 1}}); }

/// 3x3 generalized Hadamard matrix with symmetric core over Q(sqrt 3).
inline Matrix<ExactScalar> core3() {
  return literal_matrix({{"1", "1", "1"},
                         {"-1", "1/2-1/2*r", "1/2+1/2*r"},
                         {"-1", "1/2+1/2*r", "1/2-1/2*r"}},
                        sqrt3());
}

/// DFT_3 = (w^{jk}) with w = (-1+sqrt(-3))/2.
inline Matrix<ExactScalar> dft3() {
  const std::string w = "-1/2+1/2*r";
  const std::string w2 = "-1/2-1/2*r";
  return literal_matrix({{"1", "1", "1"}, {"1", w, w2}, {"1", w2, w}}, sqrt_minus3());
}

inline Matrix<ApproxScalar> dft(std::size_t q, double tol = kDefaultTolerance) {
  std::vector<ApproxScalar> e;
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < q; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % q) /
                           static_cast<double>(q);
      e.emplace_back(std::polar(1.0, angle), tol);
    }
  }
  return Matrix<ApproxScalar>(q, std::move(e));
}

inline Matrix<ExactScalar> all_ones(std::size_t q) {
  return Matrix<ExactScalar>(q, std::vector<ExactScalar>(q * q, ExactScalar(1)));
}

inline Matrix<ExactScalar> random_int_matrix(std::mt19937& rng, std::size_t q, int lo = -3,
                                             int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<ExactScalar> e;
  for (std::size_t i = 0; i < q * q; ++i) e.emplace_back(static_cast<long>(dist(rng)));
  return Matrix<ExactScalar>(q, std::move(e));
}

inline ExactScalar random_exact(std::mt19937& rng, Radicand ctx) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  mpq_class a(num(rng), den(rng));
  a.canonicalize();
  if (ctx.is_none()) return ExactScalar(a, ctx);
  mpq_class b(num(rng), den(rng));
  b.canonicalize();
  return ExactScalar(a, b, ctx);
}

/// MG((p0,p1);(s0,s1)) for G = [[1,1],[1,-1]], n = 6, exactly as printed:
/// rows p = (0,6)..(6,0), columns s = (0,6)..(6,0).
inline constexpr std::array<std::array<int, 7>, 7> kPrintedTable = {{
    {1, -1, 1, -1, 1, -1, 1},
    {-6, 4, -2, 0, 2, -4, 6},
    {15, -5, -1, 3, -1, -5, 15},
    {-20, 0, 4, 0, -4, 0, 20},
    {15, 5, -1, -3, -1, 5, 15},
    {-6, -4, -2, 0, 2, 4, 6},
    {1, 1, 1, 1, 1, 1, 1},
}};

/// Printed univariate fits in u = s0 - s1 for MG(p; s), p = (0,6)..(6,0),
/// coefficients lowest degree first.
inline const std::vector<std::vector<std::string>>& printed_fits_in_s() {
  static const std::vector<std::vector<std::string>> fits = {
      {"-1", "0", "34/45", "0", "-5/72", "0", "1/720"},
      {"0", "11/5", "0", "-1/3", "0", "1/120"},
      {"3", "0", "-7/6", "0", "1/24"},
      {"0", "-8/3", "0", "1/6"},
      {"-3", "0", "1/2"},
      {"0", "1"},
      {"1"},
  };
  return fits;
}

/// Printed univariate fits in u = p0 - p1 for MG(p; s), s = (0,6)..(6,0).
inline const std::vector<std::vector<std::string>>& printed_fits_in_p() {
  static const std::vector<std::vector<std::string>> fits = {
      {"-20", "0", "1519/120", "0", "-203/192", "0", "77/3840"},
      {"0", "131/30", "0", "-49/96", "0", "7/640"},
      {"4", "0", "-199/120", "0", "7/64", "0", "-7/3840"},
      {"0", "-67/30", "0", "19/96", "0", "-7/1920"},
      {"-4", "0", "329/360", "0", "-25/576", "0", "7/11520"},
      {"0", "19/6", "0", "-17/96", "0", "1/384"},
      {"20", "0", "-101/72", "0", "23/576", "0", "-1/2304"},
  };
  return fits;
}

/// Brute-force table counts: every q x q nonnegative integer matrix with entry
/// total n, bucketed by (row sums, column sums).
inline std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t>
brute_force_table_counts(int n, std::size_t q) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> counts;
  std::vector<int> cells(q * q, 0);
  auto visit = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k + 1 == cells.size()) {
      cells[k] = remaining;
      std::vector<int> rows(q, 0);
      std::vector<int> cols(q, 0);
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          rows[i] += cells[i * q + j];
          cols[j] += cells[i * q + j];
        }
      }
      ++counts[{rows, cols}];
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cells[k] = v;
      self(self, k + 1, remaining - v);
    }
  };
  visit(visit, 0, n);
  return counts;
}

/// Solves A x = b over Q by Gauss-Jordan elimination (A square, nonsingular).
inline std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> a,
                                             std::vector<mpq_class> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::runtime_error("singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < m; ++r) b[r] /= a[r][r];
  return b;
}

/// Vandermonde interpolation through (u_k, y_k): coefficients lowest degree first.
inline std::vector<mpq_class> vandermonde_fit(const std::vector<long>& nodes,
                                              const std::vector<mpq_class>& values) {
  std::vector<std::vector<mpq_class>> a(nodes.size(), std::vector<mpq_class>(nodes.size()));
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    mpq_class x = 1;
    for (std::size_t c = 0; c < nodes.size(); ++c) {
      a[r][c] = x;
      x *= nodes[r];
    }
  }
  auto coeffs = solve_rational(std::move(a), values);
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

inline std::vector<ExactScalar> to_exact(const std::vector<std::string>& literals,
                                         Radicand ctx = Radicand::none()) {
  std::vector<ExactScalar> out;
  for (const auto& s : literals) out.push_back(parse_scalar(s, ctx));
  return out;
}

}  // namespace mpoly::testing
