#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mpoly/matrix.hpp"

namespace mpoly {

enum class Predicate { hadamard, symmetric, core_pattern };

std::string_view to_string(Predicate p);

/// A counterexample: for hadamard, (i, j) is a pair of rows and `found` their
/// inner product; for the entry predicates, (i, j) is the offending entry.
template <Scalar S>
struct Witness {
  Predicate predicate;
  std::size_t i;
  std::size_t j;
  S found;
  S expected;
};

/// Predicates that were not evaluated are left empty.
template <Scalar S>
struct StructureReport {
  std::optional<bool> is_hadamard;
  std::optional<bool> is_symmetric;
  std::optional<bool> is_core_pattern;
  std::vector<Witness<S>> witnesses;

  /// True when every evaluated predicate holds.
  bool all_hold() const {
    return is_hadamard.value_or(true) && is_symmetric.value_or(true) &&
           is_core_pattern.value_or(true);
  }
};

/// G * conj(G)^T == q * I, with a witness per offending row pair (i <= j).
template <Scalar S>
StructureReport<S> check_hadamard(const Matrix<S>& g);

template <Scalar S>
bool check_symmetric(const Matrix<S>& g);

/// g_0j = 1 for all j, g_i0 = -1 for i >= 1, and the core is symmetric.
template <Scalar S>
bool check_core_pattern(const Matrix<S>& g);

/// All three predicates with witnesses for each failure.
template <Scalar S>
StructureReport<S> check_structure(const Matrix<S>& g);

extern template StructureReport<ExactScalar> check_hadamard(const Matrix<ExactScalar>&);
extern template StructureReport<ApproxScalar> check_hadamard(const Matrix<ApproxScalar>&);
extern template bool check_symmetric(const Matrix<ExactScalar>&);
extern template bool check_symmetric(const Matrix<ApproxScalar>&);
extern template bool check_core_pattern(const Matrix<ExactScalar>&);
extern template bool check_core_pattern(const Matrix<ApproxScalar>&);
extern template StructureReport<ExactScalar> check_structure(const Matrix<ExactScalar>&);
extern template StructureReport<ApproxScalar> check_structure(const Matrix<ApproxScalar>&);

}  // namespace mpoly
