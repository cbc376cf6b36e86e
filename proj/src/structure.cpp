#include "mpoly/structure.hpp"

namespace mpoly {

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::hadamard:
      return "hadamard";
    case Predicate::symmetric:
      return "symmetric";
    case Predicate::core_pattern:
      return "core-pattern";
  }
  return "?";
}

namespace {

template <Scalar S>
bool hadamard_into(const Matrix<S>& g, std::vector<Witness<S>>& witnesses) {
  const std::size_t q = g.q();
  const S order = g.constant(static_cast<long>(q));
  bool holds = true;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t k = i; k < q; ++k) {
      S inner = g.constant(0);
      for (std::size_t j = 0; j < q; ++j) inner = inner + g(i, j) * g(k, j).conj();
      const S expected = i == k ? order : g.constant(0);
      if (!(inner == expected)) {
        holds = false;
        witnesses.push_back({Predicate::hadamard, i, k, inner, expected});
      }
    }
  }
  return holds;
}

template <Scalar S>
bool symmetric_into(const Matrix<S>& g, std::size_t first, Predicate tag,
                    std::vector<Witness<S>>* witnesses) {
  bool holds = true;
  for (std::size_t i = first; i < g.q(); ++i) {
    for (std::size_t j = i + 1; j < g.q(); ++j) {
      if (!(g(i, j) == g(j, i))) {
        holds = false;
        if (!witnesses) return false;
        witnesses->push_back({tag, i, j, g(i, j), g(j, i)});
      }
    }
  }
  return holds;
}

template <Scalar S>
bool core_into(const Matrix<S>& g, std::vector<Witness<S>>* witnesses) {
  const S one = g.constant(1);
  const S minus_one = g.constant(-1);
  bool holds = true;
  for (std::size_t j = 0; j < g.q(); ++j) {
    if (!(g(0, j) == one)) {
      holds = false;
      if (!witnesses) return false;
      witnesses->push_back({Predicate::core_pattern, 0, j, g(0, j), one});
    }
  }
  for (std::size_t i = 1; i < g.q(); ++i) {
    if (!(g(i, 0) == minus_one)) {
      holds = false;
      if (!witnesses) return false;
      witnesses->push_back({Predicate::core_pattern, i, 0, g(i, 0), minus_one});
    }
  }
  return symmetric_into(g, 1, Predicate::core_pattern, witnesses) && holds;
}

}  // namespace

template <Scalar S>
StructureReport<S> check_hadamard(const Matrix<S>& g) {
  StructureReport<S> report;
  report.is_hadamard = hadamard_into(g, report.witnesses);
  return report;
}

template <Scalar S>
bool check_symmetric(const Matrix<S>& g) {
  return symmetric_into<S>(g, 0, Predicate::symmetric, nullptr);
}

template <Scalar S>
bool check_core_pattern(const Matrix<S>& g) {
  return core_into<S>(g, nullptr);
}

template <Scalar S>
StructureReport<S> check_structure(const Matrix<S>& g) {
  StructureReport<S> report;
  report.is_hadamard = hadamard_into(g, report.witnesses);
  report.is_symmetric = symmetric_into(g, 0, Predicate::symmetric, &report.witnesses);
  report.is_core_pattern = core_into(g, &report.witnesses);
  return report;
}

template StructureReport<ExactScalar> check_hadamard(const Matrix<ExactScalar>&);
template StructureReport<ApproxScalar> check_hadamard(const Matrix<ApproxScalar>&);
template bool check_symmetric(const Matrix<ExactScalar>&);
template bool check_symmetric(const Matrix<ApproxScalar>&);
template bool check_core_pattern(const Matrix<ExactScalar>&);
template bool check_core_pattern(const Matrix<ApproxScalar>&);
template StructureReport<ExactScalar> check_structure(const Matrix<ExactScalar>&);
template StructureReport<ApproxScalar> check_structure(const Matrix<ApproxScalar>&);

}  // namespace mpoly
