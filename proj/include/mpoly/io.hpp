#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "mpoly/expansion.hpp"
#include "mpoly/mpoly.hpp"
#include "mpoly/orthogonality.hpp"
#include "mpoly/structure.hpp"

namespace mpoly {

enum class ScalarMode { exact, approx };

using AnyMatrix = std::variant<Matrix<ExactScalar>, Matrix<ApproxScalar>>;

/// Matrix file:
///   {"name": "...", "q": 2, "mode": "exact" | "float", "radicand": 3,
///    "entries": [["1", "1"], ["1", "-1"]]}
/// Entries are literals in the scalar grammar; in float mode "re" or "re,im".
struct MatrixFile {
  std::optional<std::string> name;
  ScalarMode mode = ScalarMode::exact;
  Radicand radicand;
  double tolerance = kDefaultTolerance;
  AnyMatrix matrix;

  std::size_t q() const;
};

/// Throws ParseError for malformed JSON or literals, DomainError for shape problems.
MatrixFile parse_matrix_json(std::string_view text, double tolerance = kDefaultTolerance);
MatrixFile load_matrix_file(const std::filesystem::path& path,
                            double tolerance = kDefaultTolerance);

/// Literal in the context of `like` (its radicand, or its tolerance).
ExactScalar parse_literal(std::string_view text, const ExactScalar& like);
ApproxScalar parse_literal(std::string_view text, const ApproxScalar& like);

/// "2,4" -> (2,4); DomainError reports the expected length q and sum n.
Composition parse_composition(std::string_view text, std::size_t q, int n);

/// Values file: [{"composition": [0, 6], "value": "0"}, ...] covering V(n,q) exactly.
template <Scalar S>
GridFunction<S> parse_values_json(std::string_view text, int n, const Matrix<S>& g);

nlohmann::json composition_json(const Composition& c);

template <Scalar S>
nlohmann::json to_json(const MTable<S>& table, bool transposed = false);
template <Scalar S>
nlohmann::json to_json(const StructureReport<S>& report);
template <Scalar S>
nlohmann::json to_json(const OrthogonalityReport<S>& report);
template <Scalar S>
nlohmann::json to_json(const ExpansionResult<S>& result);
template <Scalar S>
nlohmann::json to_json(const UnivariateFit<S>& fit);
template <Scalar S>
nlohmann::json to_json(const MultiplicationReport<S>& report);

}  // namespace mpoly
