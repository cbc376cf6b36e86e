#include "mpoly/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mpoly {

using nlohmann::json;

std::size_t MatrixFile::q() const {
  return std::visit([](const auto& g) { return g.q(); }, matrix);
}

namespace {

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw DomainError(std::string("matrix file: missing field '") + key + "'");
  return *it;
}

template <Scalar S, class Parse>
Matrix<S> read_entries(const json& entries, std::size_t q, Parse&& parse) {
  if (!entries.is_array() || entries.size() != q) {
    throw DomainError("matrix file: 'entries' must be an array of " + std::to_string(q) + " rows");
  }
  std::vector<S> flat;
  flat.reserve(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != q) {
      throw DomainError("matrix file: row " + std::to_string(i) + " must have " +
                        std::to_string(q) + " entries");
    }
    for (std::size_t j = 0; j < q; ++j) {
      if (!row[j].is_string()) {
        throw DomainError("matrix file: entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") must be a string literal");
      }
      try {
        flat.push_back(parse(row[j].get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError("matrix file: entry (" + std::to_string(i) + "," + std::to_string(j) +
                             "): " + e.what(),
                         e.position());
      }
    }
  }
  return Matrix<S>(q, std::move(flat));
}

}  // namespace

MatrixFile parse_matrix_json(std::string_view text, double tolerance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix file: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw DomainError("matrix file: top level must be an object");

  struct {
    std::optional<std::string> name;
    ScalarMode mode = ScalarMode::exact;
    Radicand radicand;
  } file;
  if (auto it = doc.find("name"); it != doc.end() && !it->is_null()) {
    file.name = it->get<std::string>();
  }

  const json& q_field = require_field(doc, "q");
  if (!q_field.is_number_integer() || q_field.get<long long>() < 2) {
    throw DomainError("matrix file: 'q' must be an integer >= 2");
  }
  const auto q = static_cast<std::size_t>(q_field.get<long long>());

  std::string mode = "exact";
  if (auto it = doc.find("mode"); it != doc.end()) mode = it->get<std::string>();
  if (mode == "exact") {
    file.mode = ScalarMode::exact;
  } else if (mode == "float") {
    file.mode = ScalarMode::approx;
  } else {
    throw DomainError("matrix file: 'mode' must be \"exact\" or \"float\", got \"" + mode + "\"");
  }

  if (auto it = doc.find("radicand"); it != doc.end() && !it->is_null()) {
    if (file.mode == ScalarMode::approx) {
      throw DomainError("matrix file: 'radicand' is only meaningful in exact mode");
    }
    if (!it->is_number_integer()) throw DomainError("matrix file: 'radicand' must be an integer");
    file.radicand = Radicand::of(it->get<std::int64_t>());
  }

  const json& entries = require_field(doc, "entries");
  const Radicand ctx = file.radicand;
  AnyMatrix matrix =
      file.mode == ScalarMode::exact
          ? AnyMatrix(read_entries<ExactScalar>(
                entries, q, [ctx](const std::string& s) { return parse_scalar(s, ctx); }))
          : AnyMatrix(read_entries<ApproxScalar>(entries, q, [tolerance](const std::string& s) {
              return parse_approx_scalar(s, tolerance);
            }));
  return MatrixFile{file.name, file.mode, file.radicand, tolerance, std::move(matrix)};
}

MatrixFile load_matrix_file(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open matrix file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_json(buffer.str(), tolerance);
}

ExactScalar parse_literal(std::string_view text, const ExactScalar& like) {
  return parse_scalar(text, like.context());
}

ApproxScalar parse_literal(std::string_view text, const ApproxScalar& like) {
  return parse_approx_scalar(text, like.tolerance());
}

Composition parse_composition(std::string_view text, std::size_t q, int n) {
  const std::string expectation =
      "expected " + std::to_string(q) + " comma-separated nonnegative integers summing to " +
      std::to_string(n);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
      throw DomainError("bad composition '" + std::string(text) + "': " + expectation);
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != q) {
    throw DomainError("composition '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                      " parts: " + expectation);
  }
  Composition c(std::move(parts));
  if (c.n() != n) {
    throw DomainError("composition '" + std::string(text) + "' sums to " + std::to_string(c.n()) +
                      ": " + expectation);
  }
  return c;
}

template <Scalar S>
GridFunction<S> parse_values_json(std::string_view text, int n, const Matrix<S>& g) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("values file: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw DomainError("values file: top level must be an array");
  std::vector<std::pair<Composition, S>> pairs;
  for (const json& item : doc) {
    if (!item.is_object() || !item.contains("composition") || !item.contains("value")) {
      throw DomainError("values file: each item needs 'composition' and 'value'");
    }
    const json& value = item["value"];
    if (!value.is_string()) throw DomainError("values file: 'value' must be a string literal");
    auto parts = item["composition"].get<std::vector<int>>();
    if (parts.size() != g.q()) {
      throw DomainError("values file: composition of length " + std::to_string(parts.size()) +
                        ", expected q = " + std::to_string(g.q()));
    }
    pairs.emplace_back(Composition(std::move(parts)),
                       parse_literal(value.get<std::string>(), g(0, 0)));
  }
  return GridFunction<S>::from_pairs(n, g.q(), pairs);
}

json composition_json(const Composition& c) {
  return json(std::vector<int>(c.parts().begin(), c.parts().end()));
}

namespace {

json order_json(const CanonicalOrder& order) {
  json out = json::array();
  for (const Composition& c : order) out.push_back(composition_json(c));
  return out;
}

template <Scalar S>
json scalar_list(const std::vector<S>& values) {
  json out = json::array();
  for (const S& v : values) out.push_back(v.to_string());
  return out;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

template <Scalar S>
json to_json(const MTable<S>& table, bool transposed) {
  json values = json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < table.size(); ++c) {
      row.push_back((transposed ? table.at(c, r) : table.at(r, c)).to_string());
    }
    values.push_back(std::move(row));
  }
  return {{"n", table.n()},
          {"q", table.q()},
          {"rows", transposed ? "s" : "p"},
          {"columns", transposed ? "p" : "s"},
          {"order", order_json(table.order())},
          {"values", std::move(values)},
          {"fingerprint", hex(table.matrix_fingerprint())}};
}

template <Scalar S>
json to_json(const StructureReport<S>& report) {
  json out = json::object();
  if (report.is_hadamard) out["hadamard"] = *report.is_hadamard;
  if (report.is_symmetric) out["symmetric"] = *report.is_symmetric;
  if (report.is_core_pattern) out["core_pattern"] = *report.is_core_pattern;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"predicate", std::string(to_string(w.predicate))},
                         {"i", w.i},
                         {"j", w.j},
                         {"found", w.found.to_string()},
                         {"expected", w.expected.to_string()}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

template <Scalar S>
json to_json(const OrthogonalityReport<S>& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"p", composition_json(v.p)},
                          {"t", composition_json(v.t)},
                          {"computed", v.computed.to_string()},
                          {"expected", v.expected.to_string()}});
  }
  json out = {{"variant", std::string(to_string(report.variant))},
              {"n", report.n},
              {"pairs_checked", report.pairs_checked},
              {"hypothesis_holds", report.hypothesis_holds},
              {"pass", report.holds()},
              {"violations", std::move(violations)}};
  if (report.max_abs_deviation) out["max_abs_deviation"] = *report.max_abs_deviation;
  return out;
}

template <Scalar S>
json to_json(const ExpansionResult<S>& result) {
  return {{"side", std::string(to_string(result.side))},
          {"variant", std::string(to_string(result.variant))},
          {"n", result.order.n()},
          {"q", result.order.q()},
          {"order", order_json(result.order)},
          {"coefficients", scalar_list(result.coefficients)},
          {"round_trip", result.round_trip_ok},
          {"hypothesis_holds", result.hypothesis_holds}};
}

template <Scalar S>
json to_json(const UnivariateFit<S>& fit) {
  return {{"side", std::string(to_string(fit.side))},
          {"fixed", composition_json(fit.fixed)},
          {"variable", "u = x0 - x1"},
          {"coefficients", scalar_list(fit.coefficients)}};
}

template <Scalar S>
json to_json(const MultiplicationReport<S>& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"p", composition_json(v.p)},
                          {"t", composition_json(v.t)},
                          {"lhs", v.lhs.to_string()},
                          {"rhs", v.rhs.to_string()}});
  }
  return {{"n", report.n},
          {"product", report.product_order == ProductOrder::as_stated ? "G1 G2" : "G2 G1"},
          {"pairs_checked", report.pairs_checked},
          {"pass", report.holds()},
          {"violations", std::move(violations)}};
}

#define MPOLY_INSTANTIATE_IO(S)                                                      \
  template GridFunction<S> parse_values_json(std::string_view, int, const Matrix<S>&); \
  template json to_json(const MTable<S>&, bool);                                     \
  template json to_json(const StructureReport<S>&);                                  \
  template json to_json(const OrthogonalityReport<S>&);                              \
  template json to_json(const ExpansionResult<S>&);                                  \
  template json to_json(const UnivariateFit<S>&);                                    \
  template json to_json(const MultiplicationReport<S>&);

MPOLY_INSTANTIATE_IO(ExactScalar)
MPOLY_INSTANTIATE_IO(ApproxScalar)

}  // namespace mpoly
