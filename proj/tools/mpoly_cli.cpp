#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpoly/io.hpp"

namespace {

using namespace mpoly;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

enum class Format { pretty, csv, json };

struct RunConfig {
  std::string matrix_path;
  int n = 0;
  Format format = Format::pretty;
  unsigned long long budget = kDefaultCellBudget;
  double tolerance = kDefaultTolerance;
  bool force_hypothesis = false;

  HypothesisPolicy policy() const {
    return force_hypothesis ? HypothesisPolicy::force : HypothesisPolicy::enforce;
  }
};

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <Scalar S>
constexpr const char* list_separator() {
  // approximate literals contain a comma of their own
  return is_exact_v<S> ? ", " : "; ";
}

/// Right-aligned grid; the first row and column are labels.
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c) out << ',';
      // labels are always quoted, values only when they contain a comma
      const bool label = r == 0 || c == 0;
      out << (label ? quoted(cells[r][c]) : csv_field(cells[r][c]));
    }
    out << '\n';
  }
}

template <Scalar S>
int cmd_eval(const Matrix<S>& g, const RunConfig& cfg, const std::string& p_text,
             const std::string& s_text) {
  const Composition p = parse_composition(p_text, g.q(), cfg.n);
  const Composition s = parse_composition(s_text, g.q(), cfg.n);
  const S value = mg_direct(g, p, s);
  switch (cfg.format) {
    case Format::json:
      std::cout << json{{"p", composition_json(p)},
                        {"s", composition_json(s)},
                        {"value", value.to_string()}}
                       .dump(2)
                << '\n';
      break;
    case Format::csv:
      std::cout << "\"p\",\"s\",\"value\"\n"
                << quoted(p.to_string()) << ',' << quoted(s.to_string()) << ','
                << csv_field(value.to_string()) << '\n';
      break;
    case Format::pretty:
      std::cout << value.to_string() << '\n';
      break;
  }
  return kOk;
}

template <Scalar S>
int cmd_table(const Matrix<S>& g, const RunConfig& cfg, bool transposed) {
  const MTable<S> table = mg_table(g, cfg.n, cfg.budget);
  if (cfg.format == Format::json) {
    std::cout << to_json(table, transposed).dump(2) << '\n';
    return kOk;
  }
  const CanonicalOrder& order = table.order();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{transposed ? "s\\p" : "p\\s"};
  for (const Composition& c : order) header.push_back(c.to_string());
  cells.push_back(std::move(header));
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::vector<std::string> row{order[r].to_string()};
    for (std::size_t c = 0; c < table.size(); ++c) {
      row.push_back((transposed ? table.at(c, r) : table.at(r, c)).to_string());
    }
    cells.push_back(std::move(row));
  }
  if (cfg.format == Format::csv) {
    print_csv(std::cout, cells);
  } else {
    print_grid(std::cout, cells);
  }
  return kOk;
}

template <Scalar S>
int cmd_check(const Matrix<S>& g, const RunConfig& cfg, const std::vector<std::string>& require) {
  const StructureReport<S> report = check_structure(g);
  bool ok = true;
  for (const std::string& name : require) {
    if (name == "hadamard") ok = ok && *report.is_hadamard;
    else if (name == "symmetric") ok = ok && *report.is_symmetric;
    else if (name == "core-pattern") ok = ok && *report.is_core_pattern;
  }
  switch (cfg.format) {
    case Format::json: {
      json doc = to_json(report);
      doc["required"] = require;
      doc["pass"] = ok;
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "\"predicate\",\"holds\"\n"
                << "\"hadamard\"," << std::boolalpha << *report.is_hadamard << '\n'
                << "\"symmetric\"," << *report.is_symmetric << '\n'
                << "\"core-pattern\"," << *report.is_core_pattern << '\n';
      break;
    case Format::pretty:
      std::cout << std::boolalpha << "hadamard: " << *report.is_hadamard << '\n'
                << "symmetric: " << *report.is_symmetric << '\n'
                << "core-pattern: " << *report.is_core_pattern << '\n';
      for (const auto& w : report.witnesses) {
        std::cout << "  witness " << to_string(w.predicate) << " (" << w.i << "," << w.j
                  << "): found " << w.found.to_string() << ", expected "
                  << w.expected.to_string() << '\n';
      }
      std::cout << (ok ? "PASS" : "FAIL") << '\n';
      break;
  }
  return ok ? kOk : kFail;
}

template <Scalar S>
int cmd_verify(const Matrix<S>& g, const RunConfig& cfg, const std::string& variant_name) {
  const OrthogonalityVariant variant = parse_orthogonality_variant(variant_name);
  const MTable<S> table = mg_table(g, cfg.n, cfg.budget);
  const OrthogonalityReport<S> report = verify_orthogonality(g, table, variant, cfg.policy());
  switch (cfg.format) {
    case Format::json:
      std::cout << to_json(report).dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << "\"p\",\"t\",\"computed\",\"expected\"\n";
      for (const auto& v : report.violations) {
        std::cout << quoted(v.p.to_string()) << ',' << quoted(v.t.to_string()) << ','
                  << csv_field(v.computed.to_string()) << ','
                  << csv_field(v.expected.to_string()) << '\n';
      }
      break;
    case Format::pretty:
      if (!report.hypothesis_holds) {
        std::cout << "warning: hypothesis of the " << to_string(variant)
                  << " relation does not hold (forced run)\n";
      }
      std::cout << (report.holds() ? "PASS" : "FAIL") << ' ' << to_string(variant)
                << " n=" << report.n << ": " << report.pairs_checked << " pairs checked, "
                << report.violations.size() << " violations";
      if (report.max_abs_deviation) std::cout << ", max deviation " << *report.max_abs_deviation;
      std::cout << '\n';
      for (const auto& v : report.violations) {
        std::cout << "  p=" << v.p.to_string() << " t=" << v.t.to_string() << ": got "
                  << v.computed.to_string() << ", expected " << v.expected.to_string() << '\n';
      }
      break;
  }
  return report.holds() ? kOk : kFail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open values file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_exponents(const std::string& text, std::size_t q) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      const int e = std::stoi(field, &used);
      if (used != field.size() || e < 0) throw std::invalid_argument(field);
      out.push_back(e);
    } catch (const std::logic_error&) {
      throw DomainError("bad monomial exponent '" + field + "'");
    }
  }
  if (out.size() != q) {
    throw DomainError("monomial needs " + std::to_string(q) + " comma-separated exponents, got " +
                      std::to_string(out.size()));
  }
  return out;
}

template <Scalar S>
int cmd_expand(const Matrix<S>& g, const RunConfig& cfg, const std::string& monomial,
               const std::string& values_path, const std::string& side_name,
               const std::string& variant_name) {
  const ExpansionSide side = parse_expansion_side(side_name);
  std::optional<ExpansionVariant> variant;
  if (!variant_name.empty()) variant = parse_expansion_variant(variant_name);

  const MTable<S> table = mg_table(g, cfg.n, cfg.budget);
  const GridFunction<S> f =
      values_path.empty()
          ? GridFunction<S>::monomial(cfg.n, g.q(), parse_exponents(monomial, g.q()), g.constant(1))
          : parse_values_json(read_file(values_path), cfg.n, g);
  const ExpansionResult<S> result = expand(g, table, f, side, variant, cfg.policy());

  switch (cfg.format) {
    case Format::json:
      std::cout << to_json(result).dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << "\"composition\",\"coefficient\"\n";
      for (std::size_t i = 0; i < result.coefficients.size(); ++i) {
        std::cout << quoted(result.order[i].to_string()) << ','
                  << csv_field(result.coefficients[i].to_string()) << '\n';
      }
      break;
    case Format::pretty: {
      std::cout << to_string(side) << " (" << to_string(result.variant) << "): ";
      for (std::size_t i = 0; i < result.coefficients.size(); ++i) {
        if (i) std::cout << list_separator<S>();
        std::cout << result.coefficients[i].to_string();
      }
      std::cout << '\n';
      if (!result.hypothesis_holds) std::cout << "warning: hypothesis does not hold (forced run)\n";
      std::cout << "round trip: " << (result.round_trip_ok ? "ok" : "FAILED") << '\n';
      break;
    }
  }
  return result.round_trip_ok ? kOk : kFail;
}

template <Scalar S>
int cmd_fit(const Matrix<S>& g, const RunConfig& cfg, const std::string& fixed_text,
            const std::string& side_name) {
  if (g.q() != 2) throw DomainError("fit needs q = 2, got q = " + std::to_string(g.q()));
  const Composition fixed = parse_composition(fixed_text, g.q(), cfg.n);
  const UnivariateFit<S> fit = fit_univariate(g, cfg.n, fixed, parse_fit_side(side_name));
  switch (cfg.format) {
    case Format::json:
      std::cout << to_json(fit).dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << "\"degree\",\"coefficient\"\n";
      for (std::size_t k = 0; k < fit.coefficients.size(); ++k) {
        std::cout << k << ',' << csv_field(fit.coefficients[k].to_string()) << '\n';
      }
      break;
    case Format::pretty:
      for (std::size_t k = 0; k < fit.coefficients.size(); ++k) {
        if (k) std::cout << list_separator<S>();
        std::cout << fit.coefficients[k].to_string();
      }
      std::cout << '\n';
      break;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact m-polynomials over generalized Hadamard matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--matrix", cfg.matrix_path, "Matrix file (JSON)")->check(CLI::ExistingFile);
  app.add_option("-n", cfg.n, "Degree n, the common sum of compositions")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}},
          CLI::ignore_case));
  app.add_option("--budget", cfg.budget, "Largest table (cells) to build")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tolerance, "Absolute tolerance in float mode")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force-hypothesis", cfg.force_hypothesis,
               "Run theorem checks even when their hypotheses fail");

  std::string p_text, s_text;
  auto* eval = app.add_subcommand("eval", "MG(p;s) for one pair");
  eval->add_option("-p", p_text, "Composition p, e.g. 2,4")->required();
  eval->add_option("-s", s_text, "Composition s, e.g. 3,3")->required();

  bool transposed = false;
  auto* table = app.add_subcommand("table", "Full MG table, rows p and columns s");
  table->add_flag("--transposed", transposed, "Rows s and columns p, i.e. MG(s;p)");

  std::vector<std::string> require{"hadamard"};
  auto* check = app.add_subcommand("check", "Structural predicates of the matrix");
  check->add_option("--require", require, "Predicates that must hold")
      ->check(CLI::IsMember({"hadamard", "symmetric", "core-pattern"}))
      ->delimiter(',');

  std::string ortho_variant = "basic";
  auto* verify = app.add_subcommand("verify", "Orthogonality relations over all of V(n,q)");
  verify->add_option("--variant", ortho_variant, "basic, symmetric or core")
      ->check(CLI::IsMember({"basic", "symmetric", "core"}));

  std::string monomial, values_path, expand_side = "alpha", expand_variant;
  auto* expand_cmd = app.add_subcommand("expand", "Expansion coefficients of a grid function");
  auto* mono_opt = expand_cmd->add_option("--monomial", monomial, "Exponents e0,...,e(q-1)");
  auto* values_opt = expand_cmd->add_option("--values", values_path, "Values file (JSON)")
                         ->check(CLI::ExistingFile);
  mono_opt->excludes(values_opt);
  expand_cmd->add_option("--side", expand_side, "alpha or beta")
      ->check(CLI::IsMember({"alpha", "beta"}));
  expand_cmd->add_option("--variant", expand_variant, "symmetric or core")
      ->check(CLI::IsMember({"symmetric", "core"}));

  std::string fixed_text, fit_side = "s";
  auto* fit = app.add_subcommand("fit", "Univariate form in u = x0 - x1 (q = 2)");
  fit->add_option("--fixed", fixed_text, "The composition held fixed")->required();
  fit->add_option("--side", fit_side, "Varying argument: s (p fixed) or p (s fixed)")
      ->check(CLI::IsMember({"s", "p"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cfg.matrix_path.empty()) throw DomainError("--matrix is required");
    if (expand_cmd->parsed() && monomial.empty() && values_path.empty()) {
      throw DomainError("expand needs --monomial or --values");
    }
    const MatrixFile file = load_matrix_file(cfg.matrix_path, cfg.tolerance);
    return std::visit(
        [&](const auto& g) {
          if (eval->parsed()) return cmd_eval(g, cfg, p_text, s_text);
          if (table->parsed()) return cmd_table(g, cfg, transposed);
          if (check->parsed()) return cmd_check(g, cfg, require);
          if (verify->parsed()) return cmd_verify(g, cfg, ortho_variant);
          if (expand_cmd->parsed()) {
            return cmd_expand(g, cfg, monomial, values_path, expand_side, expand_variant);
          }
          return cmd_fit(g, cfg, fixed_text, fit_side);
        },
        file.matrix);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (required budget: " << e.required() << " cells)\n";
    return kBudget;
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
