#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpoly/io.hpp"

namespace py = pybind11;
using namespace mpoly;
using nlohmann::json;

namespace {

Composition to_composition(const std::vector<int>& parts, std::size_t q, const char* what) {
  if (parts.size() != q) {
    throw DomainError(std::string(what) + " has " + std::to_string(parts.size()) +
                      " parts, expected q = " + std::to_string(q));
  }
  return Composition(parts);
}

HypothesisPolicy policy(bool force) {
  return force ? HypothesisPolicy::force : HypothesisPolicy::enforce;
}

std::vector<std::vector<std::string>> entry_literals(const MatrixFile& file) {
  return std::visit(
      [](const auto& g) {
        std::vector<std::vector<std::string>> rows(g.q());
        for (std::size_t i = 0; i < g.q(); ++i)
          for (std::size_t j = 0; j < g.q(); ++j) rows[i].push_back(g(i, j).to_string());
        return rows;
      },
      file.matrix);
}

MatrixFile from_entries(const std::vector<std::vector<std::string>>& entries,
                        std::optional<long long> radicand, const std::string& mode,
                        double tolerance) {
  json doc = {{"q", entries.size()}, {"mode", mode}, {"entries", entries}};
  if (radicand) doc["radicand"] = *radicand;
  return parse_matrix_json(doc.dump(), tolerance);
}

template <class F>
std::string visit_json(const MatrixFile& file, F&& fn) {
  return std::visit([&](const auto& g) { return json(fn(g)).dump(); }, file.matrix);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact m-polynomials over generalized Hadamard matrices";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ContextMismatch>(m, "ContextMismatch", error.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
  m.attr("DEFAULT_CELL_BUDGET") = kDefaultCellBudget;

  py::class_<MatrixFile>(m, "Matrix")
      .def_property_readonly("q", &MatrixFile::q)
      .def_property_readonly("name", [](const MatrixFile& f) { return f.name; })
      .def_property_readonly("exact", [](const MatrixFile& f) { return f.mode == ScalarMode::exact; })
      .def_property_readonly("radicand",
                             [](const MatrixFile& f) -> std::optional<long long> {
                               if (f.radicand.is_none()) return std::nullopt;
                               return f.radicand.value();
                             })
      .def_property_readonly("entries", &entry_literals)
      .def_property_readonly("fingerprint",
                             [](const MatrixFile& f) {
                               return std::visit([](const auto& g) { return fingerprint(g); }, f.matrix);
                             })
      .def("__repr__", [](const MatrixFile& f) {
        return "<mpoly.Matrix q=" + std::to_string(f.q()) +
               (f.mode == ScalarMode::exact ? " exact" : " float") + ">";
      });

  m.def("parse_matrix", &parse_matrix_json, py::arg("text"),
        py::arg("tolerance") = kDefaultTolerance, "Matrix from a JSON document.");
  m.def("load_matrix",
        [](const std::string& path, double tol) { return load_matrix_file(path, tol); },
        py::arg("path"), py::arg("tolerance") = kDefaultTolerance, "Matrix from a JSON file.");
  m.def("matrix", &from_entries, py::arg("entries"), py::arg("radicand") = py::none(),
        py::arg("mode") = "exact", py::arg("tolerance") = kDefaultTolerance,
        "Matrix from rows of scalar literals.");

  m.def("compositions", [](int n, std::size_t q) {
    std::vector<std::vector<int>> out;
    for (const auto& c : enumerate_compositions(n, q)) out.emplace_back(c.parts().begin(), c.parts().end());
    return out;
  }, py::arg("n"), py::arg("q"), "V(n,q) in canonical order.");

  m.def("mg", [](const MatrixFile& file, const std::vector<int>& p, const std::vector<int>& s) {
    return std::visit([&](const auto& g) {
      return mg_direct(g, to_composition(p, g.q(), "p"), to_composition(s, g.q(), "s")).to_string();
    }, file.matrix);
  }, py::arg("matrix"), py::arg("p"), py::arg("s"), "MG(p;s) as a literal.");

  m.def("generator", [](const MatrixFile& file, const std::vector<int>& s) {
    return std::visit([&](const auto& g) {
      py::dict out;
      for (const auto& [p, v] : mg_generator(g, to_composition(s, g.q(), "s"))) {
        py::tuple key(p.q());
        for (std::size_t j = 0; j < p.q(); ++j) key[j] = p[j];
        out[key] = v.to_string();
      }
      return out;
    }, file.matrix);
  }, py::arg("matrix"), py::arg("s"), "MG(p;s) for every p, keyed by the tuple p.");

  m.def("table_json", [](const MatrixFile& file, int n, unsigned long long budget, bool transposed) {
    return visit_json(file, [&](const auto& g) { return to_json(mg_table(g, n, budget), transposed); });
  }, py::arg("matrix"), py::arg("n"), py::arg("budget") = kDefaultCellBudget,
     py::arg("transposed") = false);

  m.def("check_json", [](const MatrixFile& file) {
    return visit_json(file, [](const auto& g) { return to_json(check_structure(g)); });
  }, py::arg("matrix"));

  m.def("verify_json", [](const MatrixFile& file, int n, const std::string& variant, bool force,
                          unsigned long long budget) {
    const OrthogonalityVariant v = parse_orthogonality_variant(variant);
    return visit_json(file, [&](const auto& g) {
      return to_json(verify_orthogonality(g, mg_table(g, n, budget), v, policy(force)));
    });
  }, py::arg("matrix"), py::arg("n"), py::arg("variant") = "basic", py::arg("force") = false,
     py::arg("budget") = kDefaultCellBudget);

  m.def("expand_json", [](const MatrixFile& file, int n, const std::map<std::vector<int>, std::string>& values,
                          const std::string& side, std::optional<std::string> variant, bool force,
                          unsigned long long budget) {
    const ExpansionSide sd = parse_expansion_side(side);
    std::optional<ExpansionVariant> var;
    if (variant) var = parse_expansion_variant(*variant);
    return visit_json(file, [&](const auto& g) {
      using S = std::decay_t<decltype(g(0, 0))>;
      std::vector<std::pair<Composition, S>> pairs;
      for (const auto& [x, literal] : values) {
        pairs.emplace_back(to_composition(x, g.q(), "grid point"), parse_literal(literal, g(0, 0)));
      }
      const auto f = GridFunction<S>::from_pairs(n, g.q(), pairs);
      return to_json(expand(g, mg_table(g, n, budget), f, sd, var, policy(force)));
    });
  }, py::arg("matrix"), py::arg("n"), py::arg("values"), py::arg("side") = "alpha",
     py::arg("variant") = py::none(), py::arg("force") = false,
     py::arg("budget") = kDefaultCellBudget);

  m.def("expand_monomial_json", [](const MatrixFile& file, int n, const std::vector<int>& exponents,
                                   const std::string& side, std::optional<std::string> variant,
                                   bool force, unsigned long long budget) {
    const ExpansionSide sd = parse_expansion_side(side);
    std::optional<ExpansionVariant> var;
    if (variant) var = parse_expansion_variant(*variant);
    return visit_json(file, [&](const auto& g) {
      using S = std::decay_t<decltype(g(0, 0))>;
      const auto f = GridFunction<S>::monomial(n, g.q(), exponents, g.constant(1));
      return to_json(expand(g, mg_table(g, n, budget), f, sd, var, policy(force)));
    });
  }, py::arg("matrix"), py::arg("n"), py::arg("exponents"), py::arg("side") = "alpha",
     py::arg("variant") = py::none(), py::arg("force") = false,
     py::arg("budget") = kDefaultCellBudget);

  m.def("fit_json", [](const MatrixFile& file, int n, const std::vector<int>& fixed,
                       const std::string& side) {
    const FitSide sd = parse_fit_side(side);
    return visit_json(file, [&](const auto& g) {
      return to_json(fit_univariate(g, n, to_composition(fixed, g.q(), "fixed"), sd));
    });
  }, py::arg("matrix"), py::arg("n"), py::arg("fixed"), py::arg("side") = "s");

  m.def("multiplication_json", [](const MatrixFile& a, const MatrixFile& b, int n, bool reversed) {
    if (a.mode != b.mode) throw ContextMismatch("matrices use different scalar modes");
    const ProductOrder order = reversed ? ProductOrder::reversed : ProductOrder::as_stated;
    return std::visit([&](const auto& g1) {
      using M = std::decay_t<decltype(g1)>;
      return to_json(verify_multiplication(g1, std::get<M>(b.matrix), n, order)).dump();
    }, a.matrix);
  }, py::arg("g1"), py::arg("g2"), py::arg("n"), py::arg("reversed") = false);
}
