#include <gtest/gtest.h>

#include "mpoly/io.hpp"
#include "test_support.hpp"

using namespace mpoly;
using namespace mpoly::testing;

TEST(ParseMatrixJson, ExactWithRadicand) {
  const auto file = parse_matrix_json(R"({
    "name": "core3", "q": 3, "mode": "exact", "radicand": 3,
    "entries": [["1", "1", "1"],
                ["-1", "1/2-1/2*r", "1/2+1/2*r"],
                ["-1", "1/2+1/2*r", "1/2-1/2*r"]]})");
  EXPECT_EQ(file.name, "core3");
  EXPECT_EQ(file.q(), 3u);
  EXPECT_EQ(file.mode, ScalarMode::exact);
  EXPECT_EQ(std::get<Matrix<ExactScalar>>(file.matrix), core3());
}

TEST(ParseMatrixJson, FloatMode) {
  const auto file = parse_matrix_json(
      R"({"q": 2, "mode": "float", "entries": [["1", "0,1"], ["1", "0,-1"]]})", 1e-6);
  const auto& g = std::get<Matrix<ApproxScalar>>(file.matrix);
  EXPECT_EQ(g(0, 1).imag(), 1.0);
  EXPECT_EQ(g(1, 1).tolerance(), 1e-6);
}

TEST(ParseMatrixJson, Errors) {
  EXPECT_THROW(parse_matrix_json("{"), ParseError);
  EXPECT_THROW(parse_matrix_json(R"({"q": 1, "entries": [["1"]]})"), DomainError);
  EXPECT_THROW(parse_matrix_json(R"({"entries": [["1"]]})"), DomainError);
  EXPECT_THROW(parse_matrix_json(R"({"q": 2, "entries": [["1", "1"]]})"), DomainError);
  EXPECT_THROW(parse_matrix_json(R"({"q": 2, "entries": [["1", "1"], ["1", 1]]})"), DomainError);
  EXPECT_THROW(parse_matrix_json(R"({"q": 2, "entries": [["1", "r"], ["1", "1"]]})"), ParseError);
  EXPECT_THROW(parse_matrix_json(R"({"q": 2, "radicand": 4, "entries": [["1", "r"], ["1", "1"]]})"),
               DomainError);
  EXPECT_THROW(parse_matrix_json(R"({"q": 2, "mode": "real", "entries": [["1", "1"], ["1", "1"]]})"),
               DomainError);
  EXPECT_THROW(
      parse_matrix_json(R"({"q": 2, "mode": "float", "radicand": 3, "entries": [["1", "1"], ["1", "1"]]})"),
      DomainError);
}

TEST(ParseComposition, Validation) {
  EXPECT_EQ(parse_composition("2,4", 2, 6), Composition({2, 4}));
  EXPECT_EQ(parse_composition(" 1, 0 ,0", 3, 1), Composition({1, 0, 0}));
  try {
    parse_composition("2,3", 2, 6);
    FAIL();
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("summing to 6"), std::string::npos) << msg;
    EXPECT_NE(msg.find("2 comma-separated"), std::string::npos) << msg;
  }
  EXPECT_THROW(parse_composition("1,2,3", 2, 6), DomainError);
  EXPECT_THROW(parse_composition("a,6", 2, 6), DomainError);
  EXPECT_THROW(parse_composition("-1,7", 2, 6), DomainError);
  EXPECT_THROW(parse_composition("", 2, 0), DomainError);
}

TEST(ParseValuesJson, CoverageChecked) {
  const auto g = symmetric2();
  const auto f = parse_values_json<ExactScalar>(
      R"([{"composition": [0, 2], "value": "0"}, {"composition": [1, 1], "value": "1/2"},
          {"composition": [2, 0], "value": "-3"}])",
      2, g);
  EXPECT_EQ(f(Composition({1, 1})), ExactScalar(mpq_class(1, 2)));
  EXPECT_THROW(parse_values_json<ExactScalar>(R"([{"composition": [0, 2], "value": "0"}])", 2, g),
               DomainError);
  EXPECT_THROW(parse_values_json<ExactScalar>(R"([{"composition": [0, 2, 0], "value": "0"}])", 2, g),
               DomainError);
  EXPECT_THROW(parse_values_json<ExactScalar>(R"([{"composition": [0, 2], "value": "x"}])", 2, g),
               ParseError);
}

TEST(ToJson, TableRoundTrip) {
  const auto t = mg_table(core3(), 2);
  const auto doc = to_json(t);
  EXPECT_EQ(doc["rows"], "p");
  EXPECT_EQ(doc["order"].size(), t.size());
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t.size(); ++c)
      EXPECT_EQ(parse_scalar(doc["values"][r][c].get<std::string>(), sqrt3()), t.at(r, c));
  const auto tr = to_json(t, true);
  EXPECT_EQ(tr["values"][0][1], doc["values"][1][0]);
  EXPECT_EQ(tr["rows"], "s");
}

TEST(ToJson, Reports) {
  const auto structure = to_json(check_structure(all_ones(2)));
  EXPECT_FALSE(structure["hadamard"].get<bool>());
  EXPECT_FALSE(structure["witnesses"].empty());
  const auto ortho = to_json(verify_basic(symmetric2(), 2));
  EXPECT_TRUE(ortho["pass"].get<bool>());
  EXPECT_EQ(ortho["pairs_checked"], 9);
  const auto fit = to_json(fit_univariate(symmetric2(), 6, Composition({5, 1}), FitSide::vary_s));
  EXPECT_EQ(fit["coefficients"], nlohmann::json({"0", "1"}));
}
