#include <sstream>

#include <gtest/gtest.h>

#include "flatlie_cli.hpp"

using namespace flatlie;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kAffine = R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "1"]}],
                          "metric": [["0", "1"], ["1", "0"]]})";

}  // namespace

TEST(Document, ZeroDenominatorIsParseError) {
  EXPECT_THROW(parse_document(R"({"dim": 1, "metric": [["1/0"]]})"), ParseError);
}

TEST(Document, FloatsRejected) { EXPECT_THROW(parse_document(R"({"dim": 1, "metric": [[1.5]]})"), ParseError); }

TEST(Document, IndexErrors) {
  EXPECT_THROW(parse_document(R"({"dim": 2, "brackets": [{"i": 2, "j": 1, "coeffs": ["0","1"]}],
                                  "metric": [["1","0"],["0","1"]]})"),
               ParseError);
  EXPECT_THROW(parse_document(R"({"dim": 2, "brackets": [{"i": 1, "j": 3, "coeffs": ["0","1"]}],
                                  "metric": [["1","0"],["0","1"]]})"),
               ParseError);
  EXPECT_THROW(parse_document("{not json"), ParseError);
}

TEST(Document, NonSymmetricMetric) {
  EXPECT_THROW(parse_document(R"({"dim": 2, "metric": [["1","1"],["0","1"]]})"), NonSymmetric);
}

TEST(Document, RoundTripsCatalog) {
  for (const auto& e : catalog()) {
    const MetricLieAlgebra back = parse_document(to_document(e.metric).dump());
    EXPECT_EQ(back.algebra(), e.metric.algebra()) << e.name;
    EXPECT_EQ(back.gram(), e.metric.gram()) << e.name;
  }
}

TEST(Document, RationalEntriesRoundTrip) {
  const auto m = parse_document(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "-3/6"]}],
                                    "metric": [["2/4", "0"], ["0", "7"]]})");
  EXPECT_EQ(m.algebra().bracket_basis(0, 1), (Vector{0, Rational(-1, 2)}));
  const Json doc = to_document(m);
  EXPECT_EQ(doc["metric"][0][0], "1/2");
  EXPECT_EQ(doc["brackets"][0]["coeffs"][1], "-1/2");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"flat", "--example", "rot3"}).code, 0);
  EXPECT_EQ(run({"flat", "--example", "heisenberg_euclidean"}).code, 1);
  EXPECT_EQ(run({"theorem1", "--example", "rot3"}).code, 0);
  EXPECT_EQ(run({"theorem1", "--example", "boost3"}).code, 1);
  EXPECT_EQ(run({"theorem1", "--example", "rot3_euclidean"}).code, 2);
  EXPECT_EQ(run({"theorem2", "--example", "classc3_flat"}).code, 0);
  EXPECT_EQ(run({"theorem2", "--example", "classc2_nonflat"}).code, 1);
  EXPECT_EQ(run({"theorem2", "--example", "heisenberg_euclidean"}).code, 2);
  EXPECT_EQ(run({"companion", "--example", "rot3"}).code, 0);
  EXPECT_EQ(run({"companion", "--example", "boost3"}).code, 1);
  EXPECT_EQ(run({"analyze", "--example", "missing"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, StdinInput) {
  const auto r = run({"theorem2", "--json"}, kAffine);
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["theorem2"].is_object());
  EXPECT_TRUE(j.contains("witness"));
}

TEST(Cli, ParseErrorExitsTwo) {
  const auto r = run({"validate"}, R"({"dim": 1, "metric": [["1/0"]]})");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, JacobiViolationNamesTriple) {
  const auto r = run({"validate"}, R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "1", "0"]},
                                                             {"i": 2, "j": 3, "coeffs": ["0", "0", "1"]}],
                                      "metric": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("triple (1,2,3)"), std::string::npos) << r.err;
}

TEST(Cli, DegenerateGramRejected) {
  const auto r = run({"validate"}, R"({"dim": 2, "metric": [["1","0"],["0","0"]]})");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, AnalyzeDeterministic) {
  for (const auto& name : catalog_names()) {
    const auto a = run({"analyze", "--json", "--seed", "42", "--example", name});
    const auto b = run({"analyze", "--json", "--seed", "42", "--example", name});
    ASSERT_EQ(a.code, 0) << name << a.err;
    EXPECT_EQ(a.out, b.out) << name;
  }
}

TEST(Cli, TextAndJsonAgreeOnVerdicts) {
  const auto j = run({"flat", "--json", "--example", "heisenberg_euclidean"});
  const auto t = run({"flat", "--example", "heisenberg_euclidean"});
  EXPECT_EQ(j.code, t.code);
  EXPECT_FALSE(Json::parse(j.out)["flatness"]["flat"].get<bool>());
  EXPECT_NE(t.out.find("flat: false"), std::string::npos) << t.out;
}

TEST(Cli, GeodesicReport) {
  const auto r = run({"geodesic", "--json", "--example", "classc2_flat", "--v0", "1,0", "--t-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out)["geodesic"];
  EXPECT_EQ(j["outcome"], "blow_up_detected");
  EXPECT_NEAR(j["blowup_time"].get<double>(), 1.0, 1e-3);
  EXPECT_EQ(run({"geodesic", "--example", "rot3", "--t-max", "1"}).code, 2);
  EXPECT_EQ(run({"geodesic", "--example", "rot3", "--v0", "1,0", "--t-max", "1"}).code, 2);
}

TEST(Cli, CatalogListing) {
  const auto r = run({"catalog", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).size(), catalog().size());
  const auto show = run({"catalog", "show", "rot3"});
  ASSERT_EQ(show.code, 0);
  EXPECT_EQ(parse_document(show.out).gram(), catalog_entry("rot3").metric.gram());
}
