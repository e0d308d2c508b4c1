#include <gtest/gtest.h>

#include "chernloci/cli.hpp"

using namespace chernloci;
using chernloci::cli::json;

namespace {

const json kWorkedExample = json::parse(R"({"family":"C","k":[1,3,5,6,7,9],"p":[9,7,6,5,2,2],"q":[6,3,-2,-5,-7,-9]})");
const json kRemark = json::parse(R"({"family":"C","k":[2,3,5,6,7],"p":[7,4,3,3,2],"q":[4,4,-1,-7,-7]})");
const json kRemarkPrime = json::parse(R"({"family":"C","k":[2,3,4,5,7],"p":[7,4,4,3,2],"q":[4,4,-1,-1,-7]})");

}  // namespace

TEST(Cli, TripleWorkedExample) {
  auto r = cli::run("triple", kWorkedExample);
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  EXPECT_EQ(r.body["lambda"], json::parse("[14,10,9,5,5,4,1,1,1]"));
  EXPECT_EQ(r.body["rho"], json::parse("[0,1,2,3,3,1,0,0,0]"));
  EXPECT_EQ(r.body["a"], 3);
  EXPECT_EQ(r.body["r"], 3);
  EXPECT_FALSE(r.body.contains("inserted"));
}

TEST(Cli, TripleReportsInsertion) {
  auto r = cli::run("triple", kRemark);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.body["inserted"], json::parse("[3]"));
  EXPECT_EQ(r.body["q"], json::parse("[4,4,2,-1,-7,-7]"));
}

TEST(Cli, RejectedTripleNamesCondition) {
  auto r = cli::run("triple", kRemarkPrime);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.body["error"]["condition"], "condition (3)");
  EXPECT_EQ(r.body["error"]["kind"], "validation");
}

TEST(Cli, PermRemark) {
  auto r = cli::run("perm", kRemark);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.body["word"], json::parse("[8,3,-2,-6,1,7,-5,-4]"));
  // Independent recount: 19 inversions plus |-2| + |-6| + |-5| + |-4| = 17.
  const std::vector<int> w{8, 3, -2, -6, 1, 7, -5, -4};
  long len = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) len += w[i] > w[j];
    if (w[i] < 0) len -= w[i];
  }
  EXPECT_EQ(r.body["length"], len);
  EXPECT_EQ(len, 36);
}

TEST(Cli, PermIsTypeCOnly) {
  auto r = cli::run("perm", json::parse(R"({"family":"A","r":[0],"p":[1],"q":[2]})"));
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, FormulaTermsAndRoundTrip) {
  auto r = cli::run("formula", json::parse(R"({"family":"C","k":[1,2],"p":[3,2],"q":[2,-1]})"));
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  ASSERT_TRUE(r.body["terms"].is_array());
  ASSERT_FALSE(r.body["terms"].empty());
  for (const auto& term : r.body["terms"])
    for (const auto& f : term["factors"]) EXPECT_EQ(f["kind"], "c");
  const std::string once = r.body.dump();
  EXPECT_EQ(json::parse(once).dump(), once);
}

TEST(Cli, FormulaTypeDCarriesTwoPower) {
  auto r = cli::run("formula", json::parse(R"({"family":"D","k":[1,2],"p":[2,1],"q":[2,-2]})"));
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  auto t = build_triple(cli::triple_input_from_json(json::parse(R"({"family":"D","k":[1,2],"p":[2,1],"q":[2,-2]})")));
  EXPECT_EQ(r.body["two_power"], t.r);
}

TEST(Cli, SpecializeSingleRow) {
  // A single entry gives a one-part lambda, so the class is one h coefficient.
  auto r = cli::run("specialize", json::parse(R"({"family":"C","k":[1],"p":[1],"q":[2],"vars":2,"series":"h"})"));
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  auto t = build_triple(cli::triple_input_from_json(json::parse(R"({"family":"C","k":[1],"p":[1],"q":[2]})")));
  ASSERT_EQ(t.lambda.parts.size(), 1U);
  const SymPoly h = h_series(2, 6).coefficient(t.lambda.parts[0]);
  EXPECT_EQ(r.body["terms"], cli::terms_json(h));
}

TEST(Cli, SpecializeRejectsBadSeries) {
  auto r = cli::run("specialize", json::parse(R"({"family":"C","k":[1],"p":[1],"q":[2],"vars":2,"series":"e"})"));
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, SchemaErrorsAreValidationErrors) {
  EXPECT_EQ(cli::run("triple", json::parse(R"({"family":"C","p":[1],"q":[1]})")).exit_code, 1);
  EXPECT_EQ(cli::run("triple", json::parse(R"({"family":"X","k":[1],"p":[1],"q":[1]})")).exit_code, 1);
  EXPECT_EQ(cli::run("triple", json::parse(R"({"family":"C","k":["1"],"p":[1],"q":[1]})")).exit_code, 1);
  EXPECT_EQ(cli::run("bogus", json::object()).exit_code, 1);
}

TEST(Cli, LargeIntegersBecomeStrings) {
  const Integer big = Integer(1) << 60;
  EXPECT_TRUE(cli::integer_json(big).is_string());
  EXPECT_EQ(cli::integer_json(big).get<std::string>(), big.str());
  EXPECT_TRUE(cli::integer_json(Integer(-12)).is_number_integer());
  const Integer edge = (Integer(1) << 53) - 1;
  EXPECT_TRUE(cli::integer_json(edge).is_number_integer());
  EXPECT_TRUE(cli::integer_json(edge + 1).is_string());
}

TEST(Cli, VerifySmallBounds) {
  const json bounds = json::parse(R"({"schur_n":4,"idempotent_n":3,"tanner_alphabet":4,"raising_c_len":3,
    "raising_c_size":6,"raising_d_len":2,"raising_d_size":4,"inflation_count":10,"collapse_len":3,
    "collapse_size":5,"schur_oracle_size":4,"q_oracle_size":4,"oracle_vars":2,"intro_rank":2,
    "intro_order":5,"dominant_n":3})");
  auto r = cli::run("verify", json{{"suite", "all"}, {"bounds", bounds}});
  EXPECT_EQ(r.exit_code, 0) << r.body.dump(2);
  EXPECT_TRUE(r.body["passed"].get<bool>());
  for (const auto& rep : r.body["reports"]) EXPECT_FALSE(rep.contains("witness"));
}

TEST(Cli, VerifyStatedInflationFailsWithWitness) {
  const json bounds = json::parse(R"({"schur_n":2,"idempotent_n":2,"tanner_alphabet":0,"raising_c_len":1,
    "raising_c_size":1,"raising_d_len":1,"raising_d_size":1,"raising_cz_len":1,"raising_cz_size":1,
    "inflation_count":20,"inflation":"stated"})");
  auto r = cli::run("verify", json{{"bounds", bounds}}, "appendixA");
  EXPECT_EQ(r.exit_code, 2);
  bool saw_witness = false;
  for (const auto& rep : r.body["reports"])
    if (!rep["passed"].get<bool>()) saw_witness = saw_witness || rep.contains("witness");
  EXPECT_TRUE(saw_witness);
}

TEST(Cli, VerifyRejectsUnknownSuiteAndBound) {
  EXPECT_EQ(cli::run("verify", json{{"suite", "nope"}}).exit_code, 1);
  EXPECT_EQ(cli::run("verify", json{{"bounds", json{{"mystery", 1}}}}).exit_code, 1);
}
