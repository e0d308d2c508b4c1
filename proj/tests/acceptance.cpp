// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//   acceptance [--only N]...

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chernloci/cli.hpp"
#include "test_support.hpp"

using namespace chernloci;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string clip(const std::string& text, std::size_t width = 120) {
  return text.size() <= width ? text : text.substr(0, width) + " ...";
}

Outcome from_reports(const std::vector<CheckReport>& reports) {
  Outcome out;
  for (const auto& r : reports) {
    if (r.passed) continue;
    out.passed = false;
    out.detail = r.name + " [" + r.parameters + "]";
    if (r.witness) out.detail += " lhs=" + clip(r.witness->lhs) + " rhs=" + clip(r.witness->rhs);
    return out;
  }
  return out;
}

Outcome expect(bool ok, std::string detail) { return {ok, ok ? "" : std::move(detail)}; }

std::string condition_of(const TripleInput& in) {
  try {
    build_triple(in);
  } catch (const Error& e) {
    return e.condition();
  }
  return "";
}

TripleInput type_c(std::vector<int> k, std::vector<int> p, std::vector<int> q) {
  return TripleInput{Family::C, std::move(k), std::move(p), std::move(q), std::nullopt};
}

Outcome worked_example() {
  const auto t = build_type_c(type_c({1, 3, 5, 6, 7, 9}, {9, 7, 6, 5, 2, 2}, {6, 3, -2, -5, -7, -9}));
  const std::vector<int> rho{0, 1, 2, 3, 3, 1, 0, 0, 0};
  const std::vector<int> lambda{14, 10, 9, 5, 5, 4, 1, 1, 1};
  return expect(t.a == 3 && t.r == 3 && t.rho.entries == rho && t.lambda.parts == lambda,
                "a=" + std::to_string(t.a) + " r=" + std::to_string(t.r) +
                    " lambda=" + detail::join_ints(t.lambda.parts));
}

Outcome remark_example() {
  const auto t = build_type_c(type_c({2, 3, 5, 6, 7}, {7, 4, 3, 3, 2}, {4, 4, -1, -7, -7}));
  const auto w = signed_permutation_c(t);
  const std::vector<int> word{8, 3, -2, -6, 1, 7, -5, -4};
  const std::string cond = condition_of(type_c({2, 3, 4, 5, 7}, {7, 4, 4, 3, 2}, {4, 4, -1, -1, -7}));
  return expect(w.word == word && cond == "condition (3)",
                "word=" + detail::join_ints(w.word) + " rejection=\"" + cond + "\"");
}

Outcome delta_agreement() {
  std::vector<CheckReport> reports;
  for (const auto& lam : enumerate_partitions(4, 10))
    reports.push_back(compare_polys("delta", "lambda=" + detail::join_ints(lam),
                                    schur_delta(Partition{lam}, DeltaMethod::Raising),
                                    schur_delta(Partition{lam}, DeltaMethod::Determinant)));
  return from_reports(reports);
}

Outcome schur_pfaffian() {
  std::vector<CheckReport> reports;
  for (int n = 2; n <= 6; ++n) reports.push_back(check_schur_pfaffian(n));
  return from_reports(reports);
}

Outcome idempotent_pfaffian() {
  std::vector<CheckReport> reports;
  for (int n = 2; n <= 4; ++n) reports.push_back(check_idempotent_pfaffian(n));
  return from_reports(reports);
}

Outcome raising_vs_pfaffian() {
  std::vector<CheckReport> reports;
  for (const auto& lam : enumerate_partitions(5, 12))
    if (is_strict(lam)) reports.push_back(check_raising_vs_pfaffian(RaisingVariant::C, lam));
  for (const auto& lam : enumerate_partitions(3, 8))
    for (const auto& s : cli::detail::sign_vectors(static_cast<int>(lam.size())))
      reports.push_back(check_raising_vs_pfaffian(RaisingVariant::D, lam, s));
  return from_reports(reports);
}

Outcome inflation() {
  std::vector<CheckReport> reports;
  for (auto variant : {InflationVariant::Theta, InflationVariant::Eta})
    for (const auto& in : random_inflation_instances(variant, 100, 1)) reports.push_back(check_inflation(in));
  int failed = 0;
  for (const auto& r : reports) failed += !r.passed;
  Outcome out = from_reports(reports);
  if (!out.passed) out.detail = std::to_string(failed) + "/" + std::to_string(reports.size()) + " fail; " + out.detail;
  return out;
}

Outcome collapse() {
  std::vector<CheckReport> reports;
  for (const auto& lam : enumerate_partitions(4, 10))
    for (auto& r : check_collapse(Partition{lam})) reports.push_back(std::move(r));
  return from_reports(reports);
}

Outcome oracles() {
  std::vector<CheckReport> reports;
  for (int m = 1; m <= 3; ++m) {
    for (const auto& lam : enumerate_partitions(8, 8)) reports.push_back(check_schur_oracle(lam, m));
    for (const auto& lam : enumerate_partitions(6, 6))
      if (is_strict(lam)) reports.push_back(check_q_oracle(lam, m));
  }
  return from_reports(reports);
}

Outcome intro_identities() { return from_reports({check_intro_identities(4, 10)}); }

Outcome dominant_products() {
  std::vector<CheckReport> reports;
  for (const auto& q : enumerate_partitions(3, 15))
    if (q[0] <= 5) reports.push_back(check_dominant_product_a(q));
  int feasible = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& q : cli::detail::dominant_c_inputs(n)) {
      try {
        reports.push_back(check_dominant_product_c(n, q));
        ++feasible;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Validation) throw;
      }
    }
  }
  if (feasible == 0) return {false, "no feasible type C inputs"};
  return from_reports(reports);
}

Outcome length_law() {
  int valid = 0;
  int failed = 0;
  std::string first;
  testing_support::enumerate_triples(3, 4, 1, 5, [&](const auto& k, const auto& p, const auto& q) {
    NormalizedTriple t;
    try {
      t = build_type_c(type_c(k, p, q));
    } catch (const Error&) {
      return;
    }
    ++valid;
    const auto w = signed_permutation_c(t);
    const long len = signed_perm_length(w);
    if (len == t.lambda.size()) return;
    if (failed++ == 0)
      first = "k=" + detail::join_ints(k) + " p=" + detail::join_ints(p) + " q=" + detail::join_ints(q) +
              " length=" + std::to_string(len) + " |lambda|=" + std::to_string(t.lambda.size());
  });
  if (failed == 0) return {true, ""};
  return {false, std::to_string(failed) + "/" + std::to_string(valid) + " valid triples fail; first " + first};
}

struct Criterion {
  std::string title;
  std::function<Outcome()> run;
  double time_limit = 0;  // seconds; 0 means no limit
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "run only these criteria (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {"worked example triple", worked_example},
      {"signed permutation word and rejected triple", remark_example},
      {"raising vs determinant Delta, l<=4 |lambda|<=10", delta_agreement, 10},
      {"Schur Pfaffian identity, n=2..6", schur_pfaffian, 30},
      {"idempotent Pfaffian, n=2..4 all delta", idempotent_pfaffian, 30},
      {"raising vs Pfaffian, C strict l<=5 |lambda|<=12, D l<=3 |lambda|<=8 all s", raising_vs_pfaffian, 60},
      {"inflation, 100 seeded instances per variant", inflation},
      {"collapse properties, l<=4 |lambda|<=10", collapse},
      {"Schur and Q oracles, m<=3", oracles},
      {"Chern root identities, rank<=4 order<=10", intro_identities},
      {"dominant products, type A s<=3, type C n<=4", dominant_products},
      {"length law, s<=3 k_s<=4 p,|q|<=5", length_law},
  };
  const std::set<int> selected(only.begin(), only.end());

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(number)) continue;
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.passed && c.time_limit > 0 && secs > c.time_limit)
      out = {false, "took longer than " + std::to_string(static_cast<int>(c.time_limit)) + " s"};
    all = all && out.passed;
    std::cout << (out.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << number << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!out.passed) std::cout << "  -- " << out.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
