#pragma once

// JSON command layer behind the chernloci-cli tool: triple normalization,
// locus formulas, signed permutations, specialization and verification
// suites. Needs nlohmann/json (vendor/json.hpp).

#include <cstdint>
#include <string>
#include <vector>

#include "chernloci/class_formulas.hpp"
#include "chernloci/error.hpp"
#include "chernloci/identity_harness.hpp"
#include "chernloci/specialization.hpp"
#include "chernloci/triples.hpp"
#include "json.hpp"

namespace chernloci::cli {

using json = nlohmann::json;

// Plain number inside the 53-bit safe range, decimal string beyond it.
inline json integer_json(const Integer& v) {
  static const Integer safe = (Integer(1) << 53) - 1;
  if (v <= safe && v >= -safe) return static_cast<std::int64_t>(v);
  return v.str();
}

namespace detail {

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) validation_error("schema", "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) validation_error("schema", std::string("missing field \"") + key + "\"");
  return *it;
}

inline int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) validation_error("schema", std::string(what) + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1000000 || x > 1000000) validation_error("schema", std::string(what) + " out of range");
  return static_cast<int>(x);
}

inline std::vector<int> int_list(const json& v, const char* what) {
  if (!v.is_array()) validation_error("schema", std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

}  // namespace detail

// {"family":"C","k":[...],"p":[...],"q":[...]}; type A takes "r" in place of
// "k"; type D accepts an optional "d_parity".
inline TripleInput triple_input_from_json(const json& in) {
  const json& src = in.contains("triple") ? in.at("triple") : in;
  TripleInput t;
  const json& fam = detail::field(src, "family");
  if (!fam.is_string()) validation_error("schema", "family must be a string");
  t.family = parse_family(fam.get<std::string>());
  const char* first = t.family == Family::A ? "r" : "k";
  t.first = detail::int_list(detail::field(src, first), first);
  t.p = detail::int_list(detail::field(src, "p"), "p");
  t.q = detail::int_list(detail::field(src, "q"), "q");
  if (src.contains("d_parity")) t.d_parity = detail::as_int(src.at("d_parity"), "d_parity");
  return t;
}

inline json triple_json(const NormalizedTriple& t) {
  json out;
  out["family"] = std::string(1, family_char(t.family));
  out[t.family == Family::A ? "r" : "k"] = t.family == Family::A ? t.r_ranks : t.k;
  out["p"] = t.p;
  out["q"] = t.q;
  out["a"] = t.a;
  out["r"] = t.r;
  out["rho"] = t.rho.entries;
  out["mu"] = t.mu;
  out["lambda"] = t.lambda.parts;
  out["ell"] = t.ell;
  out["clabel"] = t.clabel;
  if (t.inserted) out["inserted"] = json::array({*t.inserted});
  if (t.d_parity) out["d_parity"] = *t.d_parity;
  return out;
}

inline json factor_json(const Symbol& s, int exponent) {
  json f;
  switch (s.kind) {
    case SymbolKind::C: f["kind"] = "c"; break;
    case SymbolKind::D: f["kind"] = "d"; break;
    case SymbolKind::E: f["kind"] = "e"; break;
    case SymbolKind::Root: f["kind"] = "x"; break;
    case SymbolKind::Z: f["kind"] = "z"; break;
  }
  if (s.kind == SymbolKind::Root) {
    f["family"] = s.family;
    f["label"] = s.label;
  } else if (s.kind != SymbolKind::Z) {
    f["label"] = s.label;
    f["deg"] = s.degree;
  }
  if (exponent != 1) f["exp"] = exponent;
  return f;
}

// Terms in the canonical order of class_formulas.
inline json terms_json(const SymPoly& poly) {
  json terms = json::array();
  for (const auto& [mono, coeff] : canonical_terms(poly)) {
    json factors = json::array();
    for (const auto& [sym, e] : mono.factors()) factors.push_back(factor_json(sym, e));
    terms.push_back(json{{"coeff", integer_json(coeff)}, {"factors", std::move(factors)}});
  }
  return terms;
}

inline json report_json(const CheckReport& r) {
  json out{{"name", r.name}, {"parameters", r.parameters}, {"passed", r.passed}};
  if (r.witness) out["witness"] = json{{"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  return out;
}

inline json formula_json(const FormulaResult& f) {
  return json{{"family", std::string(1, family_char(f.family))},
              {"two_power", f.two_power},
              {"lambda", f.lambda.parts},
              {"rho", f.rho.entries},
              {"clabel", f.clabel},
              {"terms", terms_json(f.poly)}};
}

// Every triple entry gets the same series (h or q in `vars` variables); for
// type D the d classes get it and the e classes stay abstract.
inline json specialize_json(const json& in) {
  const NormalizedTriple t = build_triple(triple_input_from_json(in));
  const FormulaResult f = locus_class(t);
  const int vars = detail::as_int(detail::field(in, "vars"), "vars");
  if (vars < 1 || vars > 6) validation_error("schema", "vars must lie in 1..6");
  const json& kind = detail::field(in, "series");
  if (!kind.is_string() || (kind != "h" && kind != "q")) validation_error("schema", "series must be \"h\" or \"q\"");
  const int order = f.lambda.size() + 2 * t.ell + 2;
  const Series s = kind == "h" ? h_series(vars, order) : q_series(vars, order);
  ChernAssignment assign;
  for (std::size_t i = 1; i <= t.entries(); ++i)
    assign.set(static_cast<int>(i), s, t.family == Family::D ? EntryKind::DE : EntryKind::C);
  return json{{"two_power", f.two_power}, {"terms", terms_json(specialize(f.poly, t.clabel, assign))}};
}

// Verification bounds; defaults are the acceptance bounds.
struct Bounds {
  int schur_n = 6;
  int idempotent_n = 4;
  int tanner_alphabet = 6;
  int raising_c_len = 5, raising_c_size = 12;
  int raising_d_len = 3, raising_d_size = 8;
  int raising_cz_len = 2, raising_cz_size = 6;
  int inflation_count = 100;
  int inflation_seed = 1;
  bool inflation_stated = false;  // sample the stated hypotheses only
  int schur_oracle_size = 8, q_oracle_size = 6, oracle_vars = 3;
  int collapse_len = 4, collapse_size = 10;
  int intro_rank = 4, intro_order = 10;
  int dominant_n = 4;

  static Bounds from_json(const json& b) {
    Bounds out;
    if (b.is_null()) return out;
    if (!b.is_object()) validation_error("schema", "bounds must be an object");
    for (const auto& [key, value] : b.items()) {
      if (key == "inflation") {
        if (value != "block" && value != "stated")
          validation_error("schema", "bounds.inflation must be \"block\" or \"stated\"");
        out.inflation_stated = value == "stated";
        continue;
      }
      int* slot = nullptr;
      if (key == "schur_n") slot = &out.schur_n;
      else if (key == "idempotent_n") slot = &out.idempotent_n;
      else if (key == "tanner_alphabet") slot = &out.tanner_alphabet;
      else if (key == "raising_c_len") slot = &out.raising_c_len;
      else if (key == "raising_c_size") slot = &out.raising_c_size;
      else if (key == "raising_d_len") slot = &out.raising_d_len;
      else if (key == "raising_d_size") slot = &out.raising_d_size;
      else if (key == "raising_cz_len") slot = &out.raising_cz_len;
      else if (key == "raising_cz_size") slot = &out.raising_cz_size;
      else if (key == "inflation_count") slot = &out.inflation_count;
      else if (key == "inflation_seed") slot = &out.inflation_seed;
      else if (key == "schur_oracle_size") slot = &out.schur_oracle_size;
      else if (key == "q_oracle_size") slot = &out.q_oracle_size;
      else if (key == "oracle_vars") slot = &out.oracle_vars;
      else if (key == "collapse_len") slot = &out.collapse_len;
      else if (key == "collapse_size") slot = &out.collapse_size;
      else if (key == "intro_rank") slot = &out.intro_rank;
      else if (key == "intro_order") slot = &out.intro_order;
      else if (key == "dominant_n") slot = &out.dominant_n;
      else validation_error("schema", "unknown bound \"" + key + "\"");
      *slot = detail::as_int(value, key.c_str());
      if (*slot < 0) validation_error("schema", "bound \"" + key + "\" must be nonnegative");
    }
    return out;
  }
};

namespace detail {

inline std::string size_bound(int len, int size) {
  return "l<=" + std::to_string(len) + " |lambda|<=" + std::to_string(size);
}

// Applies `check` to every item and folds the results into one report.
template <typename Items, typename Check>
CheckReport sweep(const std::string& name, const std::string& params, const Items& items, Check&& check) {
  std::vector<CheckReport> parts;
  for (const auto& item : items) {
    parts.push_back(check(item));
    if (!parts.back().passed) break;
  }
  return combine_reports(name, params + " instances=" + std::to_string(parts.size()), parts);
}

inline std::vector<SignVector> sign_vectors(int ell) {
  std::vector<SignVector> out;
  int count = 1;
  for (int i = 0; i < ell; ++i) count *= 3;
  for (int code = 0; code < count; ++code) {
    SignVector s;
    for (int i = 0, c = code; i < ell; ++i, c /= 3) s.push_back(c % 3 - 1);
    out.push_back(std::move(s));
  }
  return out;
}

// Strictly decreasing nonzero q with entries in -n..n and 1 <= s <= min(3, n).
inline std::vector<std::vector<int>> dominant_c_inputs(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == std::min(3, n)) return;
    for (int v = cap; v >= -n; --v) {
      if (v == 0) continue;
      cur.push_back(v);
      rec(v - 1);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

inline bool block_rows_interchangeable(const InflationInstance& in) {
  for (int i = in.m; i < in.n; ++i)
    if (in.rho.entries[static_cast<std::size_t>(i) - 1] != in.rho.entries[static_cast<std::size_t>(i)])
      return false;
  for (int v : in.rho.entries)
    if (v >= in.m && v < in.n) return false;
  return in.variant == InflationVariant::Theta || in.m > in.r;
}

}  // namespace detail

inline std::vector<CheckReport> appendix_suite(const Bounds& b) {
  std::vector<CheckReport> out;
  for (int n = 2; n <= b.schur_n; ++n) out.push_back(check_schur_pfaffian(n));
  for (int n = 2; n <= b.idempotent_n; ++n) out.push_back(check_idempotent_pfaffian(n));
  if (b.tanner_alphabet >= 4) out.push_back(check_tanner(b.tanner_alphabet));
  std::vector<std::vector<int>> strict;
  for (const auto& lam : enumerate_partitions(b.raising_c_len, b.raising_c_size))
    if (is_strict(lam)) strict.push_back(lam);
  out.push_back(detail::sweep("raising_vs_pfaffian_c", detail::size_bound(b.raising_c_len, b.raising_c_size),
                              strict, [](const auto& lam) {
                                return check_raising_vs_pfaffian(RaisingVariant::C, lam);
                              }));
  std::vector<std::pair<std::vector<int>, SignVector>> d_items;
  for (const auto& lam : enumerate_partitions(b.raising_d_len, b.raising_d_size))
    for (auto& s : detail::sign_vectors(static_cast<int>(lam.size()))) d_items.emplace_back(lam, std::move(s));
  out.push_back(detail::sweep("raising_vs_pfaffian_d",
                              detail::size_bound(b.raising_d_len, b.raising_d_size) + " all s", d_items,
                              [](const auto& item) {
                                return check_raising_vs_pfaffian(RaisingVariant::D, item.first, item.second);
                              }));
  out.push_back(detail::sweep("raising_vs_pfaffian_cz", detail::size_bound(b.raising_cz_len, b.raising_cz_size),
                              enumerate_partitions(b.raising_cz_len, b.raising_cz_size), [](const auto& lam) {
                                return check_raising_vs_pfaffian(RaisingVariant::Cz, lam);
                              }));
  for (auto variant : {InflationVariant::Theta, InflationVariant::Eta}) {
    std::vector<InflationInstance> items;
    unsigned seed = static_cast<unsigned>(b.inflation_seed);
    while (static_cast<int>(items.size()) < b.inflation_count) {
      for (auto& in : random_inflation_instances(variant, b.inflation_count, seed++))
        if ((b.inflation_stated || detail::block_rows_interchangeable(in)) &&
            static_cast<int>(items.size()) < b.inflation_count)
          items.push_back(std::move(in));
    }
    const std::string name = variant == InflationVariant::Theta ? "inflation_theta" : "inflation_eta";
    out.push_back(detail::sweep(name,
                                std::string(b.inflation_stated ? "stated hypotheses" : "interchangeable block") +
                                    " seed=" + std::to_string(b.inflation_seed),
                                items, [](const auto& in) { return check_inflation(in); }));
  }
  return out;
}

inline std::vector<CheckReport> oracle_suite(const Bounds& b) {
  std::vector<CheckReport> out;
  const auto small = enumerate_partitions(b.collapse_len, b.collapse_size);
  out.push_back(detail::sweep("delta_raising_vs_determinant", detail::size_bound(b.collapse_len, b.collapse_size),
                              small, [](const auto& lam) {
                                return compare_polys("delta_raising_vs_determinant", "lambda=" + ::chernloci::detail::join_ints(lam),
                                                     schur_delta(Partition{lam}, DeltaMethod::Raising),
                                                     schur_delta(Partition{lam}, DeltaMethod::Determinant));
                              }));
  std::vector<CheckReport> collapse;
  for (const auto& lam : small)
    for (auto& r : check_collapse(Partition{lam})) collapse.push_back(std::move(r));
  out.push_back(combine_reports("collapse", detail::size_bound(b.collapse_len, b.collapse_size) +
                                                " instances=" + std::to_string(collapse.size()),
                                collapse));
  std::vector<std::pair<std::vector<int>, int>> schur_items, q_items;
  for (int m = 1; m <= b.oracle_vars; ++m) {
    for (const auto& lam : enumerate_partitions(b.schur_oracle_size, b.schur_oracle_size))
      schur_items.emplace_back(lam, m);
    for (const auto& lam : enumerate_partitions(b.q_oracle_size, b.q_oracle_size))
      if (is_strict(lam)) q_items.emplace_back(lam, m);
  }
  out.push_back(detail::sweep("schur_oracle", "|lambda|<=" + std::to_string(b.schur_oracle_size), schur_items,
                              [](const auto& it) { return check_schur_oracle(it.first, it.second); }));
  out.push_back(detail::sweep("q_oracle", "strict |lambda|<=" + std::to_string(b.q_oracle_size), q_items,
                              [](const auto& it) { return check_q_oracle(it.first, it.second); }));
  out.push_back(check_intro_identities(b.intro_rank, b.intro_order));
  std::vector<std::vector<int>> a_inputs;
  for (const auto& lam : enumerate_partitions(3, 15))
    if (lam[0] <= 5) a_inputs.push_back(lam);
  out.push_back(detail::sweep("dominant_product_a", "s<=3 q_1<=5", a_inputs,
                              [](const auto& q) { return check_dominant_product_a(q); }));
  std::vector<std::pair<int, std::vector<int>>> c_inputs;
  for (int n = 1; n <= b.dominant_n; ++n)
    for (auto& q : detail::dominant_c_inputs(n)) c_inputs.emplace_back(n, std::move(q));
  int infeasible = 0;
  std::vector<CheckReport> c_reports;
  for (const auto& [n, q] : c_inputs) {
    try {
      c_reports.push_back(check_dominant_product_c(n, q));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Validation) throw;
      ++infeasible;
    }
  }
  out.push_back(combine_reports("dominant_product_c",
                                "n<=" + std::to_string(b.dominant_n) + " s<=3 instances=" +
                                    std::to_string(c_reports.size()) + " infeasible=" + std::to_string(infeasible),
                                c_reports));
  return out;
}

inline std::vector<CheckReport> run_suite(const std::string& suite, const Bounds& b) {
  if (suite == "appendixA") return appendix_suite(b);
  if (suite == "oracles") return oracle_suite(b);
  if (suite == "all") {
    auto out = appendix_suite(b);
    for (auto& r : oracle_suite(b)) out.push_back(std::move(r));
    return out;
  }
  validation_error("schema", "unknown suite \"" + suite + "\"");
}

struct Response {
  json body;
  int exit_code = 0;
};

inline json error_json(const Error& e) {
  return json{{"error", json{{"kind", e.kind() == ErrorKind::Validation ? "validation" : "internal"},
                              {"condition", e.condition()},
                              {"message", e.what()}}}};
}

// `suite` and `bounds` override the corresponding request fields for verify.
inline Response run(const std::string& command, const json& request, const std::string& suite_override = {},
                    const json& bounds_override = nullptr) {
  try {
    if (command == "triple") return {triple_json(build_triple(triple_input_from_json(request))), 0};
    if (command == "formula") return {formula_json(locus_class(build_triple(triple_input_from_json(request)))), 0};
    if (command == "perm") {
      const NormalizedTriple t = build_triple(triple_input_from_json(request));
      const SignedPermutation w = signed_permutation_c(t);
      return {json{{"word", w.word}, {"length", signed_perm_length(w)}}, 0};
    }
    if (command == "specialize") return {specialize_json(request), 0};
    if (command == "verify") {
      std::string suite = "all";
      if (request.is_object() && request.contains("suite")) {
        if (!request.at("suite").is_string()) validation_error("schema", "suite must be a string");
        suite = request.at("suite").get<std::string>();
      }
      if (!suite_override.empty()) suite = suite_override;
      json bounds = request.is_object() && request.contains("bounds") ? request.at("bounds") : json();
      if (!bounds_override.is_null()) bounds = bounds_override;
      const auto reports = run_suite(suite, Bounds::from_json(bounds));
      json list = json::array();
      bool all = true;
      for (const auto& r : reports) {
        list.push_back(report_json(r));
        all = all && r.passed;
      }
      return {json{{"suite", suite}, {"passed", all}, {"reports", std::move(list)}}, all ? 0 : 2};
    }
    validation_error("unknown command", command);
  } catch (const Error& e) {
    return {error_json(e), e.kind() == ErrorKind::Validation ? 1 : 2};
  } catch (const json::exception& e) {
    return {error_json(Error(ErrorKind::Validation, "schema", e.what())), 1};
  }
}

}  // namespace chernloci::cli
