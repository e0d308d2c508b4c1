#pragma once

// Triples of types A, B, C, D: validation, normalization (insertion of the
// extra entry when r > k_{a-1}), and the derived sequences rho, mu, lambda.
// Also the type C signed permutation w(tau) and hyperoctahedral length.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chernloci/error.hpp"

namespace chernloci {

enum class Family { A, B, C, D };

inline char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  validation_error("unknown family", s);
}

struct Partition {
  std::vector<int> parts;

  std::size_t length() const { return parts.size(); }
  int size() const {
    int total = 0;
    for (int v : parts) total += v;
    return total;
  }
  bool is_valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }
  bool operator==(const Partition&) const = default;
};

struct RhoSequence {
  std::vector<int> entries;

  bool is_valid() const {
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (entries[j] < 0 || entries[j] >= static_cast<int>(j) + 1) return false;
    return true;
  }
  static RhoSequence zeros(std::size_t n) { return {std::vector<int>(n, 0)}; }
  static RhoSequence full(std::size_t n) {
    RhoSequence r;
    for (std::size_t j = 0; j < n; ++j) r.entries.push_back(static_cast<int>(j));
    return r;
  }
  bool operator==(const RhoSequence&) const = default;
};

// lambda is rho-strict when lambda_j + rho_j is nonincreasing.
inline bool is_rho_strict(const RhoSequence& rho, const Partition& lambda) {
  if (rho.entries.size() != lambda.parts.size()) return false;
  for (std::size_t j = 1; j < lambda.parts.size(); ++j)
    if (lambda.parts[j] + rho.entries[j] > lambda.parts[j - 1] + rho.entries[j - 1]) return false;
  return true;
}

struct TripleInput {
  Family family = Family::C;
  std::vector<int> first;  // r for type A, k otherwise
  std::vector<int> p;
  std::vector<int> q;
  std::optional<int> d_parity;
};

struct NormalizedTriple {
  Family family = Family::C;
  std::vector<int> k;
  std::vector<int> p;
  std::vector<int> q;
  std::vector<int> r_ranks;  // type A only
  int a = 0;                 // 1-based; s+1 when every q is positive
  int r = 0;
  RhoSequence rho;
  std::vector<int> mu;
  Partition lambda;
  int ell = 0;
  std::vector<int> clabel;    // position k (1-based) -> owning entry i (1-based)
  std::optional<int> inserted;  // 1-based position of an inserted entry
  std::optional<int> d_parity;

  std::size_t entries() const { return k.size(); }
};

namespace detail {

// Integer with the sentinels q_0 = +infinity and q_{s+1} = -infinity.
struct ExtendedInt {
  enum class Tag { NegInf, Finite, PosInf } tag = Tag::Finite;
  long value = 0;

  static ExtendedInt pos_inf() { return {Tag::PosInf, 0}; }
  static ExtendedInt neg_inf() { return {Tag::NegInf, 0}; }
  static ExtendedInt finite(long v) { return {Tag::Finite, v}; }

  friend bool operator>(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.tag != b.tag) return static_cast<int>(a.tag) > static_cast<int>(b.tag);
    return a.tag == Tag::Finite && a.value > b.value;
  }
  friend bool operator>=(const ExtendedInt& a, const ExtendedInt& b) { return !(b > a); }
};

// q_i with sentinel conventions; i is 1-based and may be 0 or s+1.
inline ExtendedInt q_at(const std::vector<int>& q, int i) {
  if (i <= 0) return ExtendedInt::pos_inf();
  if (i > static_cast<int>(q.size())) return ExtendedInt::neg_inf();
  return ExtendedInt::finite(q[static_cast<std::size_t>(i) - 1]);
}

inline int k_at(const std::vector<int>& k, int i) {
  return i <= 0 ? 0 : k[static_cast<std::size_t>(i) - 1];
}

inline void require_equal_lengths(const TripleInput& in) {
  if (in.first.empty() || in.first.size() != in.p.size() || in.p.size() != in.q.size())
    validation_error("precondition: tuples of equal length s >= 1");
}

inline void require_k_increasing(const std::vector<int>& k) {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] <= (i == 0 ? 0 : k[i - 1])) validation_error("precondition: 0 < k_1 < ... < k_s");
}

inline std::vector<int> fill_clabel(const std::vector<int>& k) {
  std::vector<int> clabel;
  for (std::size_t i = 0; i < k.size(); ++i)
    while (static_cast<int>(clabel.size()) < k[i]) clabel.push_back(static_cast<int>(i) + 1);
  return clabel;
}

inline bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// The (k, p, q) sign-pattern rules that are checked both on input and after
// insertion.
inline void check_clashes(Family family, const std::vector<int>& q, bool after_insertion) {
  const std::string suffix = after_insertion ? " after insertion" : "";
  for (int v : q) {
    if (family == Family::D) {
      if (v > 0 && contains(q, -v - 1)) validation_error("q and -q-1 clash" + suffix);
    } else if (v != 0 && contains(q, -v)) {
      validation_error("+-q clash" + suffix);
    }
  }
}

// Shared construction for types B, C (flavor C) and D.
inline NormalizedTriple normalize_isotropic(const TripleInput& in) {
  const bool type_d = in.family == Family::D;
  require_equal_lengths(in);
  std::vector<int> k = in.first;
  std::vector<int> p = in.p;
  std::vector<int> q = in.q;
  const int s = static_cast<int>(k.size());

  require_k_increasing(k);
  for (int i = 1; i < s; ++i)
    if (p[i] > p[i - 1]) validation_error("precondition: p_1 >= ... >= p_s");
  for (int i = 1; i < s; ++i)
    if (q[i] > q[i - 1]) validation_error("precondition: q_1 >= ... >= q_s");
  if (type_d) {
    if (p.back() < 0) validation_error("precondition: p_s >= 0");
    if (contains(q, -1)) validation_error("q=-1", "the value q=-1 is prohibited");
    if (q.back() < 0 && p.back() <= 0) validation_error("precondition: q_s < 0 implies p_s > 0");
  } else {
    if (p.back() <= 0) validation_error("precondition: p_s > 0");
    if (contains(q, 0)) validation_error("q=0", "q values may be negative but not zero");
    if (q.back() < 0 && p.back() <= 1) validation_error("precondition: q_s < 0 implies p_s > 1");
  }
  check_clashes(in.family, q, false);

  // a: first entry with q < 0 (type C/B) or q < -1 (type D).
  int a = 1;
  while (a <= s && (type_d ? q[static_cast<std::size_t>(a) - 1] >= 0
                           : q[static_cast<std::size_t>(a) - 1] > 0))
    ++a;

  int r = k_at(k, a - 1);
  if (a <= s) r = std::max(r, q[static_cast<std::size_t>(a) - 1] + k[static_cast<std::size_t>(a) - 1]);

  NormalizedTriple t;
  t.family = in.family;
  t.d_parity = in.d_parity;
  if (r > k_at(k, a - 1)) {
    const int qa = q[static_cast<std::size_t>(a) - 1];
    const detail::ExtendedInt prev = q_at(q, a - 1);
    const bool ok = type_d ? prev >= ExtendedInt::finite(-qa) : prev > ExtendedInt::finite(-qa);
    if (!ok)
      validation_error("insertion impossible",
                       type_d ? "requires q_{a-1} >= -q_a" : "requires q_{a-1} > -q_a");
    const int new_q = type_d ? -qa : -qa + 1;
    const auto at = static_cast<std::ptrdiff_t>(a) - 1;
    k.insert(k.begin() + at, r);
    p.insert(p.begin() + at, p[static_cast<std::size_t>(a) - 1]);
    q.insert(q.begin() + at, new_q);
    check_clashes(in.family, q, true);
    t.inserted = a;
    ++a;
  }
  const int n_entries = static_cast<int>(k.size());
  const int ell = k.back();

  std::vector<int> rho(static_cast<std::size_t>(ell), 0);
  for (int pos = 1; pos <= r; ++pos) rho[static_cast<std::size_t>(pos) - 1] = pos - 1;
  std::vector<int> rho_at_entry(static_cast<std::size_t>(n_entries), 0);
  for (int j = a; j <= n_entries; ++j) {
    const int neg = -q[static_cast<std::size_t>(j) - 1];
    // i with q_i > -q_j > q_{i+1} (type D: q_i >= -q_j > q_{i+1} + 1)
    int i = 0;
    while (i < n_entries &&
           (type_d ? q[static_cast<std::size_t>(i)] >= neg : q[static_cast<std::size_t>(i)] > neg))
      ++i;
    const ExtendedInt next = q_at(q, i + 1);
    const ExtendedInt bound = ExtendedInt::finite(type_d ? neg - 1 : neg);
    if (!(bound > next)) internal_error("rho index rule has no solution");
    rho_at_entry[static_cast<std::size_t>(j) - 1] = k_at(k, i);
  }
  for (int j = a; j <= n_entries; ++j)
    for (int pos = k_at(k, j - 1) + 1; pos <= k_at(k, j); ++pos)
      rho[static_cast<std::size_t>(pos) - 1] = rho_at_entry[static_cast<std::size_t>(j) - 1];

  std::vector<int> mu(static_cast<std::size_t>(ell), 0);
  for (int i = 1; i <= n_entries; ++i) {
    const auto idx = static_cast<std::size_t>(i) - 1;
    int base = p[idx] + q[idx] + k[idx];
    int value = type_d ? (i < a ? base - 1 : base) : (i < a ? base - 2 : base - 1);
    for (int pos = k_at(k, i - 1) + 1; pos <= k_at(k, i); ++pos)
      mu[static_cast<std::size_t>(pos) - 1] = value;
  }

  std::vector<int> lambda(static_cast<std::size_t>(ell));
  for (int pos = 0; pos < ell; ++pos)
    lambda[static_cast<std::size_t>(pos)] = mu[static_cast<std::size_t>(pos)] - rho[static_cast<std::size_t>(pos)];

  for (int j = a; j <= n_entries; ++j) {
    const auto idx = static_cast<std::size_t>(j) - 1;
    if (rho[static_cast<std::size_t>(k[idx]) - 1] < k[idx] + q[idx])
      validation_error("condition (3)",
                       "rho_{k_" + std::to_string(j) + "}=" +
                           std::to_string(rho[static_cast<std::size_t>(k[idx]) - 1]) + " < k_j+q_j=" +
                           std::to_string(k[idx] + q[idx]));
  }
  for (int pos = 1; pos < ell; ++pos)
    if (mu[static_cast<std::size_t>(pos)] > mu[static_cast<std::size_t>(pos) - 1])
      validation_error("condition (4)", "mu is not nonincreasing");
  if (mu.back() < 0) validation_error("condition (4)", "mu_ell < 0");
  for (int pos = 2; pos <= ell; ++pos) {
    const int prev = lambda[static_cast<std::size_t>(pos) - 2];
    const int cur = lambda[static_cast<std::size_t>(pos) - 1];
    const bool strict = pos <= r || (pos == r + 1 && !type_d);
    if (strict ? cur >= prev : cur > prev)
      validation_error("condition (5)", "lambda violates the strictness pattern at position " +
                                            std::to_string(pos));
  }
  if (lambda.back() < 0) validation_error("condition (5)", "lambda_ell < 0");

  t.k = std::move(k);
  t.p = std::move(p);
  t.q = std::move(q);
  t.a = a;
  t.r = r;
  t.rho = RhoSequence{std::move(rho)};
  t.mu = std::move(mu);
  t.lambda = Partition{std::move(lambda)};
  t.ell = ell;
  t.clabel = fill_clabel(t.k);
  return t;
}

}  // namespace detail

inline NormalizedTriple build_type_a(const TripleInput& in) {
  detail::require_equal_lengths(in);
  const auto& r = in.first;
  const auto& p = in.p;
  const auto& q = in.q;
  const std::size_t s = r.size();
  for (std::size_t i = 0; i < s; ++i)
    if (r[i] < 0 || p[i] < 0 || q[i] < 0) validation_error("precondition: nonnegative entries");
  if (p[0] <= 0) validation_error("precondition: 0 < p_1 <= ... <= p_s");
  for (std::size_t i = 1; i < s; ++i)
    if (p[i] < p[i - 1]) validation_error("precondition: 0 < p_1 <= ... <= p_s");
  if (q[s - 1] <= 0) validation_error("precondition: q_1 >= ... >= q_s > 0");
  for (std::size_t i = 1; i < s; ++i)
    if (q[i] > q[i - 1]) validation_error("precondition: q_1 >= ... >= q_s > 0");

  std::vector<int> k(s);
  std::vector<int> l(s);
  for (std::size_t i = 0; i < s; ++i) {
    k[i] = p[i] - r[i];
    l[i] = q[i] - r[i];
  }
  detail::require_k_increasing(k);
  if (l[s - 1] < 0) validation_error("precondition: l_1 >= ... >= l_s >= 0");
  for (std::size_t i = 1; i < s; ++i)
    if (l[i] > l[i - 1]) validation_error("precondition: l_1 >= ... >= l_s >= 0");

  NormalizedTriple t;
  t.family = Family::A;
  t.k = k;
  t.p = p;
  t.q = q;
  t.r_ranks = r;
  t.ell = k.back();
  t.clabel = detail::fill_clabel(k);
  t.lambda.parts.resize(static_cast<std::size_t>(t.ell));
  for (int pos = 1; pos <= t.ell; ++pos)
    t.lambda.parts[static_cast<std::size_t>(pos) - 1] =
        l[static_cast<std::size_t>(t.clabel[static_cast<std::size_t>(pos) - 1]) - 1];
  t.rho = RhoSequence::zeros(static_cast<std::size_t>(t.ell));
  t.mu = t.lambda.parts;
  t.a = 0;
  t.r = 0;
  return t;
}

// Types C and B share the combinatorics; the family tag is preserved.
inline NormalizedTriple build_type_c(TripleInput in) {
  if (in.family != Family::B) in.family = Family::C;
  return detail::normalize_isotropic(in);
}

inline NormalizedTriple build_type_d(TripleInput in) {
  in.family = Family::D;
  return detail::normalize_isotropic(in);
}

inline NormalizedTriple build_triple(const TripleInput& in) {
  switch (in.family) {
    case Family::A: return build_type_a(in);
    case Family::B:
    case Family::C: return build_type_c(in);
    case Family::D: return build_type_d(in);
  }
  internal_error("unknown family");
}

struct SignedPermutation {
  std::vector<int> word;

  bool is_valid() const {
    std::set<int> seen;
    for (int v : word) {
      if (v == 0 || std::abs(v) > static_cast<int>(word.size())) return false;
      if (!seen.insert(std::abs(v)).second) return false;
    }
    return true;
  }
  bool operator==(const SignedPermutation&) const = default;
};

// Inversions plus the absolute values of the negative entries.
inline long signed_perm_length(const SignedPermutation& w) {
  if (!w.is_valid()) validation_error("invalid signed permutation");
  long length = 0;
  const auto& v = w.word;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++length;
    if (v[i] < 0) length -= v[i];
  }
  return length;
}

// Entry by entry: starting at position p_i (or the next free position to its
// right), place k_i - k_{i-1} values, increasing, consecutive among the
// unused absolute values and ending at most at -q_i. Gaps are then filled
// with the smallest unused positive integers.
inline SignedPermutation signed_permutation_c(const NormalizedTriple& t) {
  if (t.family != Family::C) validation_error("signed permutation recipe is for type C only");
  std::vector<int> slots;  // 1-based positions, 0 = empty
  std::set<int> used;
  auto slot = [&](int pos) -> int& {
    if (static_cast<int>(slots.size()) < pos) slots.resize(static_cast<std::size_t>(pos), 0);
    return slots[static_cast<std::size_t>(pos) - 1];
  };
  for (std::size_t i = 0; i < t.entries(); ++i) {
    const int count = t.k[i] - (i == 0 ? 0 : t.k[i - 1]);
    std::vector<int> run;
    for (int v = -t.q[i]; static_cast<int>(run.size()) < count; --v) {
      if (v == 0 || used.count(std::abs(v))) continue;
      bool clash = false;
      for (int x : run)
        if (std::abs(x) == std::abs(v)) clash = true;
      if (!clash) run.push_back(v);
    }
    std::reverse(run.begin(), run.end());
    int pos = t.p[i];
    if (pos < 1) internal_error("signed permutation placement at nonpositive position");
    for (int v : run) {
      while (slot(pos) != 0) ++pos;
      slot(pos) = v;
      used.insert(std::abs(v));
    }
  }
  int n = static_cast<int>(slots.size());
  if (!used.empty()) n = std::max(n, *used.rbegin());
  slots.resize(static_cast<std::size_t>(n), 0);
  int next = 1;
  for (int& s : slots) {
    if (s != 0) continue;
    while (used.count(next)) ++next;
    s = next;
    used.insert(next);
  }
  SignedPermutation w{slots};
  if (!w.is_valid()) internal_error("signed permutation recipe produced an invalid word");
  return w;
}

}  // namespace chernloci
