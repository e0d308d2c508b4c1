#pragma once

// Exact machine checks of the Pfaffian, raising-operator, inflation and
// Chern-class identities behind the locus formulas. Every check returns a
// CheckReport; a failed report carries both sides as canonical strings.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chernloci/class_formulas.hpp"
#include "chernloci/operator_calculus.hpp"
#include "chernloci/specialization.hpp"
#include "chernloci/symbolic_ring.hpp"
#include "chernloci/triples.hpp"

namespace chernloci {

struct Witness {
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  std::string parameters;
  bool passed = true;
  std::optional<Witness> witness;
};

inline CheckReport compare_polys(std::string name, std::string parameters, const SymPoly& lhs,
                                 const SymPoly& rhs) {
  CheckReport r{std::move(name), std::move(parameters), lhs == rhs, std::nullopt};
  if (!r.passed) r.witness = Witness{lhs.to_string(), rhs.to_string()};
  return r;
}

// Folds a batch of reports into one: passes when all pass, otherwise keeps
// the first failure's parameters and witness.
inline CheckReport combine_reports(std::string name, std::string parameters,
                                   const std::vector<CheckReport>& parts) {
  CheckReport out{std::move(name), std::move(parameters), true, std::nullopt};
  for (const auto& p : parts)
    if (!p.passed) {
      out.passed = false;
      out.parameters += " first failure: " + p.name + " " + p.parameters;
      out.witness = p.witness;
      break;
    }
  return out;
}

// num / prod den_k^{e_k} with the denominator kept as a multiset of
// polynomial factors. Sums use the lcm of the factor multisets, so equality
// is decided by exact cross-multiplication without any gcd.
class Fraction {
 public:
  Fraction() = default;
  Fraction(SymPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  Fraction(long long c) : num_(c) {}               // NOLINT(google-explicit-constructor)

  static Fraction ratio(SymPoly num, const SymPoly& den) {
    if (den.is_zero()) internal_error("zero denominator");
    Fraction f(std::move(num));
    if (!f.num_.is_zero()) f.den_[den.to_string()] = {den, 1};
    return f;
  }

  const SymPoly& numerator() const { return num_; }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    Fraction out(a.num_ * b.num_);
    if (out.num_.is_zero()) return out;
    out.den_ = a.den_;
    for (const auto& [key, fe] : b.den_) {
      auto [it, inserted] = out.den_.try_emplace(key, fe);
      if (!inserted) it->second.second += fe.second;
    }
    return out;
  }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.num_.is_zero()) return b;
    if (b.num_.is_zero()) return a;
    Fraction out;
    out.den_ = lcm(a.den_, b.den_);
    out.num_ = a.cleared(out.den_) + b.cleared(out.den_);
    if (out.num_.is_zero()) out.den_.clear();
    return out;
  }
  friend Fraction operator-(const Fraction& a) {
    Fraction out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

  // Numerators of a and b over their common denominator.
  friend std::pair<SymPoly, SymPoly> cleared_pair(const Fraction& a, const Fraction& b) {
    auto common = lcm(a.den_, b.den_);
    return {a.cleared(common), b.cleared(common)};
  }

 private:
  using DenMap = std::map<std::string, std::pair<SymPoly, int>>;

  static DenMap lcm(const DenMap& a, const DenMap& b) {
    DenMap out = a;
    for (const auto& [key, fe] : b) {
      auto [it, inserted] = out.try_emplace(key, fe);
      if (!inserted) it->second.second = std::max(it->second.second, fe.second);
    }
    return out;
  }
  SymPoly cleared(const DenMap& common) const {
    SymPoly out = num_;
    for (const auto& [key, fe] : common) {
      auto it = den_.find(key);
      const int have = it == den_.end() ? 0 : it->second.second;
      if (fe.second > have) out *= fe.first.pow(static_cast<unsigned>(fe.second - have));
    }
    return out;
  }

  SymPoly num_;
  DenMap den_;
};

inline CheckReport compare_fractions(std::string name, std::string parameters, const Fraction& lhs,
                                     const Fraction& rhs) {
  auto [l, r] = cleared_pair(lhs, rhs);
  return compare_polys(std::move(name), std::move(parameters), l, r);
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline SymPoly pf_var(int i) { return root_var(i, 0); }

// H_xy = (T_y - dd T_x) / (T_y + dd T_x) with dd = delta_x delta_y; x >= 1.
inline Fraction h_entry(int x, int y, const std::vector<int>& delta) {
  const int dd = delta[static_cast<std::size_t>(x) - 1] * delta[static_cast<std::size_t>(y) - 1];
  const SymPoly shift = pf_var(x) * Integer(dd);
  return Fraction::ratio(pf_var(y) - shift, pf_var(y) + shift);
}

inline int eps(int x, const std::vector<int>& delta) {
  return 2 * delta[static_cast<std::size_t>(x) - 1] - 1;
}

inline int eps_pow(int x, int e, const std::vector<int>& delta) {
  return e % 2 == 0 ? 1 : eps(x, delta);
}

inline std::vector<std::vector<int>> boolean_assignments(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
    out.push_back(std::move(d));
  }
  return out;
}

// Pfaffian of entry(i, j) over 1..n, with index 0 prepended when n is odd.
template <typename Entry>
Fraction fraction_pfaffian(int n, Entry&& entry) {
  std::vector<int> indices;
  if (n % 2 == 1) indices.push_back(0);
  for (int i = 1; i <= n; ++i) indices.push_back(i);
  return pfaffian_expand<Fraction>(indices, std::forward<Entry>(entry), Fraction(1));
}

}  // namespace detail

// prod_{i<j} (T_j - T_i)/(T_j + T_i) against the Pfaffian of the same
// entries, (0,j) entries equal to 1 for odd n.
inline CheckReport check_schur_pfaffian(int n) {
  if (n < 2) validation_error("precondition: n >= 2");
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  Fraction lhs(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) lhs = lhs * detail::h_entry(i, j, ones);
  Fraction rhs = detail::fraction_pfaffian(n, [&](int i, int j) {
    return i == 0 ? Fraction(1) : detail::h_entry(i, j, ones);
  });
  return compare_fractions("schur_pfaffian", "n=" + std::to_string(n), lhs, rhs);
}

// The n = 3 core H_xy H_xz H_yz = H_yz - e_x e_y H_xz + e_x e_y H_xy.
inline CheckReport check_cubic_core(const std::vector<int>& delta) {
  if (delta.size() != 3) validation_error("precondition: three delta values");
  const Fraction h12 = detail::h_entry(1, 2, delta);
  const Fraction h13 = detail::h_entry(1, 3, delta);
  const Fraction h23 = detail::h_entry(2, 3, delta);
  const Integer ee(detail::eps(1, delta) * detail::eps(2, delta));
  Fraction rhs = h23 - h13 * Fraction(SymPoly::constant(ee)) + h12 * Fraction(SymPoly::constant(ee));
  return compare_fractions("cubic_core", "delta=" + detail::join_ints(delta), h12 * h13 * h23, rhs);
}

// prod H_ij = Pf(a_ij) with a_ij = e_i^{n-i+1} e_j^{n-j} H_ij and
// a_0j = e_j^{n-j}, for every delta in {0,1}^n; for n = 3 also the cubic core.
inline CheckReport check_idempotent_pfaffian(int n) {
  if (n < 2) validation_error("precondition: n >= 2");
  std::vector<CheckReport> parts;
  for (const auto& delta : detail::boolean_assignments(n)) {
    Fraction lhs(1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) lhs = lhs * detail::h_entry(i, j, delta);
    Fraction rhs = detail::fraction_pfaffian(n, [&](int i, int j) {
      const int sj = detail::eps_pow(j, n - j, delta);
      if (i == 0) return Fraction(sj);
      return detail::h_entry(i, j, delta) * Fraction(detail::eps_pow(i, n - i + 1, delta) * sj);
    });
    parts.push_back(compare_fractions("idempotent_pfaffian",
                                      "n=" + std::to_string(n) + " delta=" + detail::join_ints(delta),
                                      lhs, rhs));
    if (n == 3) parts.push_back(check_cubic_core(delta));
  }
  return combine_reports("idempotent_pfaffian", "n=" + std::to_string(n), parts);
}

namespace detail {

// f[xy] = e_x H_xy, f[0y] = 1, f[xx] = 0, f[yx] = -f[xy].
inline Fraction f_pair(int x, int y, const std::vector<int>& delta) {
  if (x == y) return Fraction();
  if (x > y) return -f_pair(y, x, delta);
  if (x == 0) return Fraction(1);
  return h_entry(x, y, delta) * Fraction(eps(x, delta));
}

// f[word]: Pfaffian of f[x_i x_j], with letter 0 prepended for odd length.
inline Fraction f_word(std::vector<int> word, const std::vector<int>& delta) {
  if (word.size() % 2 == 1) word.insert(word.begin(), 0);
  std::vector<int> positions(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) positions[i] = static_cast<int>(i);
  return pfaffian_expand<Fraction>(
      positions,
      [&](int a, int b) {
        return f_pair(word[static_cast<std::size_t>(a)], word[static_cast<std::size_t>(b)], delta);
      },
      Fraction(1));
}

inline std::vector<int> concat(std::vector<int> a, std::initializer_list<int> b) {
  a.insert(a.end(), b);
  return a;
}

}  // namespace detail

// f[a] f[awxyz] = f[awx] f[ayz] - f[awy] f[axz] + f[awz] f[axy] for a empty
// and a = (1,2), over 4-letter sets drawn from 1..alphabet_size in
// increasing and reversed order, and all delta in {0,1}^alphabet_size.
inline CheckReport check_tanner(int alphabet_size) {
  if (alphabet_size < 4) validation_error("precondition: alphabet_size >= 4");
  if (alphabet_size > 8) validation_error("precondition: alphabet_size <= 8");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cases;  // (alpha, wxyz)
  auto add_subsets = [&](const std::vector<int>& alpha, int lo) {
    for (int w = lo; w <= alphabet_size; ++w)
      for (int x = w + 1; x <= alphabet_size; ++x)
        for (int y = x + 1; y <= alphabet_size; ++y)
          for (int z = y + 1; z <= alphabet_size; ++z) {
            cases.push_back({alpha, {w, x, y, z}});
            cases.push_back({alpha, {z, y, x, w}});
          }
  };
  add_subsets({}, 1);
  add_subsets({1, 2}, 3);
  std::vector<CheckReport> parts;
  for (const auto& delta : detail::boolean_assignments(alphabet_size))
    for (const auto& [alpha, l] : cases) {
      using detail::concat;
      using detail::f_word;
      const int w = l[0], x = l[1], y = l[2], z = l[3];
      Fraction lhs = f_word(alpha, delta) * f_word(concat(alpha, {w, x, y, z}), delta);
      Fraction rhs = f_word(concat(alpha, {w, x}), delta) * f_word(concat(alpha, {y, z}), delta) -
                     f_word(concat(alpha, {w, y}), delta) * f_word(concat(alpha, {x, z}), delta) +
                     f_word(concat(alpha, {w, z}), delta) * f_word(concat(alpha, {x, y}), delta);
      parts.push_back(compare_fractions(
          "tanner",
          "alpha=" + detail::join_ints(alpha) + " wxyz=" + detail::join_ints(l) +
              " delta=" + detail::join_ints(delta),
          lhs, rhs));
      if (!parts.back().passed) break;
    }
  return combine_reports("tanner", "alphabet_size=" + std::to_string(alphabet_size), parts);
}

enum class RaisingVariant { C, D, Cz };

// Operator product applied to c_lambda (c_{lambda,s} for D) against the
// Pfaffian of the matching entry matrix.
inline CheckReport check_raising_vs_pfaffian(RaisingVariant variant, const std::vector<int>& lambda,
                                             const SignVector& s = {}) {
  if (lambda.empty()) validation_error("precondition: nonempty lambda");
  if (!in_cone(lambda)) validation_error("precondition: lambda in the cone P");
  if (variant == RaisingVariant::D && s.size() != lambda.size())
    validation_error("precondition: variant D needs a sign vector of length l(lambda)");
  const int n = static_cast<int>(lambda.size());
  std::vector<OperatorFactor> factors;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (variant == RaisingVariant::C) {
        factors.emplace_back(RaiseBinomial{i, j, -1, 1});
        factors.emplace_back(RaiseBinomial{i, j, 1, -1});
      } else if (variant == RaisingVariant::D) {
        factors.emplace_back(DeltaRatio{i, j});
      } else {
        factors.emplace_back(ZRatio{i, j});
      }
    }
  std::string params = "lambda=" + detail::join_ints(lambda);
  SymPoly lhs;
  SymPoly rhs;
  if (variant == RaisingVariant::D) {
    params += " s=" + detail::join_ints(s);
    lhs = evaluate(apply_product(factors, OpExpression::monomial(lambda, s)), EvalStyle::DPlusSE);
    rhs = pfaffian(build_pf_matrix(PfVariant::D, lambda, s));
  } else {
    lhs = evaluate(apply_product(factors, OpExpression::monomial(lambda)), EvalStyle::PlainC);
    rhs = pfaffian(build_pf_matrix(variant == RaisingVariant::C ? PfVariant::C : PfVariant::Cz, lambda));
  }
  const char* name = variant == RaisingVariant::C   ? "raising_vs_pfaffian_c"
                     : variant == RaisingVariant::D ? "raising_vs_pfaffian_d"
                                                    : "raising_vs_pfaffian_cz";
  return compare_polys(name, params, lhs, rhs);
}

enum class InflationVariant { Theta, Eta };

struct InflationInstance {
  InflationVariant variant = InflationVariant::Theta;
  RhoSequence rho;
  Partition lambda;
  int m = 1;
  int n = 2;
  int p = 1;   // number of fresh coefficients a_1..a_p
  int r = 0;   // eta only
  SignVector s;  // eta only

  std::string describe() const {
    std::string out = variant == InflationVariant::Theta ? "theta" : "eta";
    out += " rho=" + detail::join_ints(rho.entries) + " lambda=" + detail::join_ints(lambda.parts) +
           " m=" + std::to_string(m) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
    if (variant == InflationVariant::Eta)
      out += " r=" + std::to_string(r) + " s=" + detail::join_ints(s);
    return out;
  }
};

// Throws a validation error naming the first violated hypothesis.
inline void require_inflation_hypotheses(const InflationInstance& in) {
  const int ell = static_cast<int>(in.lambda.length());
  if (!in.lambda.is_valid() || ell == 0) validation_error("precondition: lambda is a partition");
  if (!in.rho.is_valid() || static_cast<int>(in.rho.entries.size()) != ell)
    validation_error("precondition: rho valid with l(rho) = l(lambda)");
  if (!is_rho_strict(in.rho, in.lambda)) validation_error("precondition: lambda is rho-strict");
  if (!(1 <= in.m && in.m < in.n && in.n <= ell)) validation_error("precondition: 1 <= m < n <= l");
  auto mu = [&](int i) {
    return in.lambda.parts[static_cast<std::size_t>(i) - 1] + in.rho.entries[static_cast<std::size_t>(i) - 1];
  };
  for (int i = in.m; i < in.n; ++i)
    if (mu(i) != mu(i + 1)) validation_error("precondition: lambda_i + rho_i constant on m..n");
  if (in.p < 1 || in.p > in.n - in.m) validation_error("precondition: 1 <= p <= n - m");
  if (in.variant == InflationVariant::Eta) {
    if (in.r < 0 || in.r > ell) validation_error("precondition: 0 <= r <= l");
    for (int j = 1; j <= in.r; ++j)
      if (in.rho.entries[static_cast<std::size_t>(j) - 1] != j - 1)
        validation_error("precondition: rho_j = j - 1 for j <= r");
    if (!(in.n <= in.r || in.m >= in.r))
      validation_error("precondition: m < n <= r or r <= m < n");
    if (static_cast<int>(in.s.size()) != ell) validation_error("precondition: sign vector length");
    for (int i = in.m; i < in.n; ++i)
      if (in.s[static_cast<std::size_t>(i) - 1] != in.s[static_cast<std::size_t>(i)])
        validation_error("precondition: sign constant on the shared block m..n");
  }
}

namespace detail {

constexpr int kInflationFamily = 7;

// Positions m+1..n are relabeled to m (one shared class c(m) on the block);
// when `inflated`, the symbols of position m itself become c(m)(1 + a_1 + ... + a_p).
// Applies to c, d and e symbols alike.
inline SymPoly share_block(const SymPoly& poly, int m, int n, int p, bool inflated) {
  return poly.substitute([&](const Symbol& sym) -> std::optional<SymPoly> {
    if (sym.kind != SymbolKind::C && sym.kind != SymbolKind::D && sym.kind != SymbolKind::E)
      return std::nullopt;
    if (sym.label < m || sym.label > n) return std::nullopt;
    Symbol shared = sym;
    shared.label = m;
    SymPoly out = SymPoly::symbol(shared);
    if (sym.label == m && inflated)
      for (int t = 1; t <= p && t <= sym.degree; ++t) {
        Symbol lower = shared;
        lower.degree -= t;
        out += SymPoly::symbol(root_symbol(kInflationFamily, t)) * SymPoly::symbol(lower);
      }
    return out;
  });
}

}  // namespace detail

// Theta (or eta) at c' against the same polynomial at c, where the block
// m..n carries one class c(m) and c'(m) = c(m)(1 + a_1 + ... + a_p).
inline CheckReport check_inflation(const InflationInstance& in) {
  require_inflation_hypotheses(in);
  SymPoly base = in.variant == InflationVariant::Theta ? theta(in.rho, in.lambda)
                                                       : eta(in.rho, in.r, in.lambda, in.s);
  return compare_polys("inflation", in.describe(), detail::share_block(base, in.m, in.n, in.p, true),
                       detail::share_block(base, in.m, in.n, in.p, false));
}

// Seeded instances satisfying the hypotheses (block m..n sharing one class
// and, for eta, one sign): l <= 4, mu_1 <= 8.
inline std::vector<InflationInstance> random_inflation_instances(InflationVariant variant, int count,
                                                                 unsigned seed) {
  std::mt19937 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<InflationInstance> out;
  while (static_cast<int>(out.size()) < count) {
    InflationInstance in;
    in.variant = variant;
    const int ell = uniform(2, 4);
    if (variant == InflationVariant::Eta) in.r = uniform(0, ell);
    for (int j = 1; j <= ell; ++j)
      in.rho.entries.push_back(j <= in.r ? j - 1 : uniform(0, j - 1));
    in.m = uniform(1, ell - 1);
    in.n = uniform(in.m + 1, ell);
    if (variant == InflationVariant::Eta && !(in.n <= in.r || in.m >= in.r)) continue;
    in.p = uniform(1, in.n - in.m);
    // Nonincreasing mu, constant on m..n, then lambda = mu - rho.
    std::vector<int> mu(static_cast<std::size_t>(ell));
    int cap = 8;
    for (int j = 1; j <= ell; ++j) {
      int v = (j > in.m && j <= in.n) ? mu[static_cast<std::size_t>(j) - 2] : uniform(0, cap);
      mu[static_cast<std::size_t>(j) - 1] = v;
      cap = v;
    }
    bool ok = true;
    for (int j = 1; j <= ell; ++j) {
      const int part = mu[static_cast<std::size_t>(j) - 1] - in.rho.entries[static_cast<std::size_t>(j) - 1];
      if (part < 0) ok = false;
      in.lambda.parts.push_back(part);
    }
    if (!ok || !in.lambda.is_valid() || in.lambda.size() == 0) continue;
    if (variant == InflationVariant::Eta)
      for (int j = 1; j <= ell; ++j)
        in.s.push_back(j > in.m && j <= in.n ? in.s.back() : uniform(-1, 1));
    out.push_back(std::move(in));
  }
  return out;
}

namespace detail {

inline std::vector<SymPoly> roots(int family, int first, int last) {
  std::vector<SymPoly> out;
  for (int i = first; i <= last; ++i) out.push_back(root_var(i, family));
  return out;
}

inline std::vector<SymPoly> negated(std::vector<SymPoly> v) {
  for (auto& x : v) x = -x;
  return v;
}

inline std::vector<SymPoly> joined(std::vector<SymPoly> a, const std::vector<SymPoly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

// Identities for a line bundle L with root t and E with roots u_1..u_e:
// (a) c_e(E - L) = prod (u_i - t);
// (b) (-t)^a c_b(E - L) = c_{a+b}(E - L) for b >= e, a + b <= order;
// (c) c(E - F/F') = c(E - F) c(F') for F' spanned by the first roots of F.
inline CheckReport check_intro_identities(int max_rank, int order) {
  if (max_rank < 0 || max_rank > 4) validation_error("precondition: ranks <= 4");
  if (order < 0 || order > 10) validation_error("precondition: order <= 10");
  std::vector<CheckReport> parts;
  const SymPoly t = root_var(1, 2);
  for (int e = 0; e <= max_rank; ++e) {
    const auto u = detail::roots(1, 1, e);
    const Series s = chern_series(VirtualBundle{u, {t}}, order);
    const std::string re = "e=" + std::to_string(e);
    if (e <= order) {
      SymPoly prod(1);
      for (const auto& ui : u) prod *= ui - t;
      parts.push_back(compare_polys("intro_a", re, s.coefficient(e), prod));
    }
    for (int b = e; b <= order; ++b)
      for (int a = 0; a + b <= order; ++a)
        parts.push_back(compare_polys("intro_b", re + " a=" + std::to_string(a) + " b=" + std::to_string(b),
                                      (-t).pow(static_cast<unsigned>(a)) * s.coefficient(b),
                                      s.coefficient(a + b)));
    for (int f = 0; f <= max_rank; ++f)
      for (int fp = 0; fp <= f; ++fp) {
        const auto fr = detail::roots(3, 1, f);
        const std::vector<SymPoly> sub(fr.begin(), fr.begin() + fp);
        const std::vector<SymPoly> quot(fr.begin() + fp, fr.end());
        const Series lhs = chern_series(VirtualBundle{u, quot}, order);
        const Series rhs = series_product(chern_series(VirtualBundle{u, fr}, order),
                                          chern_series(VirtualBundle{sub, {}}, order));
        for (int d = 0; d <= order; ++d)
          parts.push_back(compare_polys(
              "intro_c", re + " f=" + std::to_string(f) + " f'=" + std::to_string(fp) + " deg=" + std::to_string(d),
              lhs.coefficient(d), rhs.coefficient(d)));
      }
  }
  return combine_reports("intro_identities",
                         "ranks<=" + std::to_string(max_rank) + " order=" + std::to_string(order), parts);
}

// Type A: E_j with roots e_1..e_j (t_i = -e_i), F_q with roots y_1..y_q.
// prod_j c_{q_j}(F_{q_j} - E_j/E_{j-1}) against Delta_q(c(1..s)) with
// c(j) = c(F_{q_j} - E_j).
inline CheckReport check_dominant_product_a(const std::vector<int>& q) {
  const int s = static_cast<int>(q.size());
  if (s < 1 || s > 3) validation_error("precondition: 1 <= s <= 3");
  for (int j = 0; j < s; ++j) {
    if (q[static_cast<std::size_t>(j)] < 1) validation_error("precondition: q_j >= 1");
    if (j > 0 && q[static_cast<std::size_t>(j)] > q[static_cast<std::size_t>(j) - 1])
      validation_error("precondition: q nonincreasing");
  }
  int total = 0;
  for (int v : q) total += v;
  const int order = total + s;
  SymPoly lhs(1);
  ChernAssignment assign;
  std::vector<int> clabel;
  for (int j = 1; j <= s; ++j) {
    const int qj = q[static_cast<std::size_t>(j) - 1];
    const auto f = detail::roots(2, 1, qj);
    lhs *= chern_series(VirtualBundle{f, {root_var(j, 1)}}, order).coefficient(qj);
    assign.set(j, chern_series(VirtualBundle{f, detail::roots(1, 1, j)}, order));
    clabel.push_back(j);
  }
  SymPoly rhs = specialize(schur_delta(Partition{q}, DeltaMethod::Determinant), clabel, assign);
  return compare_polys("dominant_product_a", "q=" + detail::join_ints(q), lhs, rhs);
}

// Type C root model: V has roots +-v_1..+-v_n, D_j = E_{p_j} has roots
// v_1..v_j (so t_i = -v_i), F_q = span(v_1..v_{n+1-q}) for q > 0 and
// F_{-q} = F_{q+1}^perp, whose roots are those of V except -v_1..-v_{n-q}.
// The product of bracket coefficients
//   [c(V - D_j - F_{q_j}) prod_{i<j} (1 - t_i) / prod_{i<=rho_j} (1 + t_i)]_{lambda_j}
// is compared with theta^(rho)_lambda at c(j) = c(V - D_j - F_{q_j}).
inline CheckReport check_dominant_product_c(int n, const std::vector<int>& q) {
  const int s = static_cast<int>(q.size());
  if (s < 1 || s > 3) validation_error("precondition: 1 <= s <= 3");
  if (n < s || n > 4) validation_error("infeasible root model", "need s <= n <= 4");
  TripleInput input;
  input.family = Family::C;
  for (int i = 1; i <= s; ++i) {
    input.first.push_back(i);
    input.p.push_back(n + 1 - i);
  }
  input.q = q;
  const NormalizedTriple t = build_type_c(input);
  if (t.ell != s) validation_error("infeasible root model", "triple needs an insertion");
  const auto v = detail::roots(1, 1, n);
  const auto all = detail::joined(v, detail::negated(v));
  auto f_roots = [&](int qj) {
    if (qj > n || qj < -n) validation_error("infeasible root model", "|q| exceeds n");
    if (qj > 0) return std::vector<SymPoly>(v.begin(), v.begin() + (n + 1 - qj));
    std::vector<SymPoly> out = v;
    for (int i = n - (-qj) + 1; i <= n; ++i) out.push_back(-v[static_cast<std::size_t>(i) - 1]);
    return out;
  };
  const int order = static_cast<int>(t.lambda.size()) + 2 * s + 2;
  SymPoly lhs(1);
  ChernAssignment assign;
  for (int j = 1; j <= s; ++j) {
    const int qj = q[static_cast<std::size_t>(j) - 1];
    const int rho_j = t.rho.entries[static_cast<std::size_t>(j) - 1];
    const int lam_j = t.lambda.parts[static_cast<std::size_t>(j) - 1];
    if (qj < 0 && rho_j > n + qj)
      validation_error("infeasible root model", "rho_j exceeds available roots");
    const auto d = detail::roots(1, 1, j);
    const auto f = f_roots(qj);
    VirtualBundle cj{all, detail::joined(d, f)};
    VirtualBundle bracket = cj;
    for (int i = 1; i < j; ++i) bracket.plus.push_back(v[static_cast<std::size_t>(i) - 1]);
    for (int i = 1; i <= rho_j; ++i) bracket.minus.push_back(-v[static_cast<std::size_t>(i) - 1]);
    lhs *= chern_series(bracket, order).coefficient(lam_j);
    assign.set(j, chern_series(cj, order));
  }
  SymPoly rhs = specialize(theta(t.rho, t.lambda), t.clabel, assign);
  return compare_polys("dominant_product_c", "n=" + std::to_string(n) + " q=" + detail::join_ints(q), lhs, rhs);
}

// Partitions with at most max_len nonzero parts and size at most max_size
// (size 0 excluded), in lexicographic order of the parts.
inline std::vector<std::vector<int>> enumerate_partitions(int max_len, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int cap, int left) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = 1; v <= std::min(cap, left); ++v) {
      cur.push_back(v);
      rec(v, left - v);
      cur.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

inline bool is_strict(const std::vector<int>& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] >= lambda[i - 1]) return false;
  return true;
}

// All rho with rho_j < j for which lambda is rho-strict.
inline std::vector<RhoSequence> compatible_rhos(const Partition& lambda) {
  std::vector<RhoSequence> out;
  RhoSequence cur;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == lambda.parts.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= static_cast<int>(j); ++v) {
      if (j > 0 && lambda.parts[j] + v > lambda.parts[j - 1] + cur.entries[j - 1]) break;
      cur.entries.push_back(v);
      rec(j + 1);
      cur.entries.pop_back();
    }
  };
  rec(0);
  return out;
}

// The four collapse properties at one lambda: rho = 0 gives Delta, full rho
// gives Pf(m_C) (strict lambda), z = 0 in theta_z gives theta (every
// compatible rho), and e = 0 in eta gives theta of the d classes (every r
// and compatible rho).
inline std::vector<CheckReport> check_collapse(const Partition& lambda) {
  std::vector<CheckReport> out;
  const std::string lam = "lambda=" + detail::join_ints(lambda.parts);
  const std::size_t ell = lambda.parts.size();
  out.push_back(compare_polys("collapse_rho_zero", lam, theta(RhoSequence::zeros(ell), lambda),
                              schur_delta(lambda, DeltaMethod::Determinant)));
  if (is_strict(lambda.parts))
    out.push_back(compare_polys("collapse_rho_full", lam, theta(RhoSequence::full(ell), lambda),
                                pfaffian(build_pf_matrix(PfVariant::C, lambda.parts))));
  auto z_to_zero = [](const Symbol& sym) -> std::optional<SymPoly> {
    if (sym.kind == SymbolKind::Z) return SymPoly();
    return std::nullopt;
  };
  auto e_to_zero = [](const Symbol& sym) -> std::optional<SymPoly> {
    if (sym.kind == SymbolKind::E) return SymPoly();
    return std::nullopt;
  };
  auto c_to_d = [](const Symbol& sym) -> std::optional<SymPoly> {
    if (sym.kind == SymbolKind::C) return SymPoly::symbol(chern_d(sym.label, sym.degree));
    return std::nullopt;
  };
  for (const auto& rho : compatible_rhos(lambda)) {
    const std::string params = lam + " rho=" + detail::join_ints(rho.entries);
    const SymPoly th = theta(rho, lambda);
    out.push_back(compare_polys("collapse_z_zero", params, theta_z(rho, lambda).substitute(z_to_zero), th));
    int r = 0;
    while (r < static_cast<int>(ell) && rho.entries[static_cast<std::size_t>(r)] == r) ++r;
    const SymPoly th_d = th.substitute(c_to_d);
    for (int rr = 0; rr <= r; ++rr)
      out.push_back(compare_polys("collapse_e_zero", params + " r=" + std::to_string(rr),
                                  eta(rho, rr, lambda, alternating_signs(static_cast<int>(ell), rr))
                                      .substitute(e_to_zero),
                                  th_d));
  }
  return out;
}

// Jacobi-Trudi with h-series in m variables against the tableau oracle.
inline CheckReport check_schur_oracle(const std::vector<int>& lambda, int m) {
  const Partition lam{lambda};
  ChernAssignment assign;
  assign.set(1, h_series(m, lam.size() + static_cast<int>(lambda.size())));
  SymPoly got = specialize(schur_delta(lam, DeltaMethod::Determinant),
                           single_entry_labels(static_cast<int>(lambda.size())), assign);
  return compare_polys("schur_oracle", "lambda=" + detail::join_ints(lambda) + " m=" + std::to_string(m),
                       got, schur_oracle(lambda, m));
}

// Full-rho theta with q-series in m variables against the Q-function oracle.
inline CheckReport check_q_oracle(const std::vector<int>& lambda, int m) {
  if (!is_strict(lambda)) validation_error("precondition: strict lambda");
  const Partition lam{lambda};
  ChernAssignment assign;
  assign.set(1, q_series(m, lam.size() + 1));
  SymPoly got = specialize(theta(RhoSequence::full(lambda.size()), lam),
                           single_entry_labels(static_cast<int>(lambda.size())), assign);
  return compare_polys("q_oracle", "lambda=" + detail::join_ints(lambda) + " m=" + std::to_string(m),
                       got, qfunction_oracle(lambda, m));
}

}  // namespace chernloci
