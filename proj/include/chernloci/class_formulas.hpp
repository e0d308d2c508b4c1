#pragma once

// Schur determinants, Pfaffians, theta- and eta-polynomials, and the locus
// class dispatch for normalized triples.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "chernloci/operator_calculus.hpp"
#include "chernloci/symbolic_ring.hpp"
#include "chernloci/triples.hpp"

namespace chernloci {

enum class DeltaMethod { Determinant, Raising };

namespace detail {

inline void require_partition(const Partition& lambda) {
  if (lambda.parts.empty()) validation_error("partition must have at least one part");
  if (!lambda.is_valid()) validation_error("lambda is not a partition");
}

inline SymPoly c_symbol(int label, int degree) {
  return degree < 0 ? SymPoly() : SymPoly::symbol(chern_c(label, degree));
}
inline SymPoly d_symbol(int label, int degree) {
  return degree < 0 ? SymPoly() : SymPoly::symbol(chern_d(label, degree));
}
inline SymPoly e_symbol(int label, int degree) {
  return degree < 0 ? SymPoly() : SymPoly::symbol(chern_e(label, degree));
}

inline int parity_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace detail

// Sum over all perfect matchings of `indices` (kept in increasing order) of
// the signed product of entry(i, j), expanding along the first index.
// Works for any commutative ring type T.
template <typename T, typename Entry>
T pfaffian_expand(const std::vector<int>& indices, Entry&& entry, const T& one) {
  std::map<unsigned, T> memo;
  const std::size_t n = indices.size();
  if (n % 2 != 0) internal_error("pfaffian expansion over an odd index set");
  std::function<T(unsigned)> rec = [&](unsigned mask) -> T {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t first = 0;
    while (!(mask & (1U << first))) ++first;
    T acc{};
    bool have = false;
    int sign = 1;
    for (std::size_t k = first + 1; k < n; ++k) {
      if (!(mask & (1U << k))) continue;
      T rest = rec(mask & ~(1U << first) & ~(1U << k));
      T term = entry(indices[first], indices[k]) * rest;
      if (sign < 0) term = -term;
      acc = have ? acc + term : term;
      have = true;
      sign = -sign;
    }
    return memo.emplace(mask, acc).first->second;
  };
  return rec(n == 0 ? 0U : (1U << n) - 1U);
}

// Entries a_ij for 0 <= i < j <= n; row 0 is used only when n is odd.
struct PfMatrix {
  int n = 0;
  std::map<std::pair<int, int>, SymPoly> entries;

  const SymPoly& at(int i, int j) const {
    auto it = entries.find({i, j});
    if (it == entries.end())
      validation_error("missing Pfaffian entry", std::to_string(i) + "," + std::to_string(j));
    return it->second;
  }
  void set(int i, int j, SymPoly v) { entries[{i, j}] = std::move(v); }
};

inline SymPoly pfaffian(const PfMatrix& m) {
  if (m.n < 0) validation_error("negative Pfaffian size");
  std::vector<int> indices;
  if (m.n % 2 == 1) indices.push_back(0);
  for (int i = 1; i <= m.n; ++i) indices.push_back(i);
  return pfaffian_expand<SymPoly>(
      indices, [&](int i, int j) -> const SymPoly& { return m.at(i, j); }, SymPoly(1));
}

inline SymPoly schur_delta(const Partition& lambda, DeltaMethod method) {
  detail::require_partition(lambda);
  const int ell = static_cast<int>(lambda.length());
  if (method == DeltaMethod::Raising) {
    std::vector<OperatorFactor> factors;
    for (int i = 1; i <= ell; ++i)
      for (int j = i + 1; j <= ell; ++j) factors.emplace_back(RaiseBinomial{i, j, -1, 1});
    return evaluate(apply_product(factors, OpExpression::monomial(lambda.parts)), EvalStyle::PlainC);
  }
  // Leibniz expansion of det(c(i)_{lambda_i + j - i}).
  std::vector<int> perm(static_cast<std::size_t>(ell));
  std::iota(perm.begin(), perm.end(), 1);
  SymPoly out;
  do {
    int inversions = 0;
    for (int a = 0; a < ell; ++a)
      for (int b = a + 1; b < ell; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    SymPoly term(detail::parity_sign(inversions));
    for (int i = 1; i <= ell && !term.is_zero(); ++i) {
      const int j = perm[static_cast<std::size_t>(i) - 1];
      term *= detail::c_symbol(i, lambda.parts[static_cast<std::size_t>(i) - 1] + j - i);
    }
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace detail {

inline void require_rho_strict(const RhoSequence& rho, const Partition& lambda) {
  require_partition(lambda);
  if (rho.entries.size() != lambda.length()) validation_error("rho and lambda lengths differ");
  if (!rho.is_valid()) validation_error("rho must satisfy 0 <= rho_j < j");
  if (!is_rho_strict(rho, lambda)) validation_error("lambda is not rho-strict");
}

// prod_{i<j} (1 - R_ij) times (1 + R_ij)^{-1} (or the z-deformed inverse) for
// i <= rho_j.
inline std::vector<OperatorFactor> theta_factors(const RhoSequence& rho, bool deformed) {
  const int ell = static_cast<int>(rho.entries.size());
  std::vector<OperatorFactor> factors;
  for (int j = 2; j <= ell; ++j)
    for (int i = 1; i < j; ++i) factors.emplace_back(RaiseBinomial{i, j, -1, 1});
  for (int j = 2; j <= ell; ++j)
    for (int i = 1; i <= rho.entries[static_cast<std::size_t>(j) - 1]; ++i) {
      if (deformed) factors.emplace_back(ZInverse{i, j});
      else factors.emplace_back(RaiseBinomial{i, j, 1, -1});
    }
  return factors;
}

}  // namespace detail

inline SymPoly theta(const RhoSequence& rho, const Partition& lambda) {
  detail::require_rho_strict(rho, lambda);
  return evaluate(apply_product(detail::theta_factors(rho, false),
                                OpExpression::monomial(lambda.parts)),
                  EvalStyle::PlainC);
}

inline SymPoly theta_z(const RhoSequence& rho, const Partition& lambda) {
  detail::require_rho_strict(rho, lambda);
  return evaluate(apply_product(detail::theta_factors(rho, true),
                                OpExpression::monomial(lambda.parts)),
                  EvalStyle::PlainC);
}

// Factors of the eta operator with parameter r: for j > r the products
// (1 - R_ij), i < r, over (1 + R_ij), i <= rho_j; then (1 - R_ij) for
// r <= i < j; then the delta ratios for 1 <= i < j <= r. Index ranges are
// clipped to i >= 1; empty products are 1.
inline std::vector<OperatorFactor> eta_factors(const RhoSequence& rho, int r) {
  const int ell = static_cast<int>(rho.entries.size());
  std::vector<OperatorFactor> factors;
  for (int j = r + 1; j <= ell; ++j) {
    for (int i = 1; i <= r - 1; ++i) factors.emplace_back(RaiseBinomial{i, j, -1, 1});
    for (int i = 1; i <= rho.entries[static_cast<std::size_t>(j) - 1]; ++i)
      factors.emplace_back(RaiseBinomial{i, j, 1, -1});
  }
  for (int i = std::max(r, 1); i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) factors.emplace_back(RaiseBinomial{i, j, -1, 1});
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) factors.emplace_back(DeltaRatio{i, j});
  return factors;
}

inline SymPoly eta(const RhoSequence& rho, int r, const Partition& lambda, const SignVector& s) {
  detail::require_rho_strict(rho, lambda);
  const int ell = static_cast<int>(lambda.length());
  if (r < 0 || r > ell) validation_error("eta requires 0 <= r <= ell");
  for (int j = 1; j <= r; ++j)
    if (rho.entries[static_cast<std::size_t>(j) - 1] != j - 1)
      validation_error("rho/r mismatch", "eta requires rho_j = j-1 for j <= r");
  if (s.size() != lambda.length()) validation_error("sign vector length differs from lambda");
  return evaluate(apply_product(eta_factors(rho, r), OpExpression::monomial(lambda.parts, s)),
                  EvalStyle::DPlusSE);
}

// s(i) = (-1)^i for i <= r, 0 beyond.
inline SignVector alternating_signs(int ell, int r) {
  SignVector s(static_cast<std::size_t>(ell), 0);
  for (int i = 1; i <= r; ++i) s[static_cast<std::size_t>(i) - 1] = detail::parity_sign(i);
  return s;
}

enum class PfVariant { C, Cz, D };

// Entry matrices whose Pfaffians equal the raising-operator Pfaffian
// products. Variant D uses sign vector s (defaults to s(i) = (-1)^i).
inline PfMatrix build_pf_matrix(PfVariant variant, const std::vector<int>& lambda,
                                SignVector s = {}) {
  if (lambda.empty()) validation_error("empty lambda");
  if (!in_cone(lambda)) validation_error("lambda must lie in the cone P");
  const int n = static_cast<int>(lambda.size());
  if (variant == PfVariant::D) {
    if (s.empty()) s = alternating_signs(n, n);
    if (s.size() != lambda.size()) validation_error("sign vector length differs from lambda");
  }
  auto lam = [&](int i) { return lambda[static_cast<std::size_t>(i) - 1]; };
  auto sgn = [&](int i) { return s[static_cast<std::size_t>(i) - 1]; };
  // d(i)_r + (-1)^exponent s(i) e(i)_r
  auto de = [&](int i, int r, int exponent) {
    return detail::d_symbol(i, r) +
           detail::e_symbol(i, r) * Integer(detail::parity_sign(exponent) * sgn(i));
  };
  PfMatrix m;
  m.n = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SymPoly entry;
      if (variant == PfVariant::D) {
        entry = de(i, lam(i), n - i + 1) * de(j, lam(j), n - j);
      } else {
        entry = detail::c_symbol(i, lam(i)) * detail::c_symbol(j, lam(j));
      }
      for (int k = 1; k <= lam(j); ++k) {
        SymPoly left;
        if (variant == PfVariant::Cz) {
          for (int t = 0; t <= k; ++t)
            left += detail::c_symbol(i, lam(i) + k - t) * SymPoly::symbol(z_symbol(), t) *
                    detail::binomial(k, t);
        } else if (variant == PfVariant::D) {
          left = detail::d_symbol(i, lam(i) + k);
        } else {
          left = detail::c_symbol(i, lam(i) + k);
        }
        SymPoly right = variant == PfVariant::D ? detail::d_symbol(j, lam(j) - k)
                                                : detail::c_symbol(j, lam(j) - k);
        entry += left * right * Integer(2 * detail::parity_sign(k));
      }
      m.set(i, j, std::move(entry));
    }
    if (n % 2 == 1) {
      m.set(0, i, variant == PfVariant::D ? de(i, lam(i), n - i) : detail::c_symbol(i, lam(i)));
    }
  }
  return m;
}

struct FormulaResult {
  Family family = Family::C;
  SymPoly poly;
  int two_power = 0;  // the class is poly / 2^two_power
  std::vector<int> clabel;
  Partition lambda;
  RhoSequence rho;
};

inline FormulaResult locus_class(const NormalizedTriple& t) {
  FormulaResult out;
  out.family = t.family;
  out.clabel = t.clabel;
  out.lambda = t.lambda;
  out.rho = t.rho;
  switch (t.family) {
    case Family::A:
      out.poly = schur_delta(t.lambda, DeltaMethod::Determinant);
      break;
    case Family::C:
      out.poly = theta(t.rho, t.lambda);
      break;
    case Family::B:
      out.poly = theta(t.rho, t.lambda);
      out.two_power = t.r;
      break;
    case Family::D:
      out.poly = eta(t.rho, t.r, t.lambda, alternating_signs(t.ell, t.r));
      out.two_power = t.r;
      break;
  }
  return out;
}

// Terms ordered by the per-label degree vector, descending; ties put
// monomials with fewer e-symbols first, then descending monomial order.
inline std::vector<std::pair<Monomial, Integer>> canonical_terms(const SymPoly& poly) {
  struct Keyed {
    std::vector<int> degrees;
    int e_count;
    Monomial mono;
    Integer coeff;
  };
  std::vector<Keyed> keyed;
  for (const auto& [m, c] : poly.terms()) {
    Keyed k{{}, 0, m, c};
    for (const auto& [sym, e] : m.factors()) {
      if (sym.kind == SymbolKind::C || sym.kind == SymbolKind::D || sym.kind == SymbolKind::E) {
        if (k.degrees.size() < static_cast<std::size_t>(sym.label))
          k.degrees.resize(static_cast<std::size_t>(sym.label), 0);
        k.degrees[static_cast<std::size_t>(sym.label) - 1] += sym.degree * e;
        if (sym.kind == SymbolKind::E) k.e_count += e;
      }
    }
    keyed.push_back(std::move(k));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degrees != b.degrees) return a.degrees > b.degrees;
    if (a.e_count != b.e_count) return a.e_count < b.e_count;
    return MonomialLess{}(b.mono, a.mono);
  });
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.emplace_back(std::move(k.mono), std::move(k.coeff));
  return out;
}

}  // namespace chernloci
