#pragma once

// Chern series of virtual bundles given by roots, substitution of those
// series for the abstract c/d/e symbols, and tableau / symmetrization
// oracles for Schur and Schur Q polynomials.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "chernloci/symbolic_ring.hpp"

namespace chernloci {

// Formal difference of sums of line bundles, each given by its first Chern
// class (a degree-one polynomial).
struct VirtualBundle {
  std::vector<SymPoly> plus;
  std::vector<SymPoly> minus;

  int rank() const { return static_cast<int>(plus.size()) - static_cast<int>(minus.size()); }
};

// prod_plus (1 + x) / prod_minus (1 + y), truncated at `order`.
inline Series chern_series(const VirtualBundle& vb, int order) {
  Series s = Series::one(order);
  for (const auto& x : vb.plus) s = s.times_linear(x);
  for (const auto& y : vb.minus) s = s.over_linear(y);
  return s;
}

inline SymPoly root_var(int index, int family = 0) {
  return SymPoly::symbol(root_symbol(family, index));
}

// 1 / prod (1 - x_i): complete homogeneous symmetric functions.
inline Series h_series(int vars, int order) {
  VirtualBundle vb;
  for (int i = 1; i <= vars; ++i) vb.minus.push_back(-root_var(i));
  return chern_series(vb, order);
}

// prod (1 + x_i) / (1 - x_i): the q_k of Schur Q-functions.
inline Series q_series(int vars, int order) {
  VirtualBundle vb;
  for (int i = 1; i <= vars; ++i) {
    vb.plus.push_back(root_var(i));
    vb.minus.push_back(-root_var(i));
  }
  return chern_series(vb, order);
}

enum class EntryKind { C, DE };

// Total Chern classes per triple entry. A DE entry supplies the d(k)
// symbols; e(k) symbols stay abstract and are relabeled to the entry.
struct ChernAssignment {
  std::map<int, Series> series_by_entry;
  std::map<int, EntryKind> kind_map;

  void set(int entry, Series s, EntryKind kind = EntryKind::C) {
    if (!(s.coefficient(0) == SymPoly(1)))
      validation_error("assigned series must have constant term 1");
    series_by_entry.insert_or_assign(entry, std::move(s));
    kind_map[entry] = kind;
  }
};

// Every label 1..ell mapped to the same entry.
inline std::vector<int> single_entry_labels(int ell) { return std::vector<int>(static_cast<std::size_t>(ell), 1); }

// Replaces c(k)_r (resp. d(k)_r) by coefficient r of the series of entry
// clabel[k-1], and e(k)_r by e(clabel[k-1])_r.
inline SymPoly specialize(const SymPoly& poly, const std::vector<int>& clabel,
                          const ChernAssignment& assign) {
  auto entry_of = [&](int label) {
    if (label < 1 || static_cast<std::size_t>(label) > clabel.size())
      validation_error("symbol label outside the c-label map", std::to_string(label));
    return clabel[static_cast<std::size_t>(label) - 1];
  };
  return poly.substitute([&](const Symbol& s) -> std::optional<SymPoly> {
    if (s.kind != SymbolKind::C && s.kind != SymbolKind::D && s.kind != SymbolKind::E)
      return std::nullopt;
    const int entry = entry_of(s.label);
    auto it = assign.series_by_entry.find(entry);
    if (it == assign.series_by_entry.end())
      validation_error("missing entry in assignment", std::to_string(entry));
    const EntryKind kind = assign.kind_map.at(entry);
    if (s.kind == SymbolKind::E) {
      if (kind != EntryKind::DE) validation_error("kind mismatch", "e-symbol on a c entry");
      return SymPoly::symbol(chern_e(entry, s.degree));
    }
    if ((s.kind == SymbolKind::C) != (kind == EntryKind::C))
      validation_error("kind mismatch", s.to_string() + " on entry " + std::to_string(entry));
    if (s.degree > it->second.order())
      validation_error("truncation order below formula degree", s.to_string());
    return it->second.coefficient(s.degree);
  });
}

// Sum of x^T over semistandard tableaux T of shape lambda with entries <= m.
inline SymPoly schur_oracle(const std::vector<int>& lambda, int m) {
  if (m < 1) validation_error("need at least one variable");
  std::vector<int> shape;
  for (int part : lambda)
    if (part > 0) shape.push_back(part);
  if (static_cast<int>(shape.size()) > m) return {};
  std::vector<std::vector<int>> tab(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(static_cast<std::size_t>(shape[r]), 0);
  SymPoly out;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      SymPoly mono(1);
      for (const auto& row : tab)
        for (int v : row) mono *= root_var(v);
      out += mono;
      return;
    }
    if (c == tab[r].size()) return fill(r + 1, 0);
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      tab[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

// Schur Q polynomial in x_1..x_m by symmetrizing
// x^lambda prod_{i <= l, i < j} (x_i + x_j) / (x_i - x_j) over S_m, with the
// Vandermonde denominator cleared exactly.
inline SymPoly qfunction_oracle(const std::vector<int>& lambda, int m) {
  if (m < 1) validation_error("need at least one variable");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) validation_error("Q-function needs positive parts");
    if (i > 0 && lambda[i] >= lambda[i - 1]) validation_error("Q-function needs a strict partition");
  }
  const int ell = static_cast<int>(lambda.size());
  if (ell > m) return {};
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  SymPoly numerator;
  do {
    auto x = [&](int i) { return root_var(perm[static_cast<std::size_t>(i) - 1]); };
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    SymPoly term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= ell; ++i) term *= x(i).pow(static_cast<unsigned>(lambda[static_cast<std::size_t>(i) - 1]));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) term *= i <= ell ? x(i) + x(j) : x(i) - x(j);
    numerator += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  SymPoly vandermonde(1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) vandermonde *= root_var(i) - root_var(j);
  SymPoly p = exact_divide(numerator, vandermonde);
  Integer stabilizer = 1;
  for (int t = 2; t <= m - ell; ++t) stabilizer *= t;
  p = exact_divide(p, SymPoly::constant(stabilizer));
  return p * Integer(Integer(1) << ell);
}

}  // namespace chernloci
