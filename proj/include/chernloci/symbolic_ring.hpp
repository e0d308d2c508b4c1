#pragma once

// Exact arithmetic: sparse multivariate polynomials with arbitrary-precision
// integer coefficients over abstract indexed symbols, rational functions, and
// truncated graded series.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chernloci/error.hpp"

namespace chernloci {

using Integer = boost::multiprecision::cpp_int;

enum class SymbolKind : std::uint8_t { C = 0, D = 1, E = 2, Root = 3, Z = 4 };

// c(label)_degree, d(label)_degree, e(label)_degree, a root variable of a
// named family, or the twisting class z.
struct Symbol {
  SymbolKind kind = SymbolKind::C;
  int family = 0;  // root family; 0 for every other kind
  int label = 0;
  int degree = 0;

  auto operator<=>(const Symbol&) const = default;

  // Grading weight: the subscript for Chern symbols, 1 for roots and z.
  int weight() const {
    return (kind == SymbolKind::Root || kind == SymbolKind::Z) ? 1 : degree;
  }

  std::string to_string() const {
    switch (kind) {
      case SymbolKind::C: return "c(" + std::to_string(label) + ")_" + std::to_string(degree);
      case SymbolKind::D: return "d(" + std::to_string(label) + ")_" + std::to_string(degree);
      case SymbolKind::E: return "e(" + std::to_string(label) + ")_" + std::to_string(degree);
      case SymbolKind::Root:
        return "x" + std::to_string(family) + "_" + std::to_string(label);
      case SymbolKind::Z: return "z";
    }
    return "?";
  }
};

inline Symbol chern_c(int label, int degree) { return {SymbolKind::C, 0, label, degree}; }
inline Symbol chern_d(int label, int degree) { return {SymbolKind::D, 0, label, degree}; }
inline Symbol chern_e(int label, int degree) { return {SymbolKind::E, 0, label, degree}; }
inline Symbol root_symbol(int family, int index) { return {SymbolKind::Root, family, index, 1}; }
inline Symbol z_symbol() { return {SymbolKind::Z, 0, 0, 1}; }

// Product of symbol powers, kept sorted by symbol with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, int>;

  Monomial() = default;
  explicit Monomial(Symbol s, int exponent = 1) {
    if (exponent > 0) factors_.emplace_back(s, exponent);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int weight() const {
    int w = 0;
    for (const auto& [s, e] : factors_) w += s.weight() * e;
    return w;
  }

  int exponent(const Symbol& s) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), s,
                               [](const Factor& f, const Symbol& x) { return f.first < x; });
    return (it != factors_.end() && it->first == s) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first == j->first) {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      } else if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else {
        out.factors_.push_back(*j++);
      }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
  }

  bool divides(const Monomial& other) const {
    for (const auto& [s, e] : factors_)
      if (other.exponent(s) < e) return false;
    return true;
  }

  // other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial out;
    for (const auto& [s, e] : other.factors_) {
      int r = e - exponent(s);
      if (r > 0) out.factors_.emplace_back(s, r);
    }
    return out;
  }

  bool operator==(const Monomial&) const = default;

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : factors_) {
      if (!out.empty()) out += "*";
      out += s.to_string();
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order: weight first, then the exponent of the smallest
// differing symbol decides (larger exponent = larger monomial).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int wa = a.weight();
    const int wb = b.weight();
    if (wa != wb) return wa < wb;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin();
    auto j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
      if (i->first == j->first) {
        if (i->second != j->second) return i->second < j->second;
        ++i;
        ++j;
      } else {
        return !(i->first < j->first);
      }
    }
    return i == fa.end() && j != fb.end();
  }
};

class SymPoly {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialLess>;

  SymPoly() = default;
  SymPoly(long long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
  }
  static SymPoly constant(const Integer& c) {
    SymPoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static SymPoly symbol(const Symbol& s, int exponent = 1) {
    SymPoly p;
    p.terms_.emplace(Monomial(s, exponent), Integer(1));
    return p;
  }
  static SymPoly term(const Monomial& m, const Integer& c) {
    SymPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  SymPoly& operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SymPoly& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= k;
    }
    return *this;
  }
  SymPoly operator-() const {
    SymPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Integer& k) { return a *= k; }
  friend SymPoly operator*(const Integer& k, SymPoly a) { return a *= k; }

  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  SymPoly pow(unsigned n) const {
    SymPoly result(1);
    SymPoly base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  // Weight of every term when homogeneous; nullopt otherwise (zero counts as
  // homogeneous of every degree and reports 0).
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    const int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
      if (m.weight() != w) return std::nullopt;
    return w;
  }

  // Replace each symbol for which `fn` returns a value; others stay.
  SymPoly substitute(const std::function<std::optional<SymPoly>(const Symbol&)>& fn) const {
    std::map<Symbol, std::optional<SymPoly>> cache;
    std::map<std::pair<Symbol, int>, SymPoly> powers;
    auto power_of = [&](const Symbol& s, int e) -> const SymPoly& {
      auto key = std::make_pair(s, e);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      auto cit = cache.find(s);
      if (cit == cache.end()) cit = cache.emplace(s, fn(s)).first;
      SymPoly value = cit->second ? cit->second->pow(static_cast<unsigned>(e)) : symbol(s, e);
      return powers.emplace(key, std::move(value)).first->second;
    };
    SymPoly out;
    for (const auto& [m, c] : terms_) {
      SymPoly t = constant(c);
      for (const auto& [s, e] : m.factors()) {
        t *= power_of(s, e);
        if (t.is_zero()) break;
      }
      out += t;
    }
    return out;
  }

  // Leading term in MonomialLess order.
  std::pair<Monomial, Integer> leading_term() const {
    if (terms_.empty()) internal_error("leading term of zero polynomial");
    const auto& [m, c] = *terms_.rbegin();
    return {m, c};
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!first) out << (c < 0 ? " - " : " + ");
      else if (c < 0) out << "-";
      first = false;
      Integer a = c < 0 ? Integer(-c) : c;
      if (m.is_one()) {
        out << a;
      } else {
        if (a != 1) out << a << "*";
        out << m.to_string();
      }
    }
    return out.str();
  }

 private:
  TermMap terms_;
};

// Exact quotient a / b; a nonzero remainder is an internal error.
inline SymPoly exact_divide(const SymPoly& a, const SymPoly& b) {
  if (b.is_zero()) validation_error("division by zero polynomial");
  SymPoly rem = a;
  SymPoly quot;
  const auto [lm, lc] = b.leading_term();
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading_term();
    if (!lm.divides(rm) || rc % lc != 0) internal_error("inexact polynomial division");
    SymPoly step = SymPoly::term(lm.quotient_of(rm), rc / lc);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

inline SymPoly symbol_poly(const Symbol& s) { return SymPoly::symbol(s); }

// Numerator/denominator pair; no gcd reduction, equality by cross-multiplication.
struct RatFun {
  SymPoly num;
  SymPoly den;

  RatFun(SymPoly n, SymPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) validation_error("zero denominator");
  }
  RatFun(SymPoly n) : num(std::move(n)), den(1) {}  // NOLINT(google-explicit-constructor)

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return a + RatFun(-b.num, b.den);
  }
};

inline bool ratfun_equal(const RatFun& a, const RatFun& b) {
  if (a.den.is_zero() || b.den.is_zero()) validation_error("zero denominator");
  if (a.den == b.den) return a.num == b.num;
  return a.num * b.den == b.num * a.den;
}

// Graded series truncated above `order`: coefficient k is homogeneous of
// weight k. Results of binary operations are valid to the smaller order.
class Series {
 public:
  Series() : coeffs_(1, SymPoly(1)) {}
  explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) validation_error("negative series order");
  }
  static Series one(int order) {
    Series s(order);
    s.coeffs_[0] = SymPoly(1);
    return s;
  }
  static Series from_coefficients(std::vector<SymPoly> coeffs) {
    if (coeffs.empty()) validation_error("empty series");
    Series s;
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const SymPoly& coefficient(int k) const {
    if (k < 0 || k > order()) validation_error("series coefficient out of range");
    return coeffs_[static_cast<std::size_t>(k)];
  }
  // Coefficient, zero below degree 0; throws above the truncation order.
  SymPoly at(int k) const {
    if (k < 0) return {};
    return coefficient(k);
  }
  SymPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<SymPoly>& coefficients() const { return coeffs_; }

  Series truncated(int order) const {
    Series out(std::min(order, this->order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = coeffs_[static_cast<std::size_t>(k)];
    return out;
  }

  // this * (1 + root)
  Series times_linear(const SymPoly& root) const {
    Series out = *this;
    for (int k = order(); k >= 1; --k) out[k] += root * coeffs_[static_cast<std::size_t>(k) - 1];
    return out;
  }

  // this / (1 + root)
  Series over_linear(const SymPoly& root) const {
    Series out = *this;
    for (int k = 1; k <= order(); ++k) out[k] -= root * out[k - 1];
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<SymPoly> coeffs_;
};

inline Series series_product(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  Series out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coefficient(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coefficient(j).is_zero()) continue;
      out[i + j] += a.coefficient(i) * b.coefficient(j);
    }
  }
  return out;
}

inline Series series_inverse(const Series& s) {
  if (!(s.coefficient(0) == SymPoly(1))) validation_error("series inverse needs constant term 1");
  Series out(s.order());
  out[0] = SymPoly(1);
  for (int k = 1; k <= s.order(); ++k) {
    SymPoly acc;
    for (int i = 1; i <= k; ++i) acc += s.coefficient(i) * out.coefficient(k - i);
    out[k] = -acc;
  }
  return out;
}

}  // namespace chernloci
