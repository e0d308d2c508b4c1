#pragma once

// Formal expressions sum a_{p,s} c_{p,s} supported on the cone P of index
// vectors with nonnegative suffix sums, and the raising (R_ij), lowering
// (S_j) and sign-erasing (delta_i) operators acting on them.
//
// Indices i, j are 1-based throughout, matching the usual R_ij notation.

#include <compare>
#include <map>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "chernloci/symbolic_ring.hpp"

namespace chernloci {

using IndexVector = std::vector<int>;
using SignVector = std::vector<int>;

inline bool in_cone(const IndexVector& p) {
  long long suffix = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    suffix += *it;
    if (suffix < 0) return false;
  }
  return true;
}

inline void check_pair(std::size_t length, int i, int j) {
  if (i < 1 || j <= i || static_cast<std::size_t>(j) > length)
    validation_error("operator index out of range",
                     "(" + std::to_string(i) + "," + std::to_string(j) + ") for length " +
                         std::to_string(length));
}

inline IndexVector raise(IndexVector p, int i, int j) {
  check_pair(p.size(), i, j);
  ++p[static_cast<std::size_t>(i) - 1];
  --p[static_cast<std::size_t>(j) - 1];
  return p;
}

// One key of an expression: index vector, sign vector, and the power of z
// carried by the coefficient.
struct ExprKey {
  IndexVector index;
  SignVector sign;
  int z_degree = 0;

  auto operator<=>(const ExprKey&) const = default;
};

class OpExpression {
 public:
  using TermMap = std::map<ExprKey, Integer>;

  explicit OpExpression(std::size_t length) : length_(length) {
    if (length == 0) validation_error("expression length must be positive");
  }

  // The single term c_{p,s}; s defaults to all zeros.
  static OpExpression monomial(const IndexVector& p, SignVector s = {}) {
    OpExpression e(p.size());
    if (s.empty()) s.assign(p.size(), 0);
    e.add_term(ExprKey{p, std::move(s), 0}, Integer(1));
    return e;
  }

  std::size_t length() const { return length_; }
  const TermMap& terms() const { return terms_; }
  bool is_empty() const { return terms_.empty(); }

  // Keys outside the cone are dropped.
  void add_term(const ExprKey& key, const Integer& c) {
    if (key.index.size() != length_ || key.sign.size() != length_)
      validation_error("expression key length mismatch");
    for (int v : key.sign)
      if (v < -1 || v > 1) validation_error("sign entries must lie in {-1,0,1}");
    if (c == 0 || !in_cone(key.index)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const OpExpression& a, const OpExpression& b) {
    return a.length_ == b.length_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t length_;
  TermMap terms_;
};

// (1 + sign*R_ij)^exponent with exponent in {+1, -1}.
struct RaiseBinomial {
  int i;
  int j;
  int sign;
  int exponent;
};
// (1 - delta_i delta_j R_ij) / (1 + delta_i delta_j R_ij)
struct DeltaRatio {
  int i;
  int j;
};
// (1 + R_ij + z S_j)^{-1}
struct ZInverse {
  int i;
  int j;
};
// (1 - R_ij - z S_j) / (1 + R_ij + z S_j)
struct ZRatio {
  int i;
  int j;
};
// delta_i
struct Delta {
  int i;
};

using OperatorFactor = std::variant<RaiseBinomial, DeltaRatio, ZInverse, ZRatio, Delta>;

namespace detail {

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Adds sum_{a,b} weight(a,b) * R_ij^a (z S_j)^b applied to `key`, enumerating
// each orbit until it leaves the cone. Lowering and raising both only
// decrease suffix sums, so the first exit ends each run.
template <typename Weight>
void add_zr_orbit(OpExpression& out, const ExprKey& key, const Integer& c, int i, int j,
                  Weight&& weight) {
  const auto ii = static_cast<std::size_t>(i) - 1;
  const auto jj = static_cast<std::size_t>(j) - 1;
  ExprKey row = key;
  for (int a = 0; in_cone(row.index); ++a) {
    ExprKey col = row;
    for (int b = 0; in_cone(col.index); ++b) {
      Integer w = weight(a, b);
      if (w != 0) out.add_term(col, c * w);
      --col.index[jj];
      ++col.z_degree;
    }
    ++row.index[ii];
    --row.index[jj];
  }
}

}  // namespace detail

inline OpExpression apply_factor(const OperatorFactor& f, const OpExpression& e) {
  OpExpression out(e.length());
  const std::size_t len = e.length();
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Delta>) {
          if (op.i < 1 || static_cast<std::size_t>(op.i) > len)
            validation_error("operator index out of range");
          for (const auto& [key, c] : e.terms()) {
            ExprKey k = key;
            k.sign[static_cast<std::size_t>(op.i) - 1] = 0;
            out.add_term(k, c);
          }
        } else {
          check_pair(len, op.i, op.j);
          const auto ii = static_cast<std::size_t>(op.i) - 1;
          const auto jj = static_cast<std::size_t>(op.j) - 1;
          for (const auto& [key, c] : e.terms()) {
            if constexpr (std::is_same_v<T, RaiseBinomial>) {
              if (op.sign != 1 && op.sign != -1) validation_error("binomial sign must be +-1");
              if (op.exponent == 1) {
                out.add_term(key, c);
                out.add_term(ExprKey{raise(key.index, op.i, op.j), key.sign, key.z_degree},
                             c * op.sign);
              } else if (op.exponent == -1) {
                // (1 + sR)^{-1} = sum_k (-s)^k R^k
                ExprKey k = key;
                Integer w = 1;
                while (in_cone(k.index)) {
                  out.add_term(k, c * w);
                  w *= -op.sign;
                  ++k.index[ii];
                  --k.index[jj];
                }
              } else {
                validation_error("binomial exponent must be +-1");
              }
            } else if constexpr (std::is_same_v<T, DeltaRatio>) {
              // 1 + 2 sum_{k>0} (-1)^k (delta_i delta_j R_ij)^k
              out.add_term(key, c);
              ExprKey k = key;
              k.sign[ii] = 0;
              k.sign[jj] = 0;
              Integer w = -2;
              for (;;) {
                ++k.index[ii];
                --k.index[jj];
                if (!in_cone(k.index)) break;
                out.add_term(k, c * w);
                w = -w;
              }
            } else if constexpr (std::is_same_v<T, ZInverse>) {
              detail::add_zr_orbit(out, key, c, op.i, op.j, [](int a, int b) {
                Integer w = detail::binomial(a + b, a);
                return ((a + b) % 2 == 0) ? w : Integer(-w);
              });
            } else if constexpr (std::is_same_v<T, ZRatio>) {
              detail::add_zr_orbit(out, key, c, op.i, op.j, [](int a, int b) {
                if (a + b == 0) return Integer(1);
                Integer w = 2 * detail::binomial(a + b, a);
                return ((a + b) % 2 == 0) ? w : Integer(-w);
              });
            }
          }
        }
      },
      f);
  return out;
}

inline OpExpression apply_product(const std::vector<OperatorFactor>& factors, OpExpression e) {
  for (const auto& f : factors) e = apply_factor(f, e);
  return e;
}

enum class EvalStyle { PlainC, DPlusSE };

// Sum of coefficient * z^k * prod_i c(i)_{p_i} (or prod_i (d(i)_{p_i} + s_i e(i)_{p_i})).
inline SymPoly evaluate(const OpExpression& e, EvalStyle style) {
  SymPoly out;
  for (const auto& [key, c] : e.terms()) {
    if (style == EvalStyle::PlainC) {
      for (int s : key.sign)
        if (s != 0) validation_error("plain_c evaluation with nonzero sign vector");
    }
    bool vanishes = false;
    for (int v : key.index)
      if (v < 0) vanishes = true;
    if (vanishes) continue;

    SymPoly term = SymPoly::constant(c);
    if (key.z_degree > 0) term *= SymPoly::symbol(z_symbol(), key.z_degree);
    for (std::size_t i = 0; i < key.index.size(); ++i) {
      const int label = static_cast<int>(i) + 1;
      if (style == EvalStyle::PlainC) {
        term *= SymPoly::symbol(chern_c(label, key.index[i]));
      } else {
        SymPoly factor = SymPoly::symbol(chern_d(label, key.index[i]));
        if (key.sign[i] != 0)
          factor += SymPoly::symbol(chern_e(label, key.index[i])) * Integer(key.sign[i]);
        term *= factor;
      }
    }
    out += term;
  }
  return out;
}

inline std::string factor_to_string(const OperatorFactor& f) {
  return std::visit(
      [](const auto& op) -> std::string {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Delta>) {
          return "delta" + std::to_string(op.i);
        } else {
          const std::string ij = std::to_string(op.i) + std::to_string(op.j);
          if constexpr (std::is_same_v<T, RaiseBinomial>) {
            std::string s = std::string("(1") + (op.sign > 0 ? "+" : "-") + "R" + ij + ")";
            return op.exponent == 1 ? s : s + "^-1";
          } else if constexpr (std::is_same_v<T, DeltaRatio>) {
            return "(1-dR" + ij + ")/(1+dR" + ij + ")";
          } else if constexpr (std::is_same_v<T, ZInverse>) {
            return "(1+R" + ij + "+zS" + std::to_string(op.j) + ")^-1";
          } else {
            return "(1-R" + ij + "-zS" + std::to_string(op.j) + ")/(1+R" + ij + "+zS" +
                   std::to_string(op.j) + ")";
          }
        }
      },
      f);
}

}  // namespace chernloci
