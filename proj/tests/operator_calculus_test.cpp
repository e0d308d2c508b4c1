#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chernloci/operator_calculus.hpp"
#include "test_support.hpp"

using namespace chernloci;
using namespace testing_support;

namespace {

OpExpression expr(std::initializer_list<std::pair<IndexVector, int>> terms) {
  OpExpression e(terms.begin()->first.size());
  for (const auto& [p, coeff] : terms)
    e.add_term(ExprKey{p, SignVector(p.size(), 0), 0}, Integer(coeff));
  return e;
}

// Suffix-sum test written out independently of in_cone.
bool oracle_in_cone(const IndexVector& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    int sum = 0;
    for (std::size_t t = k; t < p.size(); ++t) sum += p[t];
    if (sum < 0) return false;
  }
  return true;
}

// Every vector of length len with entries in [lo, hi].
std::vector<IndexVector> all_vectors(int len, int lo, int hi) {
  std::vector<IndexVector> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<IndexVector> next;
    for (const auto& v : out)
      for (int x = lo; x <= hi; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Cone, Membership) {
  EXPECT_TRUE(in_cone({1, 0, 1}));
  EXPECT_TRUE(in_cone({2, -1, 1}));
  EXPECT_FALSE(in_cone({1, 1, -1}));
  for (const auto& p : all_vectors(3, -2, 2)) EXPECT_EQ(in_cone(p), oracle_in_cone(p));
}

TEST(Raise, Examples) {
  EXPECT_EQ(raise({1, 0, 1}, 1, 2), (IndexVector{2, -1, 1}));
  EXPECT_EQ(raise(raise({1, 0, 1}, 2, 3), 1, 2), (IndexVector{2, 0, 0}));
  EXPECT_EQ(raise(raise({1, 0, 1}, 1, 2), 2, 3), (IndexVector{2, 0, 0}));
  EXPECT_EQ(raise({0, 0, 0}, 1, 3), (IndexVector{1, 0, -1}));
  EXPECT_THROW(raise({0, 0}, 2, 1), Error);
  EXPECT_THROW(raise({0, 0}, 1, 3), Error);
}

TEST(Raise, CompositionLaw) {
  for (const auto& p : all_vectors(3, -2, 2))
    EXPECT_EQ(raise(raise(p, 2, 3), 1, 2), raise(p, 1, 3));
}

TEST(ApplyFactor, OneMinusRaise) {
  auto out = apply_factor(RaiseBinomial{1, 2, -1, 1}, OpExpression::monomial({1, 1}));
  EXPECT_EQ(out, expr({{{1, 1}, 1}, {{2, 0}, -1}}));
}

TEST(ApplyFactor, InverseTruncatedByCone) {
  auto out = apply_factor(RaiseBinomial{1, 2, 1, -1}, OpExpression::monomial({1, 1}));
  // Oracle: enumerate R^k(p) and keep the ones in the cone.
  OpExpression want(2);
  IndexVector p{1, 1};
  for (int k = 0; k < 10; ++k) {
    IndexVector q{p[0] + k, p[1] - k};
    if (oracle_in_cone(q))
      want.add_term(ExprKey{q, {0, 0}, 0}, Integer(k % 2 == 0 ? 1 : -1));
  }
  EXPECT_EQ(out, want);
  EXPECT_EQ(out, expr({{{1, 1}, 1}, {{2, 0}, -1}}));
}

TEST(ApplyFactor, DeltaErasesSign) {
  auto out = apply_factor(Delta{1}, OpExpression::monomial({2, 1}, {-1, 1}));
  OpExpression want(2);
  want.add_term(ExprKey{{2, 1}, {0, 1}, 0}, Integer(1));
  EXPECT_EQ(out, want);
  EXPECT_EQ(apply_factor(Delta{1}, out), out);
}

TEST(ApplyFactor, DeltaRatioSeries) {
  auto out = apply_factor(DeltaRatio{1, 2}, OpExpression::monomial({2, 2}, {-1, 1}));
  OpExpression want(2);
  want.add_term(ExprKey{{2, 2}, {-1, 1}, 0}, Integer(1));
  want.add_term(ExprKey{{3, 1}, {0, 0}, 0}, Integer(-2));
  want.add_term(ExprKey{{4, 0}, {0, 0}, 0}, Integer(2));
  EXPECT_EQ(out, want);
}

TEST(ApplyFactor, ZInverseMatchesSeriesInTwoVariables) {
  // (1 + X)^{-1} with X = R + zS: coefficient of R^a (zS)^b is (-1)^{a+b} binom(a+b, a).
  auto out = apply_factor(ZInverse{1, 2}, OpExpression::monomial({1, 2}));
  OpExpression want(2);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      IndexVector q{1 + a, 2 - a - b};
      if (!oracle_in_cone(q)) continue;
      long long w = 1;
      for (int t = 1; t <= b; ++t) w = w * (a + t) / t;
      want.add_term(ExprKey{q, {0, 0}, b}, Integer(((a + b) % 2 == 0) ? w : -w));
    }
  EXPECT_EQ(out, want);
}

TEST(ApplyProduct, TypeARaisingEqualsDeterminantExpansion) {
  std::vector<OperatorFactor> fs = {RaiseBinomial{1, 2, -1, 1}, RaiseBinomial{1, 3, -1, 1},
                                    RaiseBinomial{2, 3, -1, 1}};
  SymPoly got = evaluate(apply_product(fs, OpExpression::monomial({2, 1, 0})), EvalStyle::PlainC);
  // 3x3 determinant det(c(i)_{lambda_i + j - i}) by cofactor expansion along row 1.
  auto m = [](int i, int j) {
    const int lambda[] = {2, 1, 0};
    int deg = lambda[i - 1] + j - i;
    return deg < 0 ? SymPoly() : c(i, deg);
  };
  SymPoly want = m(1, 1) * (m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2)) -
                 m(1, 2) * (m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1)) +
                 m(1, 3) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1));
  EXPECT_EQ(got, want);
}

TEST(ApplyProduct, EmptyListIsIdentity) {
  auto e = OpExpression::monomial({3, 1, 0});
  EXPECT_EQ(apply_product({}, e), e);
}

TEST(ApplyProduct, OrderIndependence) {
  std::vector<OperatorFactor> fs = {RaiseBinomial{1, 2, -1, 1}, RaiseBinomial{1, 2, 1, -1}};
  auto e = OpExpression::monomial({3, 1});
  auto forward = apply_product(fs, e);
  std::reverse(fs.begin(), fs.end());
  EXPECT_EQ(apply_product(fs, e), forward);
}

TEST(ApplyProduct, RandomPermutationsCommute) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = std::uniform_int_distribution<int>(2, 4)(rng);
    std::vector<OperatorFactor> fs;
    const int nf = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int f = 0; f < nf; ++f) {
      int i = std::uniform_int_distribution<int>(1, len - 1)(rng);
      int j = std::uniform_int_distribution<int>(i + 1, len)(rng);
      switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: fs.emplace_back(RaiseBinomial{i, j, -1, 1}); break;
        case 1: fs.emplace_back(RaiseBinomial{i, j, 1, -1}); break;
        case 2: fs.emplace_back(DeltaRatio{i, j}); break;
        case 3: fs.emplace_back(ZInverse{i, j}); break;
        case 4: fs.emplace_back(ZRatio{i, j}); break;
        default: fs.emplace_back(Delta{i}); break;
      }
    }
    IndexVector p(static_cast<std::size_t>(len));
    SignVector s(static_cast<std::size_t>(len));
    for (auto& v : p) v = std::uniform_int_distribution<int>(0, 3)(rng);
    for (auto& v : s) v = std::uniform_int_distribution<int>(-1, 1)(rng);
    auto e = OpExpression::monomial(p, s);
    auto base = apply_product(fs, e);
    std::shuffle(fs.begin(), fs.end(), rng);
    EXPECT_EQ(apply_product(fs, e), base) << "trial " << trial;
  }
}

TEST(Cone, ClosureUnderRaising) {
  // Outside the cone stays outside under every raising monomial.
  for (int len = 2; len <= 4; ++len) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= len; ++i)
      for (int j = i + 1; j <= len; ++j) pairs.emplace_back(i, j);
    for (const auto& p : all_vectors(len, -3, 3)) {
      if (oracle_in_cone(p)) continue;
      std::vector<IndexVector> frontier{p};
      for (const auto& [i, j] : pairs) {
        std::vector<IndexVector> next;
        for (const auto& v : frontier)
          for (int ex = 0; ex <= 2; ++ex) {
            IndexVector w = v;
            w[static_cast<std::size_t>(i) - 1] += ex;
            w[static_cast<std::size_t>(j) - 1] -= ex;
            next.push_back(w);
          }
        frontier = std::move(next);
      }
      for (const auto& v : frontier) ASSERT_FALSE(oracle_in_cone(v));
    }
  }
}

TEST(Cone, InverseExpansionTerminates) {
  // Every inverse factor applied to any cone vector with small entries ends.
  for (const auto& p : all_vectors(3, -5, 5)) {
    if (!in_cone(p)) continue;
    auto e = OpExpression::monomial(p);
    auto out = apply_factor(RaiseBinomial{1, 3, 1, -1}, e);
    out = apply_factor(ZInverse{2, 3}, out);
    EXPECT_FALSE(out.is_empty());
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(OpExpression::monomial({2, 1}), EvalStyle::PlainC), c(1, 2) * c(2, 1));
  EXPECT_EQ(evaluate(OpExpression::monomial({1, 1}, {-1, 1}), EvalStyle::DPlusSE),
            (d(1, 1) - e(1, 1)) * (d(2, 1) + e(2, 1)));
  EXPECT_TRUE(evaluate(OpExpression::monomial({2, -1, 1}), EvalStyle::PlainC).is_zero());
  EXPECT_THROW(evaluate(OpExpression::monomial({1, 1}, {1, 0}), EvalStyle::PlainC), Error);
}

TEST(OpExpression, RejectsBadSigns) {
  EXPECT_THROW(OpExpression::monomial({1, 1}, {2, 0}), Error);
}
