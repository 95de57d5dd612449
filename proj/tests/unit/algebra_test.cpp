#include <gtest/gtest.h>

#include "sov/algebra/determinant.hpp"
#include "sov/algebra/eps_series.hpp"
#include "sov/algebra/errors.hpp"
#include "sov/algebra/poly_json.hpp"
#include "sov/algebra/rational_function.hpp"
#include "support/builders.hpp"

namespace sov {
namespace {

using testing::C;
using testing::P;
using testing::PolyGen;
using testing::V;

const VarSet kX{"x"};
const VarSet kX12{"x1", "x2"};

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-12"), Rational(-12));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_EQ(factorial(5), Rational(120));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(RationalTest, FusedMultiplyAdd) {
  Rational acc(1, 2);
  acc.add_product(Rational(1, 3), Rational(3));
  EXPECT_EQ(acc, Rational(3, 2));
  Rational z;
  z.sub_product(Rational(4), Rational(5));
  EXPECT_EQ(z, Rational(-20));
}

TEST(LaurentPolyTest, DifferenceOfSquares) {
  const auto a = V(kX, "x") + V(kX, "x", -1);
  const auto b = V(kX, "x") - V(kX, "x", -1);
  EXPECT_EQ(poly_arith(a, b, PolyOp::kMul), V(kX, "x", 2) - V(kX, "x", -2));
  const auto c = V(kX12, "x1") - V(kX12, "x2");
  const auto d = V(kX12, "x1") + V(kX12, "x2");
  EXPECT_EQ(c * d, V(kX12, "x1", 2) - V(kX12, "x2", 2));
}

TEST(LaurentPolyTest, AdditiveIdentityAndCancellation) {
  const auto f = P(kX12, {{{1, -1}, Rational(2)}, {{0, 3}, Rational(-1, 2)}});
  EXPECT_EQ(poly_arith(f, LaurentPoly(kX12), PolyOp::kAdd), f);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).size(), 0u);
}

TEST(LaurentPolyTest, CanonicalFormMergesAndDropsZeros) {
  const auto p = P(kX, {{{1}, Rational(1)}, {{1}, Rational(-1)}, {{2}, Rational(3)}, {{0}, Rational(0)}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].exps, Exponents{2});
  EXPECT_EQ(p.to_string(), "3*x^2");
}

TEST(LaurentPolyTest, MismatchedVariablesThrow) {
  EXPECT_THROW(V(kX, "x") + V(kX12, "x1"), VarSetMismatch);
  EXPECT_THROW(V(kX, "x") * V(VarSet{"y"}, "y"), VarSetMismatch);
}

TEST(LaurentPolyTest, RingAxiomsOnRandomTriples) {
  PolyGen gen(12345);
  const VarSet vs{"a", "b", "c"};
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.poly(vs), b = gen.poly(vs), c = gen.poly(vs);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - b, -(b - a));
  }
}

TEST(DivisionTest, Examples) {
  const auto num = V(kX, "x", 2) - V(kX, "x", -2);
  const auto den = V(kX, "x") - V(kX, "x", -1);
  const auto q = divide_exact(num, den);
  EXPECT_EQ(q, V(kX, "x") + V(kX, "x", -1));
  EXPECT_EQ(q * den, num);
  EXPECT_EQ(divide_exact(num, C(kX, 1)), num);
  EXPECT_EQ(divide_exact(V(kX12, "x1", 2) - V(kX12, "x2", 2), V(kX12, "x1") + V(kX12, "x2")),
            V(kX12, "x1") - V(kX12, "x2"));
}

TEST(DivisionTest, RemainderIsAnError) {
  EXPECT_THROW(divide_exact(V(kX, "x", 2) + C(kX, 1), V(kX, "x") - C(kX, 1)), NotDivisible);
  EXPECT_THROW(divide_exact(V(kX12, "x1") + V(kX12, "x2"), V(kX12, "x1") - V(kX12, "x2")), NotDivisible);
  EXPECT_THROW(divide_exact(V(kX, "x"), LaurentPoly(kX)), std::domain_error);
}

TEST(DivisionTest, ProductDividedByFactorRecoversFactor) {
  PolyGen gen(777);
  const VarSet vs{"a", "b", "c"};
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.poly(vs, 5, 3);
    const auto b = gen.nonzero_poly(vs, 4, 2);
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
}

TEST(SubstitutionTest, Examples) {
  const VarSet vs{"y", "w", "x"};
  EXPECT_EQ(substitute_monomial(V(vs, "y", 3), "y", V(vs, "w") * V(vs, "x")),
            V(vs, "w", 3) * V(vs, "x", 3));
  EXPECT_EQ(substitute_monomial(V(vs, "y") - V(vs, "y", -1), "y", V(vs, "x") * V(vs, "w", -1)),
            V(vs, "x") * V(vs, "w", -1) - V(vs, "x", -1) * V(vs, "w"));
  EXPECT_EQ(substitute_monomial(V(vs, "y", 2) - V(vs, "y", -2), "y", V(vs, "w") * V(vs, "x")),
            V(vs, "w", 2) * V(vs, "x", 2) - V(vs, "w", -2) * V(vs, "x", -2));
}

TEST(SubstitutionTest, CoefficientIsRaisedToThePower) {
  const VarSet vs{"y", "x"};
  const auto image = V(vs, "x") * Rational(2);
  EXPECT_EQ(substitute_monomial(V(vs, "y", -2), "y", image), V(vs, "x", -2) * Rational(1, 4));
}

TEST(SubstitutionTest, RejectsNonMonomialImages) {
  const VarSet vs{"y", "x"};
  EXPECT_THROW(substitute_monomial(V(vs, "y"), "y", V(vs, "x") + C(vs, 1)), std::invalid_argument);
  EXPECT_THROW(substitute_monomial(V(vs, "y"), "y", V(vs, "y") * V(vs, "x")), std::invalid_argument);
}

TEST(EvalAtOneTest, Examples) {
  const auto f = V(kX12, "x1") + V(kX12, "x1", -1) + V(kX12, "x2") + V(kX12, "x2", -1);
  const VarSet x1{"x1"};
  EXPECT_EQ(eval_at_one(f, {"x2"}), V(x1, "x1") + V(x1, "x1", -1) + C(x1, 2));
  EXPECT_EQ(eval_at_one(f, {}), f);
  EXPECT_TRUE(eval_at_one(V(kX12, "x1", 2) - V(kX12, "x2", -2), {"x1", "x2"}).is_zero());
  EXPECT_THROW(eval_at_one(f, {"q"}), std::invalid_argument);
}

TEST(DeterminantTest, Examples) {
  PolyMatrix vdm{{V(kX12, "x1"), C(kX12, 1)}, {V(kX12, "x2"), C(kX12, 1)}};
  EXPECT_EQ(det_poly_matrix(vdm, kX12), V(kX12, "x1") - V(kX12, "x2"));

  const VarSet none;
  PolyMatrix numeric{{C(none, 27), C(none, 3)}, {C(none, 1), C(none, 1)}};
  EXPECT_EQ(det_poly_matrix(numeric, none), C(none, 24));

  PolyMatrix id(3, std::vector<LaurentPoly>(3, LaurentPoly(kX)));
  for (int i = 0; i < 3; ++i) id[i][i] = C(kX, 1);
  EXPECT_EQ(det_poly_matrix(id, kX), C(kX, 1));
  EXPECT_EQ(bareiss_determinant(id, kX), C(kX, 1));
  EXPECT_EQ(det_poly_matrix(PolyMatrix{}, kX), C(kX, 1));
}

TEST(DeterminantTest, BareissNeedsPivoting) {
  PolyMatrix m{{LaurentPoly(kX), C(kX, 1)}, {V(kX, "x"), C(kX, 1)}};
  EXPECT_EQ(bareiss_determinant(m, kX), -V(kX, "x"));
  PolyMatrix singular{{V(kX, "x"), C(kX, 1)}, {V(kX, "x", 2), V(kX, "x")}};
  EXPECT_TRUE(bareiss_determinant(singular, kX).is_zero());
}

TEST(DeterminantTest, BareissMatchesCofactorOnRandomMatrices) {
  PolyGen gen(4242);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      PolyMatrix m(n, std::vector<LaurentPoly>(n));
      for (auto& row : m) {
        for (auto& e : row) e = gen.uniform(0, 4) == 0 ? LaurentPoly(kX12) : gen.poly(kX12, 3, 2);
      }
      EXPECT_EQ(bareiss_determinant(m, kX12), cofactor_determinant(m, kX12)) << "n=" << n;
    }
  }
}

TEST(EpsSeriesTest, ExpExamples) {
  const auto e = eps_series_exp(2, 2);
  const VarSet none;
  EXPECT_EQ(e[0], C(none, 1));
  EXPECT_EQ(e[1], C(none, 2));
  EXPECT_EQ(e[2], C(none, 2));
  const auto one = eps_series_exp(0, 5);
  EXPECT_EQ(one.valuation(), 0u);
  for (std::size_t m = 1; m <= 5; ++m) EXPECT_TRUE(one[m].is_zero());
  const auto sinh = eps_series_exp(3, 1) - eps_series_exp(-3, 1);
  EXPECT_TRUE(sinh[0].is_zero());
  EXPECT_EQ(sinh[1], C(none, 6));
}

TEST(EpsSeriesTest, ExpVariableMatchesExpSeries) {
  const VarSet vs{"x", "E"};
  // x * E^3 - E^-1 -> x * exp(3 eps) - exp(-eps)
  const auto f = V(vs, "x") * V(vs, "E", 3) - V(vs, "E", -1);
  const auto s = expand_exp_variable(f, "E", 3);
  const VarSet x{"x"};
  const auto expected = EpsSeries::constant(V(x, "x"), 3) * eps_series_exp(3, 3, x) - eps_series_exp(-1, 3, x);
  EXPECT_EQ(s, expected);
}

TEST(EpsSeriesTest, TruncatedProductMatchesFullProduct) {
  PolyGen gen(99);
  const VarSet vs{"u"};
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(0, 4));
    std::vector<LaurentPoly> a, b;
    for (std::size_t i = 0; i <= n; ++i) {
      a.push_back(gen.poly(vs, 2, 2));
      b.push_back(gen.poly(vs, 2, 2));
    }
    const EpsSeries prod = EpsSeries(n, a) * EpsSeries(n, b);
    // Full (untruncated) Cauchy product, read off below the truncation order.
    for (std::size_t m = 0; m <= n; ++m) {
      LaurentPoly full(vs);
      for (std::size_t i = 0; i <= m; ++i) full += a[i] * b[m - i];
      EXPECT_EQ(prod[m], full);
    }
  }
}

TEST(RationalFunctionTest, ReducesAndCompares) {
  const VarSet z{"z"};
  const RationalFunction f(V(z, "z", 2) - C(z, 1), V(z, "z") - C(z, 1));
  EXPECT_TRUE(f.denominator().is_constant());
  EXPECT_EQ(f.numerator(), V(z, "z") + C(z, 1));
  const RationalFunction g(V(z, "z") * Rational(2) + C(z, 2), C(z, 2));
  EXPECT_EQ(f, g);
  const RationalFunction h(C(z, 1), V(z, "z", 2) - C(z, 1));
  EXPECT_TRUE((h - h).is_zero());
  EXPECT_EQ(h * RationalFunction(V(z, "z") - C(z, 1)), RationalFunction(C(z, 1), V(z, "z") + C(z, 1)));
}

TEST(RationalFunctionTest, EulerDerivativeQuotientRule) {
  const VarSet z{"z"};
  // D(1/(z-1)) = -z/(z-1)^2
  const RationalFunction f(C(z, 1), V(z, "z") - C(z, 1));
  const auto zm1 = V(z, "z") - C(z, 1);
  EXPECT_EQ(f.euler_derivative(), RationalFunction(-V(z, "z"), zm1 * zm1));
  // Polynomial case agrees with the Laurent Euler operator.
  const auto p = V(z, "z", 3) - V(z, "z", -2);
  EXPECT_EQ(RationalFunction(p).euler_derivative(), RationalFunction(euler_derivative(p, 0)));
}

TEST(JsonTest, CanonicalEncodingRoundTrips) {
  PolyGen gen(5);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.poly(kX12, 5, 3) * Rational(1, 7);
    const auto j = poly_to_json(p);
    EXPECT_EQ(poly_from_json(j), p);
    const std::string text = j.dump();
    EXPECT_EQ(poly_to_json(poly_from_json(nlohmann::ordered_json::parse(text))).dump(), text);
  }
  const auto half = C(kX, Rational(1, 2));
  EXPECT_EQ(poly_to_json(half).dump(), R"({"vars":["x"],"terms":[{"e":[0],"n":"1","d":"2"}]})");
}

}  // namespace
}  // namespace sov
