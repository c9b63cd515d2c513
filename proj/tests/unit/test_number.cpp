#include <gtest/gtest.h>

#include "printers.hpp"

#include <cmath>

#include "pltower/error.hpp"
#include "pltower/number.hpp"

using namespace pltower;

namespace {

Number q(long n, long d = 1) { return make_rational(n, d); }
Number sqrt_of(long n) { return Number::surd(0, 1, n); }

}  // namespace

TEST(Number, RationalArithmetic) {
  EXPECT_EQ(arith(Op::Add, q(1, 3), q(1, 6)), q(1, 2));
  Number x = q(5, 7);
  EXPECT_EQ(arith(Op::Mul, x, arith(Op::Invert, x)), q(1));
  EXPECT_EQ(arith(Op::Neg, x), q(-5, 7));
}

TEST(Number, DivisionByZero) {
  try {
    (void)q(0).inverse();
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Number, InfinityOperandRejected) {
  EXPECT_THROW((void)(Number::pos_inf() + q(1)), Error);
}

TEST(Number, GoldenRatioShift) {
  std::vector<Number> roots = quad_roots(1, -1, -1);
  ASSERT_EQ(roots.size(), 2u);
  Number phi = roots[1];
  Number s = phi + q(-1, 2);
  ASSERT_TRUE(s.is_quadratic());
  // sqrt(5)/2 has minimal polynomial 4t^2 - 5
  auto [a, b, c] = s.quadratic().minimal_polynomial();
  EXPECT_EQ(a, 4);
  EXPECT_EQ(b, 0);
  EXPECT_EQ(c, -5);
  EXPECT_NEAR(s.approx(), std::sqrt(5.0) / 2, 1e-12);
  EXPECT_EQ(s, Number::surd(0, make_rational(1, 2), 5));
}

TEST(Number, Compare) {
  EXPECT_EQ(cmp(q(1, 2), q(1, 2)), std::strong_ordering::equal);
  EXPECT_EQ(cmp(sqrt_of(2), sqrt_of(3)), std::strong_ordering::less);
  EXPECT_EQ(cmp(Number::neg_inf(), q(-1000000)), std::strong_ordering::less);
  EXPECT_EQ(cmp(Number::pos_inf(), sqrt_of(7)), std::strong_ordering::greater);
  // 1 + sqrt(2) against the near rational 2414213/1000000
  Number x = Number::surd(1, 1, 2);
  EXPECT_LT(q(2414213, 1000000), x);
  EXPECT_LT(x, q(2414214, 1000000));
}

TEST(Number, CrossFieldComparison) {
  // sqrt(2) + sqrt(3) is not in either field but comparison stays exact
  EXPECT_LT(sqrt_of(2), sqrt_of(3));
  EXPECT_NE(sqrt_of(8), sqrt_of(2));
  EXPECT_EQ(sqrt_of(8), Number::surd(0, 2, 2));
}

TEST(Number, QuadRoots) {
  std::vector<Number> r = quad_roots(1, -1, 0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], q(0));
  EXPECT_EQ(r[1], q(1));

  r = quad_roots(1, -1, -1);
  ASSERT_EQ(r.size(), 2u);
  for (const Number& t : r) EXPECT_EQ(t * t - t - q(1), q(0));
  EXPECT_NEAR(r[0].approx(), (1 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(r[1].approx(), (1 + std::sqrt(5.0)) / 2, 1e-12);

  EXPECT_TRUE(quad_roots(1, 0, 1).empty());
  r = quad_roots(1, -2, 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], q(1));
  // degenerate linear case
  r = quad_roots(0, 2, -1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], q(1, 2));
  EXPECT_THROW(quad_roots(0, 0, 0), Error);
}

TEST(Number, Dyadic) {
  EXPECT_TRUE(is_dyadic(make_rational(3, 8)));
  EXPECT_FALSE(is_dyadic(make_rational(1, 3)));
  EXPECT_EQ(dyadic_slope_exponent(make_rational(1, 2)), -1);
  EXPECT_EQ(dyadic_slope_exponent(Rational(8)), 3);
  EXPECT_FALSE(dyadic_slope_exponent(Rational(3)).has_value());
}

TEST(Number, TextRoundTrip) {
  for (const Number& x : {q(-7, 3), q(0), Number::pos_inf(), Number::neg_inf(), sqrt_of(2), Number::surd(1, -3, 5)}) {
    EXPECT_EQ(Number::parse(x.str()), x) << x.str();
  }
  EXPECT_EQ(Number::parse("1/2"), q(1, 2));
  EXPECT_THROW(Number::parse("1/0"), Error);
  EXPECT_THROW(Number::parse("1/2x"), Error);
}

TEST(Number, RationalBetween) {
  Number lo = sqrt_of(2);
  Number hi = Number::surd(0, 1, 2) + q(1, 1000000);
  Number m = rational_between(lo, hi);
  EXPECT_LT(lo, m);
  EXPECT_LT(m, hi);
}
