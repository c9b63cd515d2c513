#pragma once

// Exact arithmetic kernel: rationals, real quadratic irrationals and the two
// infinities, under one totally ordered value type.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pltower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical p/q; throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// `p/q`, or `p` when q == 1.
std::string to_string(const Rational& q);

/// Accepts `p/q` or `p` (optionally signed). Throws SyntaxError.
Rational parse_rational(std::string_view text);

int sign(const Rational& q);

bool is_dyadic(const Rational& x);

/// n such that x == 2^n, if any. Throws NonPositive for x <= 0.
std::optional<long> dyadic_slope_exponent(const Rational& x);

class Number;

/// u + v*sqrt(d) with v != 0 and d > 1 not a perfect square. The
/// representation is not unique (d may keep a square factor), so equality and
/// field membership are decided on invariants rather than on the fields.
///
/// The published form is the minimal polynomial a*t^2 + b*t + c (primitive
/// integers, a > 0) together with a dyadic isolating interval obtained by
/// bisecting [floor, floor + 1] until the conjugate root is excluded.
class QuadReal {
public:
  const Rational& rational_part() const noexcept { return u_; }
  const Rational& surd_coefficient() const noexcept { return v_; }
  const Integer& radicand() const noexcept { return d_; }

  std::array<Integer, 3> minimal_polynomial() const;
  std::pair<Rational, Rational> isolating_interval() const;

  QuadReal conjugate() const { return QuadReal(u_, -v_, d_); }

  bool same_field(const QuadReal& other) const;

  /// sign(this - q), exact.
  int compare(const Rational& q) const;

  Integer floor() const;
  double approx() const;

  /// `root(a,b,c;[lo,hi])`
  std::string str() const;

  friend bool operator==(const QuadReal& x, const QuadReal& y);

private:
  friend class Number;
  QuadReal(Rational u, Rational v, Integer d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {}

  Rational u_;
  Rational v_;
  Integer d_;
};

/// Canonical exact real: Rational | QuadReal | +inf | -inf. A QuadReal is
/// never rational, so a value has exactly one encoding.
class Number {
public:
  struct Infinity {
    int sign;
    friend bool operator==(Infinity, Infinity) = default;
  };

  Number() : value_(Rational(0)) {}
  Number(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Number(long n) : value_(Rational(n)) {}   // NOLINT(google-explicit-constructor)
  Number(int n) : value_(Rational(n)) {}    // NOLINT(google-explicit-constructor)
  Number(const QuadReal& x) : value_(x) {}  // NOLINT(google-explicit-constructor)

  /// u + v*sqrt(n) for integer n >= 0, canonicalised (rational when v == 0 or
  /// n is a perfect square).
  static Number surd(const Rational& u, const Rational& v, const Integer& n);
  static Number infinity(int sign) { return Number(Infinity{sign > 0 ? 1 : -1}); }
  static Number pos_inf() { return infinity(1); }
  static Number neg_inf() { return infinity(-1); }

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
  bool is_quadratic() const noexcept { return std::holds_alternative<QuadReal>(value_); }
  bool is_finite() const noexcept { return !std::holds_alternative<Infinity>(value_); }
  bool is_pos_inf() const noexcept;
  bool is_neg_inf() const noexcept;

  const Rational& rational() const;
  const QuadReal& quadratic() const;

  int sign() const;
  Number inverse() const;

  Number operator-() const;
  friend Number operator+(const Number& x, const Number& y);
  friend Number operator-(const Number& x, const Number& y);
  friend Number operator*(const Number& x, const Number& y);
  friend Number operator/(const Number& x, const Number& y);

  friend std::strong_ordering operator<=>(const Number& x, const Number& y);
  friend bool operator==(const Number& x, const Number& y);

  /// Rational text, `root(...)`, `inf` or `-inf`.
  std::string str() const;
  static Number parse(std::string_view text);

  double approx() const;

private:
  explicit Number(Infinity inf) : value_(inf) {}
  // u + v*sqrt(d) with d already reduced; rational when v == 0.
  static Number quad(const Rational& u, const Rational& v, const Integer& d);

  std::variant<Rational, QuadReal, Infinity> value_;
};

enum class Op { Add, Mul, Neg, Invert };

/// Dispatching entry point over the kernel operations. `y` is required for
/// Add/Mul and ignored otherwise.
Number arith(Op op, const Number& x, const std::optional<Number>& y = std::nullopt);

std::strong_ordering cmp(const Number& x, const Number& y);

/// Real roots of a*t^2 + b*t + c in increasing order. Throws
/// AllCoefficientsZero.
std::vector<Number> quad_roots(const Rational& a, const Rational& b, const Rational& c);

/// A rational strictly between lo and hi (lo < hi), preferring short dyadics.
Rational rational_between(const Number& lo, const Number& hi);

/// Rational enclosure [lo, hi] of x of width at most `width` (x finite).
std::pair<Rational, Rational> enclose(const Number& x, const Rational& width);

inline const Number& min(const Number& x, const Number& y) { return y < x ? y : x; }
inline const Number& max(const Number& x, const Number& y) { return x < y ? y : x; }

}  // namespace pltower
