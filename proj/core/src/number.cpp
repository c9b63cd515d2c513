#include "pltower/number.hpp"

#include <cmath>
#include <numeric>

#include "parse_detail.hpp"
#include "pltower/error.hpp"

namespace pltower {

namespace {

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 2000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// n = s^2 * d for n > 0. Only small square factors are extracted; the caller
// never relies on d being square-free.
std::pair<Integer, Integer> split_square(Integer n) {
  if (is_square(n)) return {isqrt(n), Integer(1)};
  Integer s = 1;
  for (unsigned long p : small_primes()) {
    Integer p2 = Integer(p) * p;
    if (p2 > n) break;
    while (n % p2 == 0) {
      n /= p2;
      s *= p;
    }
  }
  if (is_square(n)) {
    s *= isqrt(n);
    n = 1;
  }
  return {s, n};
}

// sign(a + b*sqrt(d)), d not a perfect square.
int sign_sum(const Rational& a, const Rational& b, const Integer& d) {
  int sa = sign(a);
  int sb = sign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a * a;
  Rational rhs = b * b * d;
  return lhs > rhs ? sa : sb;
}

// w with v*sqrt(from) == w*sqrt(to); requires from*to to be a square.
Rational rebase(const Rational& v, const Integer& from, const Integer& to) {
  Integer root = isqrt(Integer(from * to));
  return Rational(v * make_rational(root, to));
}

Rational dyadic_between(const Rational& a, const Rational& b) {
  // a < b
  Integer scale = 1;
  for (;;) {
    Integer m = floor_of(Rational(a * scale)) + 1;
    Rational candidate(m, scale);
    candidate.canonicalize();
    if (candidate < b) return candidate;
    scale *= 2;
  }
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  detail::Scanner in(text);
  Rational q = detail::read_rational(in);
  in.expect_end();
  return q;
}

int sign(const Rational& q) { return sgn(q); }

bool is_dyadic(const Rational& x) {
  const Integer& den = x.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

std::optional<long> dyadic_slope_exponent(const Rational& x) {
  if (sgn(x) <= 0) throw Error(ErrorKind::NonPositive, "slope exponent requires a positive argument");
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (num == 1 && mpz_popcount(den.get_mpz_t()) == 1) {
    return -static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
  }
  if (den == 1 && mpz_popcount(num.get_mpz_t()) == 1) {
    return static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2) - 1);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// QuadReal

bool operator==(const QuadReal& x, const QuadReal& y) {
  return x.u_ == y.u_ && sgn(x.v_) == sgn(y.v_) && x.v_ * x.v_ * x.d_ == y.v_ * y.v_ * y.d_;
}

bool QuadReal::same_field(const QuadReal& other) const { return is_square(Integer(d_ * other.d_)); }

int QuadReal::compare(const Rational& q) const { return sign_sum(Rational(u_ - q), v_, d_); }

std::array<Integer, 3> QuadReal::minimal_polynomial() const {
  // (t - u)^2 - v^2 d
  Rational b = -2 * u_;
  Rational c = u_ * u_ - v_ * v_ * d_;
  Integer l;
  mpz_lcm(l.get_mpz_t(), b.get_den_mpz_t(), c.get_den_mpz_t());
  Integer ia = l;
  Integer ib = b.get_num() * (l / b.get_den());
  Integer ic = c.get_num() * (l / c.get_den());
  Integer g = gcd(gcd(ia, ib), ic);
  return {ia / g, ib / g, ic / g};
}

Integer QuadReal::floor() const {
  // |v| sqrt(d) = sqrt(N/D) lies in [w, w + 1) with w = floor(sqrt(N*D) / D)
  Rational sq = v_ * v_ * d_;
  Integer w = isqrt(Integer(sq.get_num() * sq.get_den())) / sq.get_den();
  Integer k = sgn(v_) > 0 ? floor_of(Rational(u_ + w)) : floor_of(Rational(u_ - w - 1)) - 1;
  while (compare(Rational(k + 1)) >= 0) ++k;
  return k;
}

std::pair<Rational, Rational> QuadReal::isolating_interval() const {
  Rational lo(floor());
  Rational hi = lo + 1;
  QuadReal other = conjugate();
  while (other.compare(lo) >= 0 && other.compare(hi) <= 0) {
    Rational mid = (lo + hi) / 2;
    if (compare(mid) < 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

double QuadReal::approx() const { return u_.get_d() + v_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadReal::str() const {
  auto [a, b, c] = minimal_polynomial();
  auto [lo, hi] = isolating_interval();
  return "root(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ";[" + to_string(lo) + "," +
         to_string(hi) + "])";
}

// ---------------------------------------------------------------------------
// Number

Number Number::quad(const Rational& u, const Rational& v, const Integer& d) {
  if (sgn(v) == 0) return Number(u);
  return Number(QuadReal(u, v, d));
}

Number Number::surd(const Rational& u, const Rational& v, const Integer& n) {
  if (n < 0) throw Error(ErrorKind::OutOfDomain, "square root of a negative integer");
  if (sgn(v) == 0 || n == 0) return Number(u);
  auto [s, d] = split_square(n);
  if (d == 1) return Number(Rational(u + v * s));
  return Number(QuadReal(u, Rational(v * s), d));
}

namespace {

void require_finite(const Number& x, const char* what) {
  if (!x.is_finite()) throw Error(ErrorKind::InfiniteOperand, std::string(what) + " of an infinite operand");
}

}  // namespace

bool Number::is_pos_inf() const noexcept {
  auto* inf = std::get_if<Infinity>(&value_);
  return inf != nullptr && inf->sign > 0;
}

bool Number::is_neg_inf() const noexcept {
  auto* inf = std::get_if<Infinity>(&value_);
  return inf != nullptr && inf->sign < 0;
}

const Rational& Number::rational() const {
  if (!is_rational()) throw Error(ErrorKind::OutOfDomain, "number " + str() + " is not rational");
  return std::get<Rational>(value_);
}

const QuadReal& Number::quadratic() const {
  if (!is_quadratic()) throw Error(ErrorKind::OutOfDomain, "number " + str() + " is not a quadratic irrational");
  return std::get<QuadReal>(value_);
}

int Number::sign() const {
  if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  if (auto* x = std::get_if<QuadReal>(&value_)) return x->compare(Rational(0));
  return std::get<Infinity>(value_).sign;
}

Number Number::operator-() const {
  if (auto* q = std::get_if<Rational>(&value_)) return Number(Rational(-*q));
  if (auto* x = std::get_if<QuadReal>(&value_)) return Number(QuadReal(-x->u_, -x->v_, x->d_));
  return infinity(-std::get<Infinity>(value_).sign);
}

Number Number::inverse() const {
  require_finite(*this, "inverse");
  if (sign() == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (auto* q = std::get_if<Rational>(&value_)) return Number(Rational(1 / *q));
  const QuadReal& x = std::get<QuadReal>(value_);
  Rational norm = x.u_ * x.u_ - x.v_ * x.v_ * x.d_;
  return Number(QuadReal(Rational(x.u_ / norm), Rational(-x.v_ / norm), x.d_));
}

Number operator+(const Number& x, const Number& y) {
  require_finite(x, "sum");
  require_finite(y, "sum");
  if (x.is_rational() && y.is_rational()) return Number(Rational(x.rational() + y.rational()));
  if (x.is_rational()) return y + x;
  const QuadReal& a = x.quadratic();
  if (y.is_rational()) return Number::quad(Rational(a.rational_part() + y.rational()), a.surd_coefficient(), a.radicand());
  const QuadReal& b = y.quadratic();
  if (!a.same_field(b)) {
    throw Error(ErrorKind::IncompatibleFields, "sum of " + a.str() + " and " + b.str() + " leaves degree 2");
  }
  return Number::quad(Rational(a.rational_part() + b.rational_part()), Rational(a.surd_coefficient() + rebase(b.surd_coefficient(), b.radicand(), a.radicand())), a.radicand());
}

Number operator-(const Number& x, const Number& y) { return x + (-y); }

Number operator*(const Number& x, const Number& y) {
  require_finite(x, "product");
  require_finite(y, "product");
  if (x.is_rational() && y.is_rational()) return Number(Rational(x.rational() * y.rational()));
  if (x.is_rational()) return y * x;
  const QuadReal& a = x.quadratic();
  if (y.is_rational()) {
    const Rational& r = y.rational();
    if (sgn(r) == 0) return Number(Rational(0));
    return Number::quad(Rational(a.rational_part() * r), Rational(a.surd_coefficient() * r), a.radicand());
  }
  const QuadReal& b = y.quadratic();
  if (!a.same_field(b)) {
    throw Error(ErrorKind::IncompatibleFields, "product of " + a.str() + " and " + b.str() + " leaves degree 2");
  }
  Rational w = rebase(b.surd_coefficient(), b.radicand(), a.radicand());
  Rational u = a.rational_part() * b.rational_part() + a.surd_coefficient() * w * a.radicand();
  Rational v = a.rational_part() * w + b.rational_part() * a.surd_coefficient();
  return Number::quad(u, v, a.radicand());
}

Number operator/(const Number& x, const Number& y) { return x * y.inverse(); }

std::strong_ordering operator<=>(const Number& x, const Number& y) { return cmp(x, y); }

bool operator==(const Number& x, const Number& y) { return x.value_ == y.value_; }

std::string Number::str() const {
  if (auto* q = std::get_if<Rational>(&value_)) return to_string(*q);
  if (auto* x = std::get_if<QuadReal>(&value_)) return x->str();
  return std::get<Infinity>(value_).sign > 0 ? "inf" : "-inf";
}

double Number::approx() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  if (auto* x = std::get_if<QuadReal>(&value_)) return x->approx();
  return std::get<Infinity>(value_).sign > 0 ? HUGE_VAL : -HUGE_VAL;
}

Number Number::parse(std::string_view text) {
  detail::Scanner in(text);
  Number x = detail::read_number(in);
  in.expect_end();
  return x;
}

Number arith(Op op, const Number& x, const std::optional<Number>& y) {
  auto other = [&]() -> const Number& {
    if (!y) throw Error(ErrorKind::Precondition, "binary operation needs a second operand");
    return *y;
  };
  switch (op) {
    case Op::Add: return x + other();
    case Op::Mul: return x * other();
    case Op::Neg: return -x;
    case Op::Invert: return x.inverse();
  }
  return x;
}

std::strong_ordering cmp(const Number& x, const Number& y) {
  auto from_sign = [](int s) {
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (!x.is_finite() || !y.is_finite()) {
    int sx = x.is_finite() ? 0 : x.sign();
    int sy = y.is_finite() ? 0 : y.sign();
    return from_sign(sx - sy);
  }
  if (x.is_rational() && y.is_rational()) return from_sign(mpq_cmp(x.rational().get_mpq_t(), y.rational().get_mpq_t()));
  if (x.is_quadratic() && y.is_rational()) return from_sign(x.quadratic().compare(y.rational()));
  if (x.is_rational()) return from_sign(-y.quadratic().compare(x.rational()));

  const QuadReal& a = x.quadratic();
  const QuadReal& b = y.quadratic();
  if (a.same_field(b)) {
    Rational du = a.rational_part() - b.rational_part();
    Rational dv = a.surd_coefficient() - rebase(b.surd_coefficient(), b.radicand(), a.radicand());
    return from_sign(sign_sum(du, dv, a.radicand()));
  }
  // Distinct quadratic fields never share a root, so bisection separates them.
  auto [alo, ahi] = a.isolating_interval();
  auto [blo, bhi] = b.isolating_interval();
  for (;;) {
    if (ahi <= blo) return std::strong_ordering::less;
    if (bhi <= alo) return std::strong_ordering::greater;
    if (ahi - alo >= bhi - blo) {
      Rational mid = (alo + ahi) / 2;
      if (a.compare(mid) < 0) ahi = mid; else alo = mid;
    } else {
      Rational mid = (blo + bhi) / 2;
      if (b.compare(mid) < 0) bhi = mid; else blo = mid;
    }
  }
}

std::vector<Number> quad_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) {
    throw Error(ErrorKind::AllCoefficientsZero, "quadratic with all coefficients zero");
  }
  if (sgn(a) == 0) {
    if (sgn(b) == 0) return {};
    return {Number(Rational(-c / b))};
  }
  Rational disc = b * b - 4 * a * c;
  if (sgn(disc) < 0) return {};
  Rational u = -b / (2 * a);
  if (sgn(disc) == 0) return {Number(u)};
  // sqrt(N/D) = sqrt(N*D) / D
  Rational v = abs(Rational(1 / (2 * a * disc.get_den())));
  Integer n = disc.get_num() * disc.get_den();
  return {Number::surd(u, Rational(-v), n), Number::surd(u, v, n)};
}

std::pair<Rational, Rational> enclose(const Number& x, const Rational& width) {
  if (x.is_rational()) return {x.rational(), x.rational()};
  const QuadReal& a = x.quadratic();
  auto [lo, hi] = a.isolating_interval();
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (a.compare(mid) < 0) hi = mid; else lo = mid;
  }
  return {lo, hi};
}

Rational rational_between(const Number& lo, const Number& hi) {
  if (!(lo < hi)) throw Error(ErrorKind::Precondition, "empty interval (" + lo.str() + ", " + hi.str() + ")");
  if (lo.is_neg_inf() && hi.is_pos_inf()) return Rational(0);
  if (lo.is_neg_inf()) {
    Integer f = hi.is_rational() ? floor_of(hi.rational()) : hi.quadratic().floor();
    return Rational(f - 1);
  }
  if (hi.is_pos_inf()) {
    Integer f = lo.is_rational() ? floor_of(lo.rational()) : lo.quadratic().floor();
    return Rational(f + 1);
  }
  if (lo.is_rational() && hi.is_rational()) return dyadic_between(lo.rational(), hi.rational());

  // Shrink the irrational endpoints' enclosures until they separate.
  Rational width(1);
  for (;;) {
    Rational a = lo.is_rational() ? lo.rational() : enclose(lo, width).second;
    Rational b = hi.is_rational() ? hi.rational() : enclose(hi, width).first;
    if (a < b) return dyadic_between(a, b);
    width /= 16;
  }
}

// ---------------------------------------------------------------------------
// text

namespace detail {

Rational read_rational(Scanner& in) {
  SourcePosition where = [&] {
    in.skip_ws();
    return in.position();
  }();
  std::string token(in.number_token());
  bool negative = false;
  if (token.front() == '+' || token.front() == '-') {
    negative = token.front() == '-';
    token.erase(0, 1);
  }
  auto slash = token.find('/');
  std::string num = token.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
    throw Error(ErrorKind::Syntax, "malformed rational '" + token + "'", where);
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + token + "'", where);
  Rational q = make_rational(n, d);
  return negative ? Rational(-q) : q;
}

Number read_number(Scanner& in) {
  if (in.accept("-inf")) return Number::neg_inf();
  if (in.accept("+inf") || in.accept("inf")) return Number::pos_inf();
  if (in.accept("root")) {
    in.expect('(');
    Rational a = read_rational(in);
    in.expect(',');
    Rational b = read_rational(in);
    in.expect(',');
    Rational c = read_rational(in);
    in.expect(';');
    in.expect('[');
    Rational lo = read_rational(in);
    in.expect(',');
    Rational hi = read_rational(in);
    in.expect(']');
    in.expect(')');
    if (lo > hi) in.fail_semantic("isolating interval has lo > hi");
    if (sgn(a) == 0 && sgn(b) == 0) in.fail_semantic("root() needs a nonzero leading coefficient");
    std::vector<Number> inside;
    for (Number& r : quad_roots(a, b, c)) {
      if (Number(lo) <= r && r <= Number(hi)) inside.push_back(std::move(r));
    }
    if (inside.size() != 1) in.fail_semantic("isolating interval must contain exactly one root");
    return inside.front();
  }
  return Number(read_rational(in));
}

}  // namespace detail

}  // namespace pltower
