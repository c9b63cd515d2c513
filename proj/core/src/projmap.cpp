#include "pltower/projmap.hpp"

#include <algorithm>

#include "parse_detail.hpp"
#include "pltower/error.hpp"

namespace pltower {

Mobius::Mobius(Rational p, Rational q, Rational r, Rational s) {
  if (!(p * s - q * r > 0)) {
    throw Error(ErrorKind::Semantic, "Mobius determinant must be positive (orientation-preserving)");
  }
  Integer l = 1;
  for (const Rational* e : {&p, &q, &r, &s}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e->get_den_mpz_t());
  Integer entries[4] = {Integer(p * l), Integer(q * l), Integer(r * l), Integer(s * l)};
  Integer g = 0;
  for (const Integer& e : entries) g = gcd(g, e);
  int lead = 0;
  for (const Integer& e : entries) {
    if (sgn(e) != 0) {
      lead = sgn(e);
      break;
    }
  }
  if (lead < 0) g = -g;
  p_ = Rational(entries[0] / g);
  q_ = Rational(entries[1] / g);
  r_ = Rational(entries[2] / g);
  s_ = Rational(entries[3] / g);
}

bool Mobius::is_identity() const { return sgn(q_) == 0 && sgn(r_) == 0 && p_ == s_; }

Rational Mobius::apply(const Rational& t) const {
  Rational den = r_ * t + s_;
  if (sgn(den) == 0) throw Error(ErrorKind::PoleInPiece, "Mobius piece has a pole at " + to_string(t));
  return (p_ * t + q_) / den;
}

Number Mobius::apply(const Number& t) const {
  if (t.is_rational()) return Number(apply(t.rational()));
  if (!t.is_finite()) {
    if (is_affine()) return Number::infinity(t.sign() * sgn(p_) * sgn(s_));
    return Number(Rational(p_ / r_));
  }
  Number den = Number(r_) * t + Number(s_);
  if (den.sign() == 0) throw Error(ErrorKind::PoleInPiece, "Mobius piece has a pole at " + t.str());
  return (Number(p_) * t + Number(q_)) / den;
}

Number Mobius::derivative(const Number& t) const {
  Number den = Number(r_) * t + Number(s_);
  if (den.sign() == 0) throw Error(ErrorKind::PoleInPiece, "Mobius piece has a pole at " + t.str());
  return Number(det()) / (den * den);
}

Mobius Mobius::then(const Mobius& n) const {
  return {n.p_ * p_ + n.q_ * r_, n.p_ * q_ + n.q_ * s_, n.r_ * p_ + n.s_ * r_, n.r_ * q_ + n.s_ * s_};
}

// ---------------------------------------------------------------------------

PPMap::PPMap(std::vector<Rational> breakpoints, std::vector<Mobius> pieces) {
  if (pieces.size() != breakpoints.size() + 1) {
    throw Error(ErrorKind::Semantic, "a PP map with m breakpoints needs m+1 pieces");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) throw Error(ErrorKind::Semantic, "breakpoints not increasing");
  }
  if (!pieces.front().is_affine() || !pieces.back().is_affine()) {
    throw Error(ErrorKind::Semantic, "unbounded pieces must be affine to give a bijection of the line");
  }
  for (std::size_t i = 1; i + 1 < pieces.size(); ++i) {
    const Mobius& m = pieces[i];
    if (m.is_affine()) continue;
    Rational pole = -m.s() / m.r();
    if (breakpoints[i - 1] <= pole && pole <= breakpoints[i]) {
      throw Error(ErrorKind::PoleInPiece, "piece on [" + to_string(breakpoints[i - 1]) + "," +
                                              to_string(breakpoints[i]) + "] has a pole at " + to_string(pole));
    }
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i].apply(breakpoints[i]) != pieces[i + 1].apply(breakpoints[i])) {
      throw Error(ErrorKind::Semantic, "pieces disagree at breakpoint " + to_string(breakpoints[i]) + " (discontinuous)");
    }
  }
  pieces_.push_back(std::move(pieces.front()));
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i + 1] == pieces_.back()) continue;
    breaks_.push_back(std::move(breakpoints[i]));
    pieces_.push_back(std::move(pieces[i + 1]));
  }
}

std::size_t PPMap::piece_index(const Number& x) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x,
                             [](const Number& v, const Rational& b) { return v < Number(b); });
  return static_cast<std::size_t>(it - breaks_.begin());
}

Number PPMap::lower(std::size_t piece) const { return piece == 0 ? Number::neg_inf() : Number(breaks_[piece - 1]); }

Number PPMap::upper(std::size_t piece) const {
  return piece == breaks_.size() ? Number::pos_inf() : Number(breaks_[piece]);
}

std::string PPMap::str() const {
  std::string out = "PP[";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Mobius& m = pieces_[i];
    out += " (" + lower(i).str() + "," + upper(i).str() + " : " + to_string(m.p()) + "," + to_string(m.q()) + "," +
           to_string(m.r()) + "," + to_string(m.s()) + ")";
  }
  return out + " ]";
}

PPMap PPMap::parse(std::string_view text) {
  detail::Scanner in(text);
  in.expect("PP");
  in.expect('[');
  std::vector<Rational> breaks;
  std::vector<Mobius> pieces;
  Number expected_lo = Number::neg_inf();
  while (!in.accept(']')) {
    in.expect('(');
    Number lo = detail::read_number(in);
    in.expect(',');
    Number hi = detail::read_number(in);
    in.expect(':');
    Rational e[4];
    for (int k = 0; k < 4; ++k) {
      if (k > 0) in.expect(',');
      e[k] = detail::read_rational(in);
    }
    in.expect(')');
    if (lo != expected_lo) in.fail_semantic("pieces must tile the line from -inf without gaps");
    if (!(lo < hi)) in.fail_semantic("piece interval is empty");
    if (hi.is_finite()) {
      if (!hi.is_rational()) in.fail_semantic("breakpoints must be rational");
      breaks.push_back(hi.rational());
    }
    try {
      pieces.emplace_back(e[0], e[1], e[2], e[3]);
    } catch (const Error& err) {
      in.fail_semantic(err.detail());
    }
    expected_lo = hi;
  }
  in.expect_end();
  if (!expected_lo.is_pos_inf()) in.fail_semantic("pieces must extend to +inf");
  try {
    return PPMap(std::move(breaks), std::move(pieces));
  } catch (const Error& err) {
    throw Error(err.kind(), err.detail(), in.position_at(0));
  }
}

Number evaluate(const PPMap& f, const Number& x) {
  if (!x.is_finite()) return x;
  return f.pieces()[f.piece_index(x)].apply(x);
}

Rational evaluate(const PPMap& f, const Rational& x) {
  return f.pieces()[f.piece_index(Number(x))].apply(x);
}

PPMap inverse(const PPMap& f) {
  std::vector<Rational> breaks;
  std::vector<Mobius> pieces;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) breaks.push_back(f.pieces()[i].apply(f.breakpoints()[i]));
  for (const Mobius& m : f.pieces()) pieces.push_back(m.inverse());
  return PPMap(std::move(breaks), std::move(pieces));
}

PPMap compose(const PPMap& f, const PPMap& g) {
  PPMap finv = inverse(f);
  std::vector<Rational> xs = f.breakpoints();
  for (const Rational& c : g.breakpoints()) xs.push_back(evaluate(finv, c));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Mobius> pieces;
  pieces.reserve(xs.size() + 1);
  for (std::size_t k = 0; k <= xs.size(); ++k) {
    std::size_t fi = 0;
    std::size_t gi = 0;
    if (k > 0) {
      fi = f.piece_index(Number(xs[k - 1]));
      gi = g.piece_index(Number(f.pieces()[fi].apply(xs[k - 1])));
    }
    pieces.push_back(f.pieces()[fi].then(g.pieces()[gi]));
  }
  return PPMap(std::move(xs), std::move(pieces));
}

PPMap commutator(const PPMap& f, const PPMap& g) {
  return compose(compose(inverse(f), inverse(g)), compose(f, g));
}

PPMap conjugate(const PPMap& f, const PPMap& k) { return compose(compose(inverse(k), f), k); }

IntervalSet fix_set(const PPMap& f) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const Mobius& m = f.pieces()[i];
    Number lo = f.lower(i);
    Number hi = f.upper(i);
    if (m.is_identity()) {
      out.push_back({lo, hi, lo.is_finite(), hi.is_finite()});
      continue;
    }
    for (Number& t : quad_roots(m.r(), Rational(m.s() - m.p()), Rational(-m.q()))) {
      if (lo <= t && t <= hi) out.push_back(Interval::point(t));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet support(const PPMap& f) { return fix_set(f).complement_in(IntervalSet::real_line()); }

IntervalSet image_under(const IntervalSet& set, const PPMap& f) {
  return set.mapped([&](const Number& x) { return evaluate(f, x); });
}

namespace {

std::size_t left_piece(const PPMap& f, const Number& x) {
  std::size_t i = f.piece_index(x);
  if (i > 0 && x == Number(f.breakpoints()[i - 1])) --i;
  return i;
}

}  // namespace

Number derivative_at(const PPMap& f, const Number& x, Side side) {
  if (!x.is_finite()) throw Error(ErrorKind::OutOfDomain, "derivative at an infinite point");
  std::size_t i = side == Side::Right ? f.piece_index(x) : left_piece(f, x);
  return f.pieces()[i].derivative(x);
}

std::optional<Number> identity_radius(const PPMap& f, const Number& x) {
  if (!x.is_finite()) throw Error(ErrorKind::OutOfDomain, "germ at an infinite point");
  if (evaluate(f, x) != x) throw Error(ErrorKind::NotFixed, "point " + x.str() + " is moved by the map");
  std::size_t left = left_piece(f, x);
  std::size_t right = f.piece_index(x);
  if (!f.pieces()[left].is_identity() || !f.pieces()[right].is_identity()) return std::nullopt;
  // Canonical form merges equal neighbours, so the identity run is one piece.
  Number lo = f.lower(left);
  Number hi = f.upper(right);
  if (!lo.is_finite() && !hi.is_finite()) return Number::pos_inf();
  if (!lo.is_finite()) return hi - x;
  if (!hi.is_finite()) return x - lo;
  return min(x - lo, hi - x);
}

bool identity_near(const PPMap& f, const Number& x) { return identity_radius(f, x).has_value(); }

std::vector<Rational> breakpoint_positions(const PPMap& f) { return f.breakpoints(); }

PPMap pp_bump(const Rational& u, const Rational& v, const Rational& lambda) {
  if (!(u < v)) throw Error(ErrorKind::Precondition, "bump needs u < v");
  if (!(lambda > 0)) throw Error(ErrorKind::Precondition, "bump multiplier must be positive");
  // h(t) = (t - u) / (v - t) sends [u,v] onto [0,inf]; conjugate t -> lambda t.
  Mobius h(1, -u, -1, v);
  Mobius m = h.then(Mobius(lambda, 0, 0, 1)).then(h.inverse());
  return PPMap({u, v}, {Mobius::identity(), m, Mobius::identity()});
}

namespace projective {

PPMap a() { return PPMap({}, {Mobius(1, 1, 0, 1)}); }

PPMap b() {
  return PPMap({0, Rational(1, 2), 1}, {Mobius::identity(), Mobius(1, 0, -1, 1), Mobius(3, -1, 1, 0), Mobius(1, 1, 0, 1)});
}

PPMap c() { return PPMap({0, 1}, {Mobius::identity(), Mobius(2, 0, 1, 1), Mobius::identity()}); }

}  // namespace projective

}  // namespace pltower
