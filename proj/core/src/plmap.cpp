#include "pltower/plmap.hpp"

#include <algorithm>

#include "parse_detail.hpp"
#include "pltower/error.hpp"

namespace pltower {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& t) {
  return a.y + (b.y - a.y) * (t - a.x) / (b.x - a.x);
}

Rational interpolate_inverse(const Breakpoint& a, const Breakpoint& b, const Rational& t) {
  return a.x + (b.x - a.x) * (t - a.y) / (b.y - a.y);
}

// Index i of the piece [x_i, x_{i+1}] containing x; at a breakpoint the piece
// to its right is chosen, except at 1.
std::size_t piece_index(const std::vector<Breakpoint>& pts, const Number& x) {
  if (x < Number(0) || Number(1) < x) {
    throw Error(ErrorKind::OutOfDomain, "point " + x.str() + " lies outside [0,1]");
  }
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](const Number& v, const Breakpoint& b) { return v < Number(b.x); });
  std::size_t idx = static_cast<std::size_t>(it - pts.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, pts.size() - 2);
}

}  // namespace

PLMap::PLMap() : points_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} {}

PLMap::PLMap(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw Error(ErrorKind::Semantic, "a PL map needs at least the breakpoints (0,0) and (1,1)");
  if (points.front() != Breakpoint{0, 0}) throw Error(ErrorKind::Semantic, "first breakpoint must be (0,0)");
  if (points.back() != Breakpoint{1, 1}) throw Error(ErrorKind::Semantic, "last breakpoint must be (1,1)");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) throw Error(ErrorKind::Semantic, "x-coordinates not increasing");
    if (!(points[i - 1].y < points[i].y)) throw Error(ErrorKind::Semantic, "y-coordinates not increasing");
  }
  points_.reserve(points.size());
  for (Breakpoint& p : points) {
    if (points_.size() >= 2 && collinear(points_[points_.size() - 2], points_.back(), p)) points_.pop_back();
    points_.push_back(std::move(p));
  }
}

Rational PLMap::slope(std::size_t piece) const {
  const Breakpoint& a = points_.at(piece);
  const Breakpoint& b = points_.at(piece + 1);
  return (b.y - a.y) / (b.x - a.x);
}

std::string PLMap::str() const {
  std::string out = "PL[";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0) out += ",";
    out += "(" + to_string(points_[i].x) + "," + to_string(points_[i].y) + ")";
  }
  return out + "]";
}

PLMap PLMap::parse(std::string_view text) {
  detail::Scanner in(text);
  in.expect("PL");
  in.expect('[');
  std::vector<Breakpoint> pts;
  do {
    in.expect('(');
    Rational x = detail::read_rational(in);
    in.expect(',');
    Rational y = detail::read_rational(in);
    in.expect(')');
    pts.push_back({std::move(x), std::move(y)});
  } while (in.accept(','));
  in.expect(']');
  in.expect_end();
  try {
    return PLMap(std::move(pts));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Semantic) throw;
    throw Error(ErrorKind::Semantic, e.detail(), in.position_at(0));
  }
}

Rational evaluate(const PLMap& f, const Rational& x) {
  const auto& pts = f.breakpoints();
  std::size_t i = piece_index(pts, Number(x));
  return interpolate(pts[i], pts[i + 1], x);
}

Number evaluate(const PLMap& f, const Number& x) {
  if (x.is_rational()) return Number(evaluate(f, x.rational()));
  if (!x.is_finite()) throw Error(ErrorKind::OutOfDomain, "PL maps act on [0,1] only");
  const auto& pts = f.breakpoints();
  std::size_t i = piece_index(pts, x);
  return Number(pts[i].y) + Number(f.slope(i)) * (x - Number(pts[i].x));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  const auto& a = f.breakpoints();
  const auto& b = g.breakpoints();
  std::vector<Breakpoint> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  // Walk the breakpoints of both maps in the middle copy of [0,1].
  while (i < a.size() && j < b.size()) {
    int c = cmp(a[i].y, b[j].x);
    if (c == 0) {
      out.push_back({a[i].x, b[j].y});
      ++i;
      ++j;
    } else if (c < 0) {
      out.push_back({a[i].x, interpolate(b[j - 1], b[j], a[i].y)});
      ++i;
    } else {
      out.push_back({interpolate_inverse(a[i - 1], a[i], b[j].x), b[j].y});
      ++j;
    }
  }
  return PLMap(std::move(out));
}

PLMap inverse(const PLMap& f) {
  std::vector<Breakpoint> out;
  out.reserve(f.breakpoints().size());
  for (const Breakpoint& p : f.breakpoints()) out.push_back({p.y, p.x});
  return PLMap(std::move(out));
}

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(inverse(f), inverse(g)), compose(f, g));
}

PLMap conjugate(const PLMap& f, const PLMap& k) { return compose(compose(inverse(k), f), k); }

IntervalSet fix_set(const PLMap& f) {
  const auto& pts = f.breakpoints();
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational d0 = pts[i].y - pts[i].x;
    Rational d1 = pts[i + 1].y - pts[i + 1].x;
    int s0 = sgn(d0);
    int s1 = sgn(d1);
    if (s0 == 0 && s1 == 0) {
      pieces.push_back(Interval::closed(pts[i].x, pts[i + 1].x));
    } else if (s0 == 0) {
      pieces.push_back(Interval::point(pts[i].x));
    } else if (s1 == 0) {
      pieces.push_back(Interval::point(pts[i + 1].x));
    } else if (s0 != s1) {
      Rational x = pts[i].x + (pts[i + 1].x - pts[i].x) * d0 / (d0 - d1);
      pieces.push_back(Interval::point(x));
    }
  }
  return IntervalSet(std::move(pieces));
}

IntervalSet support(const PLMap& f) { return fix_set(f).complement_in(IntervalSet::unit_interval()); }

IntervalSet image_under(const IntervalSet& set, const PLMap& f) {
  return set.mapped([&](const Number& x) { return evaluate(f, x); });
}

Rational one_sided_slope(const PLMap& f, const Number& x, Side side) {
  const auto& pts = f.breakpoints();
  if (side == Side::Right && !(x < Number(1))) throw Error(ErrorKind::OutOfDomain, "no right-hand piece at 1");
  if (side == Side::Left && !(Number(0) < x)) throw Error(ErrorKind::OutOfDomain, "no left-hand piece at 0");
  std::size_t i = piece_index(pts, x);
  if (side == Side::Left && x == Number(pts[i].x)) --i;
  return f.slope(i);
}

std::optional<Number> identity_radius(const PLMap& f, const Number& x) {
  if (x < Number(0) || Number(1) < x) {
    throw Error(ErrorKind::OutOfDomain, "point " + x.str() + " lies outside [0,1]");
  }
  IntervalSet fixed = fix_set(f);
  for (const Interval& piece : fixed.intervals()) {
    if (!piece.contains(x)) continue;
    std::optional<Number> radius;
    if (Number(0) < x) {
      if (!(piece.lo < x)) return std::nullopt;
      radius = x - piece.lo;
    }
    if (x < Number(1)) {
      if (!(x < piece.hi)) return std::nullopt;
      Number right = piece.hi - x;
      radius = radius ? min(*radius, right) : right;
    }
    return radius;
  }
  return std::nullopt;
}

bool identity_near(const PLMap& f, const Number& x) { return identity_radius(f, x).has_value(); }

bool is_in_F(const PLMap& f) {
  const auto& pts = f.breakpoints();
  for (const Breakpoint& p : pts) {
    if (!is_dyadic(p.x) || !is_dyadic(p.y)) return false;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!dyadic_slope_exponent(f.slope(i))) return false;
  }
  return true;
}

std::vector<Rational> breakpoint_positions(const PLMap& f) {
  std::vector<Rational> out;
  out.reserve(f.breakpoints().size());
  for (const Breakpoint& p : f.breakpoints()) out.push_back(p.x);
  return out;
}

}  // namespace pltower
