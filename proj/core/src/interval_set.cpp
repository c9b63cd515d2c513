#include "pltower/interval_set.hpp"

#include <algorithm>

#include "parse_detail.hpp"
#include "pltower/error.hpp"

namespace pltower {

bool Interval::empty() const {
  auto c = lo <=> hi;
  if (c > 0) return true;
  if (c == 0) return !(lo_closed && hi_closed) || !lo.is_finite();
  return false;
}

bool Interval::contains(const Number& x) const {
  auto l = lo <=> x;
  auto h = x <=> hi;
  return (l < 0 || (l == 0 && lo_closed)) && (h < 0 || (h == 0 && hi_closed));
}

std::string Interval::str() const {
  if (lo_closed && hi_closed && lo == hi) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

namespace {

std::vector<Interval> canonical(std::vector<Interval> pieces) {
  for (Interval& p : pieces) {
    if (!p.lo.is_finite()) p.lo_closed = false;
    if (!p.hi.is_finite()) p.hi_closed = false;
  }
  std::erase_if(pieces, [](const Interval& p) { return p.empty(); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    auto c = a.lo <=> b.lo;
    if (c != 0) return c < 0;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> out;
  for (Interval& next : pieces) {
    if (!out.empty()) {
      Interval& cur = out.back();
      auto c = next.lo <=> cur.hi;
      if (c < 0 || (c == 0 && (cur.hi_closed || next.lo_closed))) {
        auto h = next.hi <=> cur.hi;
        if (h > 0) {
          cur.hi = std::move(next.hi);
          cur.hi_closed = next.hi_closed;
        } else if (h == 0) {
          cur.hi_closed = cur.hi_closed || next.hi_closed;
        }
        continue;
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

Interval intersect_pieces(const Interval& a, const Interval& b) {
  Interval r;
  auto l = a.lo <=> b.lo;
  if (l > 0) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (l < 0) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  auto h = a.hi <=> b.hi;
  if (h < 0) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (h > 0) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(canonical(std::move(pieces))) {}

IntervalSet::IntervalSet(Interval piece) : IntervalSet(std::vector<Interval>{std::move(piece)}) {}

bool IntervalSet::contains(const Number& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& p) { return p.contains(x); });
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const { return intersect(other) == *this; }

bool IntervalSet::is_disjoint(const IntervalSet& other) const { return intersect(other).empty(); }

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : pieces_) {
    for (const Interval& b : other.pieces_) {
      Interval r = intersect_pieces(a, b);
      if (!r.empty()) out.push_back(std::move(r));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement_in(const IntervalSet& ambient) const {
  std::vector<Interval> gaps;
  Number prev = Number::neg_inf();
  bool prev_closed = false;
  for (const Interval& p : pieces_) {
    gaps.push_back({prev, p.lo, !prev_closed, !p.lo_closed});
    prev = p.hi;
    prev_closed = p.hi_closed;
  }
  gaps.push_back({prev, Number::pos_inf(), !prev_closed, false});
  return IntervalSet(std::move(gaps)).intersect(ambient);
}

IntervalSet IntervalSet::closure() const {
  std::vector<Interval> out = pieces_;
  for (Interval& p : out) {
    p.lo_closed = true;
    p.hi_closed = true;
  }
  return IntervalSet(std::move(out));
}

std::optional<Interval> IntervalSet::leftmost() const {
  if (pieces_.empty()) return std::nullopt;
  return pieces_.front();
}

const Number& IntervalSet::inf() const {
  if (pieces_.empty()) throw Error(ErrorKind::Precondition, "infimum of the empty set");
  return pieces_.front().lo;
}

const Number& IntervalSet::sup() const {
  if (pieces_.empty()) throw Error(ErrorKind::Precondition, "supremum of the empty set");
  return pieces_.back().hi;
}

IntervalSet IntervalSet::mapped(const std::function<Number(const Number&)>& increasing) const {
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const Interval& p : pieces_) {
    out.push_back({increasing(p.lo), increasing(p.hi), p.lo_closed, p.hi_closed});
  }
  return IntervalSet(std::move(out));
}

std::string IntervalSet::str() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) out += " u ";
    out += pieces_[i].str();
  }
  return out;
}

IntervalSet IntervalSet::parse(std::string_view text) {
  detail::Scanner in(text);
  if (in.accept("{}")) {
    in.expect_end();
    return {};
  }
  std::vector<Interval> pieces;
  do {
    pieces.push_back(detail::read_interval(in));
  } while (in.accept('u'));
  in.expect_end();
  return IntervalSet(std::move(pieces));
}

namespace detail {

Interval read_interval(Scanner& in) {
  Interval r;
  if (in.accept('{')) {
    r = Interval::point(read_number(in));
    in.expect('}');
    return r;
  }
  if (in.accept('[')) {
    r.lo_closed = true;
  } else {
    in.expect('(');
  }
  r.lo = read_number(in);
  in.expect(',');
  r.hi = read_number(in);
  if (in.accept(']')) {
    r.hi_closed = true;
  } else {
    in.expect(')');
  }
  if (r.hi < r.lo) in.fail_semantic("interval endpoints out of order");
  return r;
}

}  // namespace detail

}  // namespace pltower
