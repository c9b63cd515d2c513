#include "pltower/analysis.hpp"

#include <algorithm>
#include <set>

namespace pltower {

std::string to_string(Ambient a) { return a == Ambient::UnitInterval ? "unit-interval" : "real-line"; }

Ambient parse_ambient(std::string_view text) {
  if (text == "unit-interval") return Ambient::UnitInterval;
  if (text == "real-line") return Ambient::RealLine;
  throw Error(ErrorKind::Semantic, "unknown ambient '" + std::string(text) + "'");
}

IntervalSet ambient_set(Ambient a) {
  return a == Ambient::UnitInterval ? IntervalSet::unit_interval() : IntervalSet::real_line();
}

std::string to_string(CellKind k) { return k == CellKind::Fixed ? "fixed" : "support"; }

std::size_t Partition::support_cell_count() const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), CellKind::Support));
}

Interval Partition::cell(std::size_t i) const {
  const Number& lo = points[i];
  const Number& hi = points[i + 1];
  return {lo, hi, lo.is_finite(), hi.is_finite()};
}

IntervalSet Partition::cells_through(std::size_t i) const {
  const Number& lo = points.front();
  const Number& hi = points[i + 1];
  return IntervalSet(Interval{lo, hi, lo.is_finite(), hi.is_finite()});
}

template <class Elem>
IntervalSet group_fix_set(const GeneratingSet<Elem>& h) {
  IntervalSet out = ambient_set(GeneratingSet<Elem>::ambient);
  for (const auto& s : h.elements()) out = out.intersect(fix_set(s.value));
  return out;
}

template <class Elem>
IntervalSet group_support(const GeneratingSet<Elem>& h) {
  return group_fix_set(h).complement_in(ambient_set(GeneratingSet<Elem>::ambient));
}

template <class Elem>
Partition partition(const GeneratingSet<Elem>& h) {
  IntervalSet amb = ambient_set(GeneratingSet<Elem>::ambient);
  IntervalSet fixed = group_fix_set(h);
  std::vector<Number> points = {amb.inf(), amb.sup()};
  // Complement endpoints coincide with fixed-set endpoints except at the
  // ambient ends, which are already present.
  for (const Interval& piece : fixed.intervals()) {
    points.push_back(piece.lo);
    points.push_back(piece.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Partition p;
  p.points = std::move(points);
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    bool inside = IntervalSet(p.open_cell(i)).is_subset_of(fixed);
    p.cells.push_back(inside ? CellKind::Fixed : CellKind::Support);
  }
  return p;
}

namespace {

template <class Elem>
GeneratingSet<Elem> pairwise_commutators(const GeneratingSet<Elem>& h) {
  GeneratingSet<Elem> out;
  std::set<std::string> seen;
  const auto& s = h.elements();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Elem c = commutator(s[i].value, s[j].value);
      if (c.is_identity() || !seen.insert(c.str()).second) continue;
      out.add(Expr::commutator(s[i].expr, s[j].expr), std::move(c));
    }
  }
  return out;
}

}  // namespace

template <class Elem>
GeneratingSet<Elem> derived_generators(const GeneratingSet<Elem>& h, int depth) {
  if (depth != 1 && depth != 2) throw Error(ErrorKind::Precondition, "derived depth must be 1 or 2");
  GeneratingSet<Elem> out = pairwise_commutators(h);
  if (depth == 2) out = pairwise_commutators(out);
  return out;
}

template <class Elem>
GermCheck germ_check(const GeneratingSet<Elem>& derived, const Partition& p) {
  GermCheck out;
  for (const auto& e : derived.elements()) {
    for (const Number& x : p.points) {
      if (!x.is_finite()) continue;
      std::optional<Number> r = identity_radius(e.value, x);
      out.trivial = out.trivial && r.has_value();
      out.witnesses.push_back({e.name(), x, std::move(r)});
    }
  }
  return out;
}

template <class Elem>
std::vector<Rational> cell_samples(const GeneratingSet<Elem>& h, const Partition& p, std::size_t cell) {
  Interval open = p.open_cell(cell);
  std::vector<Number> cuts = {open.lo, open.hi};
  for (const auto& s : h.elements()) {
    for (const Rational& b : breakpoint_positions(s.value)) {
      Number x(b);
      if (open.contains(x)) cuts.push_back(std::move(x));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back(rational_between(cuts[i], cuts[i + 1]));
  return out;
}

template <class Elem>
std::optional<std::string> partition_violation(const GeneratingSet<Elem>& h, const Partition& p) {
  IntervalSet amb = ambient_set(GeneratingSet<Elem>::ambient);
  if (p.points.size() < 2 || p.cells.size() + 1 != p.points.size()) return "malformed partition";
  if (p.points.front() != amb.inf() || p.points.back() != amb.sup()) return "partition does not span the ambient";
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    if (!(p.points[i] < p.points[i + 1])) return "partition points not increasing";
  }
  for (const auto& s : h.elements()) {
    for (const Number& x : p.points) {
      if (x.is_finite() && evaluate(s.value, x) != x) return "generator " + s.name() + " moves partition point " + x.str();
    }
  }
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    std::string where = "cell " + std::to_string(i) + " " + p.cell(i).str();
    if (p.cells[i] == CellKind::Fixed) {
      for (const auto& s : h.elements()) {
        if (!IntervalSet(p.cell(i)).is_subset_of(fix_set(s.value))) return where + " is not fixed by " + s.name();
      }
      continue;
    }
    for (const Rational& x : cell_samples(h, p, i)) {
      bool moved = std::any_of(h.elements().begin(), h.elements().end(),
                               [&](const auto& s) { return evaluate(s.value, x) != x; });
      if (!moved) return where + " has common fixed point " + to_string(x);
    }
  }
  return std::nullopt;
}

#define PLTOWER_INSTANTIATE(Elem)                                                                   \
  template IntervalSet group_fix_set(const GeneratingSet<Elem>&);                                   \
  template IntervalSet group_support(const GeneratingSet<Elem>&);                                   \
  template Partition partition(const GeneratingSet<Elem>&);                                         \
  template GeneratingSet<Elem> derived_generators(const GeneratingSet<Elem>&, int);                 \
  template GermCheck germ_check(const GeneratingSet<Elem>&, const Partition&);                      \
  template std::vector<Rational> cell_samples(const GeneratingSet<Elem>&, const Partition&, std::size_t); \
  template std::optional<std::string> partition_violation(const GeneratingSet<Elem>&, const Partition&);

PLTOWER_INSTANTIATE(PLMap)
PLTOWER_INSTANTIATE(PPMap)

#undef PLTOWER_INSTANTIATE

}  // namespace pltower
