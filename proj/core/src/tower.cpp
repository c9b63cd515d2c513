#include "pltower/tower.hpp"

#include <deque>
#include <set>

namespace pltower {

std::string to_string(Strategy s) { return s == Strategy::Greedy ? "greedy" : "bfs"; }
std::string to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }
std::string to_string(Outcome o) { return o == Outcome::AbelianAtStart ? "abelian-at-start" : "terminated"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "greedy") return Strategy::Greedy;
  if (text == "bfs") return Strategy::Bfs;
  throw Error(ErrorKind::Semantic, "unknown strategy '" + std::string(text) + "' (expected greedy or bfs)");
}

Direction parse_direction(std::string_view text) {
  if (text == "left") return Direction::Left;
  if (text == "right") return Direction::Right;
  throw Error(ErrorKind::Semantic, "unknown direction '" + std::string(text) + "'");
}

Outcome parse_outcome(std::string_view text) {
  if (text == "abelian-at-start") return Outcome::AbelianAtStart;
  if (text == "terminated") return Outcome::Terminated;
  throw Error(ErrorKind::Semantic, "unknown outcome '" + std::string(text) + "'");
}

namespace {

template <class Elem>
struct Move {
  std::string name;
  long exponent;
  Elem value;
};

template <class Elem>
std::vector<Move<Elem>> moves(const GeneratingSet<Elem>& h) {
  std::vector<Move<Elem>> out;
  for (const auto& s : h.elements()) {
    out.push_back({s.expr.name(), 1, s.value});
    out.push_back({s.expr.name(), -1, inverse(s.value)});
  }
  return out;
}

// Walks one endpoint of I, always taking the letter that moves it furthest in
// the chosen direction. A stall (no letter makes progress) gives up.
template <class Elem>
std::optional<Word> greedy(const std::vector<Move<Elem>>& letters, const IntervalSet& interval, Direction dir,
                           long max_steps) {
  bool left = dir == Direction::Left;
  const Number& target = left ? interval.inf() : interval.sup();
  Number y = left ? interval.sup() : interval.inf();
  Word w;
  for (long step = 0; step <= max_steps; ++step) {
    if (left ? y < target : y > target) return w;
    if (step == max_steps) break;
    const Move<Elem>* best = nullptr;
    Number best_y = y;
    for (const auto& m : letters) {
      Number v = evaluate(m.value, y);
      if (left ? v < best_y : v > best_y) {
        best_y = std::move(v);
        best = &m;
      }
    }
    if (best == nullptr) return std::nullopt;
    y = std::move(best_y);
    w.append(best->name, best->exponent);
  }
  return std::nullopt;
}

// Shortest word by breadth-first search over the images of (inf I, sup I).
template <class Elem>
std::optional<Word> bfs(const std::vector<Move<Elem>>& letters, const IntervalSet& interval, const TowerConfig& cfg) {
  struct State {
    Number lo;
    Number hi;
    Word word;
  };
  const Number& lo0 = interval.inf();
  const Number& hi0 = interval.sup();
  std::set<std::pair<Number, Number>> visited = {{lo0, hi0}};
  std::deque<State> queue = {{lo0, hi0, {}}};
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    if (s.word.length() >= cfg.max_steps) continue;
    for (const auto& m : letters) {
      Number lo = evaluate(m.value, s.lo);
      Number hi = evaluate(m.value, s.hi);
      if (!visited.insert({lo, hi}).second) continue;
      Word w = s.word;
      w.append(m.name, m.exponent);
      if (hi < lo0 || lo > hi0) return w;
      if (visited.size() > cfg.max_bfs_states) {
        throw Error(ErrorKind::SearchExhausted,
                    "BFS visited more than " + std::to_string(cfg.max_bfs_states) + " states without displacing " +
                        interval.str());
      }
      queue.push_back({std::move(lo), std::move(hi), std::move(w)});
    }
  }
  return std::nullopt;
}

IntervalSet interior(const Interval& cell) { return IntervalSet(Interval::open(cell.lo, cell.hi)); }

IntervalSet union_of_supports(const auto& g) {
  IntervalSet out;
  for (const auto& s : g.elements()) out = out.unite(support(s.value));
  return out;
}

std::optional<std::size_t> leftmost_cell(const Partition& p, const IntervalSet& set) {
  for (std::size_t i = 0; i < p.cell_count(); ++i) {
    if (p.cells[i] == CellKind::Support && !set.intersect(IntervalSet(p.open_cell(i))).empty()) return i;
  }
  return std::nullopt;
}

template <class Elem>
bool identity_on(const GeneratingSet<Elem>& g, const IntervalSet& region) {
  for (const auto& s : g.elements()) {
    if (!support(s.value).is_disjoint(region)) return false;
  }
  return true;
}

}  // namespace

template <class Elem>
std::optional<Certificate> displacement_certificate(const Elem& k, const IntervalSet& interval) {
  IntervalSet image = image_under(interval, k);
  if (interval.empty() || !image.is_disjoint(interval)) return std::nullopt;
  Certificate c;
  if (image.sup() < interval.inf()) {
    c.direction = Direction::Left;
    c.inequality = "sup(I.k) = " + image.sup().str() + " < " + interval.inf().str() + " = inf(I)";
  } else if (image.inf() > interval.sup()) {
    c.direction = Direction::Right;
    c.inequality = "inf(I.k) = " + image.inf().str() + " > " + interval.sup().str() + " = sup(I)";
  } else {
    return std::nullopt;
  }
  c.interval = interval;
  c.image = std::move(image);
  return c;
}

template <class Elem>
Displacement displace(const GeneratingSet<Elem>& h, const IntervalSet& interval, const Interval& cell,
                      const TowerConfig& cfg) {
  IntervalSet open = interior(cell);
  if (interval.empty()) throw Error(ErrorKind::Precondition, "cannot displace the empty set");
  if (!interval.inf().is_finite() || !interval.sup().is_finite()) {
    throw Error(ErrorKind::Precondition, "interval " + interval.str() + " is unbounded");
  }
  if (!interval.closure().is_subset_of(open)) {
    throw Error(ErrorKind::Precondition,
                "closure of " + interval.str() + " is not inside the open cell " + open.str());
  }
  if (!group_fix_set(h).intersect(open).empty()) {
    throw Error(ErrorKind::Precondition, "cell " + open.str() + " contains a common fixed point");
  }
  auto letters = moves(h);
  std::optional<Word> word;
  if (cfg.strategy == Strategy::Bfs) {
    word = bfs(letters, interval, cfg);
  } else {
    Direction first = cfg.left_first ? Direction::Left : Direction::Right;
    Direction second = cfg.left_first ? Direction::Right : Direction::Left;
    word = greedy(letters, interval, first, cfg.max_steps);
    if (!word) word = greedy(letters, interval, second, cfg.max_steps);
  }
  if (!word) {
    throw Error(ErrorKind::SearchExhausted, to_string(cfg.strategy) + " search found no word of length <= " +
                                                std::to_string(cfg.max_steps) + " displacing " + interval.str());
  }
  std::optional<Certificate> cert = displacement_certificate(h.evaluate(*word), interval);
  if (!cert) throw Error(ErrorKind::SearchExhausted, "word " + word->str() + " does not displace " + interval.str());
  return {std::move(*word), std::move(*cert)};
}

template <class Elem>
GeneratingSet<Elem> next_level(const GeneratingSet<Elem>& g, const Word& k, const Elem& k_value, std::size_t cap,
                               bool& capped) {
  Expr k_expr = Expr::parse(k.str());
  GeneratingSet<Elem> out;
  std::set<std::string> seen;
  for (const auto& a : g.elements()) {
    Elem ak = conjugate(a.value, k_value);
    for (const auto& b : g.elements()) {
      Elem c = commutator(ak, b.value);
      if (c.is_identity() || !seen.insert(c.str()).second) continue;
      if (out.size() >= cap) {
        capped = true;
        continue;
      }
      out.add(Expr::commutator(Expr::conjugate(a.expr, k_expr), b.expr), std::move(c));
    }
  }
  return out;
}

template <class Elem>
TowerReport build_tower(const GeneratingSet<Elem>& h, const TowerConfig& cfg) {
  TowerReport r;
  r.ambient = GeneratingSet<Elem>::ambient;
  for (const auto& s : h.elements()) r.generators.emplace_back(s.name(), s.value.str());
  r.germ_depth = cfg.germ_depth.value_or(ElementTraits<Elem>::default_germ_depth);
  r.generator_cap = cfg.max_generators;
  r.partition = partition(h);

  GeneratingSet<Elem> g = derived_generators(h, r.germ_depth);
  for (const auto& s : g.elements()) r.initial_generators.push_back(s.name());
  GermCheck germs = germ_check(g, r.partition);
  r.germs_trivial = germs.trivial;
  r.germ_witnesses = std::move(germs.witnesses);
  if (g.empty()) return r;

  r.outcome = Outcome::Terminated;
  for (std::size_t level = 0;; ++level) {
    if (level >= r.partition.cell_count()) {
      throw Error(ErrorKind::Precondition, "tower did not terminate within the number of cells");
    }
    IntervalSet supp = union_of_supports(g);
    std::optional<std::size_t> p = leftmost_cell(r.partition, supp);
    if (!p) throw Error(ErrorKind::Precondition, "level " + std::to_string(level) + " has no support in a support cell");
    if (!r.steps.empty() && *p <= r.steps.back().cell) {
      throw Error(ErrorKind::Precondition, "leftmost support cell did not advance at level " + std::to_string(level));
    }
    Interval cell = r.partition.open_cell(*p);
    IntervalSet interval = supp.intersect(IntervalSet(cell));

    Displacement d;
    try {
      d = displace(h, interval, cell, cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchExhausted) throw;
      throw SearchExhausted(e.detail() + " at level " + std::to_string(level), r);
    }
    Elem k = h.evaluate(d.word);
    bool capped = false;
    GeneratingSet<Elem> next = next_level(g, d.word, k, cfg.max_generators, capped);
    r.capped = r.capped || capped;

    TowerStep step;
    step.level = level;
    step.cell = *p;
    step.interval = std::move(interval);
    step.displacement = std::move(d.word);
    step.certificate = std::move(d.certificate);
    step.left_cells_identity = identity_on(next, r.partition.cells_through(*p));
    for (const auto& s : next.elements()) step.next_generators.push_back(s.name());
    r.steps.push_back(std::move(step));

    if (next.empty()) {
      r.terminal_level = level;
      r.terminal_identity = true;
      return r;
    }
    g = std::move(next);
  }
}

template <class Elem>
VerifyResult verify_report(const GeneratingSet<Elem>& h, const TowerReport& r) {
  std::string where = "ambient";
  auto fail = [&](std::string message) { return VerifyResult{false, where, std::move(message)}; };
  try {
    if (r.ambient != GeneratingSet<Elem>::ambient) return fail("ambient does not match the generators");

    where = "generators";
    if (r.generators.size() != h.size()) return fail("generator count differs");
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& s = h.elements()[i];
      if (r.generators[i].first != s.name()) return fail("generator " + std::to_string(i) + " is not named " + s.name());
      if (r.generators[i].second != s.value.str()) return fail("generator " + s.name() + " has a different value");
    }

    where = "germ_depth";
    if (r.germ_depth != 1 && r.germ_depth != 2) return fail("germ depth must be 1 or 2");

    where = "partition";
    if (r.partition != partition(h)) return fail("partition differs from the recomputed one");
    if (auto v = partition_violation(h, r.partition)) return fail(*v);

    where = "initial_generators";
    GeneratingSet<Elem> g = derived_generators(h, r.germ_depth);
    if (r.initial_generators.size() != g.size()) return fail("derived generator count differs");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (r.initial_generators[i] != g.elements()[i].name()) return fail("entry " + std::to_string(i) + " differs");
      if (h.evaluate(Expr::parse(r.initial_generators[i])) != g.elements()[i].value) {
        return fail("entry " + std::to_string(i) + " evaluates differently");
      }
    }

    where = "germ_witnesses";
    GermCheck germs = germ_check(g, r.partition);
    if (germs.trivial != r.germs_trivial || germs.witnesses != r.germ_witnesses) {
      return fail("germ witnesses differ from the recomputed ones");
    }

    where = "outcome";
    if (g.empty()) {
      if (r.outcome != Outcome::AbelianAtStart || !r.steps.empty()) return fail("G_0 is trivial, expected abelian-at-start");
      return {};
    }
    if (r.outcome != Outcome::Terminated) return fail("G_0 is nontrivial, expected terminated");
    if (r.steps.empty()) return fail("no steps recorded");

    bool capped = false;
    for (std::size_t j = 0; j < r.steps.size(); ++j) {
      const TowerStep& step = r.steps[j];
      std::string at = "steps[" + std::to_string(j) + "]";
      where = at + ".level";
      if (step.level != j) return fail("level out of sequence");

      where = at + ".cell";
      IntervalSet supp = union_of_supports(g);
      std::optional<std::size_t> p = leftmost_cell(r.partition, supp);
      if (!p || *p != step.cell) return fail("leftmost support cell differs");
      if (j > 0 && step.cell <= r.steps[j - 1].cell) return fail("leftmost cell index did not increase");

      where = at + ".interval";
      IntervalSet interval = supp.intersect(IntervalSet(r.partition.open_cell(step.cell)));
      if (interval != step.interval) return fail("interval differs from L_j restricted to the cell");
      if (!interval.closure().is_subset_of(IntervalSet(r.partition.open_cell(step.cell)))) {
        return fail("closure of the interval leaves the open cell");
      }

      where = at + ".displacement";
      Elem k = h.evaluate(step.displacement);

      where = at + ".certificate";
      std::optional<Certificate> cert = displacement_certificate(k, interval);
      if (!cert) return fail("image of the interval under the displacement meets the interval");
      if (*cert != step.certificate) return fail("recorded certificate differs from the recomputed one");

      where = at + ".next_generators";
      GeneratingSet<Elem> next = next_level(g, step.displacement, k, r.generator_cap, capped);
      if (next.size() != step.next_generators.size()) return fail("generator count differs");
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (next.elements()[i].name() != step.next_generators[i]) return fail("entry " + std::to_string(i) + " differs");
      }

      where = at + ".left_cells_identity";
      bool left_ok = identity_on(next, r.partition.cells_through(step.cell));
      if (!left_ok || !step.left_cells_identity) return fail("a next-level generator moves a point of cells 0.." +
                                                             std::to_string(step.cell));
      g = std::move(next);
    }

    where = "terminal";
    if (!g.empty()) return fail("last level still has nontrivial commutators");
    if (r.terminal_level + 1 != r.steps.size()) return fail("terminal level does not match the step count");
    if (!r.terminal_identity) return fail("terminal certificate not asserted");
    if (r.terminal_level >= r.partition.support_cell_count()) return fail("terminal level exceeds the support cell bound");

    where = "capped";
    if (capped != r.capped) return fail("capped flag differs");
  } catch (const Error& e) {
    return fail(e.what());
  }
  return {};
}

#define PLTOWER_INSTANTIATE(Elem)                                                                                   \
  template std::optional<Certificate> displacement_certificate(const Elem&, const IntervalSet&);                     \
  template Displacement displace(const GeneratingSet<Elem>&, const IntervalSet&, const Interval&, const TowerConfig&); \
  template GeneratingSet<Elem> next_level(const GeneratingSet<Elem>&, const Word&, const Elem&, std::size_t, bool&); \
  template TowerReport build_tower(const GeneratingSet<Elem>&, const TowerConfig&);                                 \
  template VerifyResult verify_report(const GeneratingSet<Elem>&, const TowerReport&);

PLTOWER_INSTANTIATE(PLMap)
PLTOWER_INSTANTIATE(PPMap)

#undef PLTOWER_INSTANTIATE

}  // namespace pltower
