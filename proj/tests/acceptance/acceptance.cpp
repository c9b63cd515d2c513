// Property-based acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pltower/analysis.hpp"
#include "pltower/error.hpp"
#include "pltower/random.hpp"
#include "pltower/report.hpp"
#include "pltower/tower.hpp"
#include "pltower/treepair.hpp"

using namespace pltower;
using random::Rng;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Rational r(long n, long d = 1) { return make_rational(n, d); }

// Shared between criteria 6 and 8.
struct StoredReport {
  GeneratingSet<PLMap> h;
  std::string json;
};
std::vector<StoredReport> g_reports;

// ---------------------------------------------------------------------------
// 1. exact kernel

Number random_quad(Rng& rng, long d) { return Number::surd(random::rational(rng), random::rational(rng), d); }

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::string criterion_kernel() {
  static const long radicands[] = {2, 3, 5, 6, 7, 10, 11, 13};
  Rng rng(1001);
  const int n = 10000;
  int cross = 0;
  for (int i = 0; i < n; ++i) {
    long d = radicands[random::uniform(rng, 0, 7)];
    Number x = random_quad(rng, d);
    Number y = random_quad(rng, d);
    Number z = random::uniform(rng, 0, 1) ? Number(random::rational(rng)) : random_quad(rng, d);

    require((x + y) + z == x + (y + z), "addition not associative: " + x.str() + ", " + y.str());
    require((x * y) * z == x * (y * z), "multiplication not associative: " + x.str() + ", " + y.str());
    require(x * (y + z) == x * y + x * z, "not distributive at " + x.str());
    require(x + (-x) == Number(0), "x + (-x) != 0 for " + x.str());
    if (x.sign() != 0) require(x * x.inverse() == Number(1), "x * x^-1 != 1 for " + x.str());

    // total order across fields: antisymmetry, transitivity, agreement with
    // floating point when the values are well separated
    long e = radicands[random::uniform(rng, 0, 7)];
    Number u = random_quad(rng, e);
    Number w = random_quad(rng, radicands[random::uniform(rng, 0, 7)]);
    if (d != e) ++cross;
    require(sign_of(cmp(x, u)) == -sign_of(cmp(u, x)), "order not antisymmetric");
    if (x <= u && u <= w) require(x <= w, "order not transitive");
    if (std::abs(x.approx() - u.approx()) > 1e-9) {
      require((x < u) == (x.approx() < u.approx()), "order disagrees with floating point: " + x.str() + " vs " + u.str());
    }
    require(Number::parse(u.str()) == u, "text round trip failed for " + u.str());

    // quad_roots against the polynomial and the float formula
    Rational a = random::rational(rng);
    Rational b = random::rational(rng);
    Rational c = random::rational(rng);
    if (sgn(a) == 0) a = 1;
    std::vector<Number> roots = quad_roots(a, b, c);
    double da = a.get_d(), db = b.get_d(), dc = c.get_d();
    double disc = db * db - 4 * da * dc;
    if (disc < -1e-12) {
      require(roots.empty(), "roots of a negative discriminant");
      continue;
    }
    for (const Number& t : roots) {
      require(Number(a) * t * t + Number(b) * t + Number(c) == Number(0), "root does not satisfy its polynomial");
    }
    if (disc > 1e-12) {
      require(roots.size() == 2, "expected two roots");
      double s = std::sqrt(disc);
      double lo = std::min((-db - s) / (2 * da), (-db + s) / (2 * da));
      double hi = std::max((-db - s) / (2 * da), (-db + s) / (2 * da));
      auto close = [](double p, double q) { return std::abs(p - q) <= 1e-9 * std::max(1.0, std::abs(q)); };
      require(close(roots[0].approx(), lo) && close(roots[1].approx(), hi), "roots disagree with the float formula");
    }
  }
  require(cross > n / 2, "too few cross-field instances");
  return std::to_string(n) + " instances, " + std::to_string(cross) + " cross-field comparisons";
}

// ---------------------------------------------------------------------------
// 2. group axioms and support transport

template <class Elem>
void check_axioms(const Elem& f, const Elem& g, const Elem& k) {
  const Elem id = Elem::identity();
  require(compose(compose(f, g), k) == compose(f, compose(g, k)), "composition not associative");
  require(compose(f, id) == f && compose(id, f) == f, "identity law fails");
  require(compose(f, inverse(f)).is_identity() && compose(inverse(f), f).is_identity(), "inverse law fails");
  require(inverse(compose(f, g)) == compose(inverse(g), inverse(f)), "(fg)^-1 != g^-1 f^-1");
  require(support(conjugate(f, k)) == image_under(support(f), k), "Supp(f^k) != Supp(f).k");
}

std::string criterion_axioms() {
  Rng rng(2002);
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    PLMap f = random::uniform(rng, 0, 1) ? random::f_element(rng, 12) : random::pl(rng, 6);
    PLMap g = random::f_element(rng, 12);
    PLMap k = random::pl(rng, 6);
    check_axioms(f, g, k);

    PPMap p = random::pp_element(rng, 12);
    PPMap q = random::pp_element(rng, 12);
    PPMap m = random::pp_element(rng, 12);
    check_axioms(p, q, m);

    // disjoint supports commute
    Rational u = random::dyadic_between(rng, 0, 1);
    PLMap left = random::pl_on(rng, 0, u, static_cast<int>(random::uniform(rng, 1, 3)));
    PLMap right = random::pl_on(rng, u, 1, static_cast<int>(random::uniform(rng, 1, 3)));
    require(support(left).is_disjoint(support(right)), "constructed supports overlap");
    require(commutator(left, right).is_identity(), "PL maps with disjoint supports do not commute");

    std::vector<Rational> cut = random::sorted_points(rng, -4, 4, 4);
    PPMap pb = pp_bump(cut[0], cut[1], r(random::uniform(rng, 2, 5)));
    PPMap qb = pp_bump(cut[2], cut[3], r(1, random::uniform(rng, 2, 5)));
    require(support(pb).is_disjoint(support(qb)), "constructed PP supports overlap");
    require(commutator(pb, qb).is_identity(), "PP maps with disjoint supports do not commute");
  }
  return std::to_string(n) + " PL and " + std::to_string(n) + " PP instances";
}

// ---------------------------------------------------------------------------
// 3. germs of commutators at partition points

// Independent recheck of a witnessed radius: the element fixes every
// probe point in (x - r, x + r) inside the ambient.
template <class Elem>
void check_radius(const Elem& e, const Number& x, const Number& radius, const IntervalSet& ambient) {
  require(radius > Number(0), "nonpositive radius");
  for (int j = -8; j <= 8; ++j) {
    Number t = x + radius * Number(r(j, 9));
    if (!ambient.contains(t)) continue;
    require(evaluate(e, t) == t, "element moves a point inside its witnessed radius");
  }
}

std::string criterion_germs() {
  Rng rng(3003);
  int pairs = 0;
  int sets = 0;
  while (pairs < 500) {
    auto h = random::pl_subgroup(rng, static_cast<int>(random::uniform(rng, 1, 4)),
                                 static_cast<int>(random::uniform(rng, 2, 3)));
    Partition p = partition(h);
    std::size_t n = h.size();
    pairs += static_cast<int>(n * (n - 1) / 2);
    ++sets;
    GermCheck gc = germ_trivial_at_partition(h, 1);
    require(gc.trivial, "PL commutator with a nontrivial germ at a partition point");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        PLMap c = commutator(h.elements()[i].value, h.elements()[j].value);
        for (const Number& x : p.points) {
          std::optional<Number> rad = identity_radius(c, x);
          require(rad.has_value(), "commutator not the identity near " + x.str());
          check_radius(c, x, *rad, IntervalSet::unit_interval());
        }
      }
    }
  }

  // projective: words in a, b, c fixing 0
  int pp_sets = 0;
  int pp_checked = 0;
  for (; pp_sets < 200; ++pp_sets) {
    GeneratingSet<PPMap> h;
    for (int j = 0; j < 3; ++j) {
      PPMap e = random::pp_fixing_zero(rng, 3);
      if (e.is_identity()) continue;
      h.add("h" + std::to_string(j), e);
    }
    if (h.size() < 2) continue;
    GeneratingSet<PPMap> d2 = derived_generators(h, 2);
    for (const auto& e : d2.elements()) {
      require(evaluate(e.value, Number(0)) == Number(0), "depth-2 commutator moves 0");
      require(identity_near(e.value, 0), "depth-2 commutator " + e.name() + " has a nontrivial germ at 0");
      std::optional<Number> rad = identity_radius(e.value, 0);
      require(rad.has_value(), "no radius at 0");
      check_radius(e.value, Number(0), *rad, IntervalSet::real_line());
      ++pp_checked;
    }
    GermCheck gc = germ_check(d2, partition(h));
    require(gc.trivial, "depth-2 commutator with a nontrivial germ at a common fixed point");
  }

  // depth 1 is not enough: [c,b] is not the identity near 0
  GeneratingSet<PPMap> bc;
  bc.add("b", projective::b());
  bc.add("c", projective::c());
  GermCheck d1 = germ_trivial_at_partition(bc, 1);
  std::string counterexample;
  for (const GermWitness& w : d1.witnesses) {
    if (!w.radius) counterexample = w.element + " at " + w.point.str();
  }
  require(pp_checked > 0, "no nontrivial depth-2 projective commutators were checked");
  require(!d1.trivial && !counterexample.empty(), "no depth-1 counterexample found");
  require(derivative_at(commutator(projective::c(), projective::b()), 0, Side::Right) == Number(1),
          "commutator germ at 0 should be parabolic");
  return std::to_string(pairs) + " PL pairs in " + std::to_string(sets) + " subgroups, " + std::to_string(pp_sets) +
         " projective sets (" + std::to_string(pp_checked) +
         " depth-2 commutators), depth-1 counterexample " + counterexample;
}

// ---------------------------------------------------------------------------
// 4. partition dichotomy

template <class Elem>
void check_partition(Rng& rng, const GeneratingSet<Elem>& h) {
  Partition p = partition(h);
  require(!partition_violation(h, p).has_value(), "partition_violation reports a problem");
  for (std::size_t i = 0; i < p.cell_count(); ++i) {
    Interval cell = p.cell(i);
    if (p.cells[i] == CellKind::Fixed) {
      for (const auto& g : h.elements()) {
        require(IntervalSet(cell).is_subset_of(fix_set(g.value)), "fixed cell not fixed by " + g.name());
      }
      continue;
    }
    std::vector<Rational> samples = cell_samples(h, p, i);
    Number lo = p.points[i].is_finite() ? p.points[i] : p.points[i + 1] - Number(8);
    Number hi = p.points[i + 1].is_finite() ? p.points[i + 1] : p.points[i] + Number(8);
    if (lo.is_rational() && hi.is_rational()) {
      for (int j = 0; j < 4; ++j) samples.push_back(random::dyadic_between(rng, lo.rational(), hi.rational(), 8));
    }
    for (const Rational& s : samples) {
      require(p.open_cell(i).contains(s), "sample outside its cell");
      bool moved = false;
      for (const auto& g : h.elements()) moved = moved || evaluate(g.value, s) != s;
      require(moved, "support cell point " + to_string(s) + " fixed by every generator");
    }
  }
}

std::string criterion_partition() {
  Rng rng(4004);
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    int cells = static_cast<int>(random::uniform(rng, 1, 5));
    int gens = static_cast<int>(random::uniform(rng, 1, 3));
    if (i % 4 == 3) {
      check_partition(rng, random::pp_subgroup(rng, cells, gens));
    } else {
      check_partition(rng, random::pl_subgroup(rng, cells, gens));
    }
  }
  return std::to_string(n) + " generating sets";
}

// ---------------------------------------------------------------------------
// 5. displacement

std::string criterion_displacement() {
  Rng rng(5005);
  const int n = 500;
  int bfs_found = 0;
  for (int i = 0; i < n; ++i) {
    auto h = random::pl_subgroup(rng, static_cast<int>(random::uniform(rng, 1, 3)), 2);
    Partition p = partition(h);
    std::vector<std::size_t> support_cells;
    for (std::size_t c = 0; c < p.cell_count(); ++c) {
      if (p.cells[c] == CellKind::Support) support_cells.push_back(c);
    }
    std::size_t c = support_cells[static_cast<std::size_t>(random::uniform(rng, 0, static_cast<long>(support_cells.size()) - 1))];
    Interval cell = p.open_cell(c);
    std::vector<Rational> ends = random::sorted_points(rng, cell.lo.rational(), cell.hi.rational(), 2, 6);
    IntervalSet interval(Interval::open(ends[0], ends[1]));

    Displacement d = displace(h, interval, cell);
    // exact recheck by composition
    PLMap k = h.evaluate(d.word);
    IntervalSet image = image_under(interval, k);
    require(image == d.certificate.image, "certificate image is wrong");
    require(image.is_disjoint(interval), "greedy word does not displace the interval");
    if (d.certificate.direction == Direction::Left) {
      require(image.sup() <= interval.inf(), "left certificate inequality fails");
    } else {
      require(image.inf() >= interval.sup(), "right certificate inequality fails");
    }
    require(image.is_subset_of(IntervalSet(cell)), "image leaves the cell");

    TowerConfig bfs;
    bfs.strategy = Strategy::Bfs;
    bfs.max_steps = 8;
    bool found = true;
    try {
      Displacement b = displace(h, interval, cell, bfs);
      require(b.word.length() <= 8, "BFS word too long");
      require(image_under(interval, h.evaluate(b.word)).is_disjoint(interval), "BFS word does not displace");
      require(b.word.length() <= d.word.length(), "BFS word longer than greedy word");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchExhausted) throw;
      found = false;
    }
    if (found) ++bfs_found;
    if (d.word.length() <= 8) require(found, "BFS misses a greedy word of length " + std::to_string(d.word.length()));
  }
  return std::to_string(n) + " instances, BFS feasible at length <= 8 on " + std::to_string(bfs_found);
}

// ---------------------------------------------------------------------------
// 6. tower termination

template <class Elem>
void check_tower(const GeneratingSet<Elem>& h, const TowerReport& rep) {
  std::size_t support_cells = rep.partition.support_cell_count();
  if (rep.outcome == Outcome::Terminated) {
    require(rep.terminal_level <= support_cells, "l exceeds the number of support cells");
    require(rep.terminal_identity, "terminal commutators not all identity");
  }
  for (std::size_t j = 0; j < rep.steps.size(); ++j) {
    const TowerStep& s = rep.steps[j];
    require(s.level == j, "levels out of order");
    if (j > 0) require(s.cell > rep.steps[j - 1].cell, "leftmost cell index did not increase");
    require(s.left_cells_identity, "level " + std::to_string(j + 1) + " not the identity on the left cells");
    require(rep.partition.cells[s.cell] == CellKind::Support, "step in a fixed cell");
    Elem k = h.evaluate(s.displacement);
    require(image_under(s.interval, k).is_disjoint(s.interval), "displacement fails on recheck");
  }
  std::string json = to_json(rep);
  VerifyResult v = verify_report(h, report_from_json(json));
  require(v.ok, "verify_report failed at " + v.where + ": " + v.message);
}

std::string criterion_tower() {
  Rng rng(6006);
  const int n = 300;
  std::size_t max_l = 0;
  int capped = 0;
  for (int i = 0; i < n; ++i) {
    int cells = 1 + i % 6;
    auto h = random::pl_subgroup(rng, cells, 2);
    TowerReport rep = build_tower(h);
    require(rep.partition.support_cell_count() == static_cast<std::size_t>(cells), "support cell count mismatch");
    check_tower(h, rep);
    max_l = std::max(max_l, rep.terminal_level);
    if (rep.capped) ++capped;
    g_reports.push_back({h, to_json(rep)});
  }

  GeneratingSet<PLMap> f;
  f.add("x0", thompson::x0());
  f.add("x1", thompson::x1());
  TowerReport rep = build_tower(f);
  require(rep.partition.points == std::vector<Number>{0, 1}, "canonical partition is not {0,1}");
  require(rep.outcome == Outcome::Terminated && rep.terminal_level == 0, "canonical trace does not end at l = 0");
  require(rep.terminal_identity, "canonical terminal commutators not identity");
  check_tower(f, rep);
  g_reports.push_back({f, to_json(rep)});
  return std::to_string(n) + " subgroups, max l = " + std::to_string(max_l) + ", capped levels in " +
         std::to_string(capped) + "; canonical <x0,x1>: partition {0,1}, l = 0, k_0 = " +
         rep.steps.front().displacement.str();
}

// ---------------------------------------------------------------------------
// 7. representations

std::string criterion_representations() {
  Rng rng(7007);
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    TreePair t = random::tree_pair(rng, 12);
    require(t.is_reduced() && reduce(t) == t, "random pair not reduced");
    PLMap f = to_plmap(t);
    require(is_in_F(f), "tree pair map not in F");
    require(from_plmap(f) == t, "round trip failed for " + t.str());
    PLMap g = random::f_element(rng, 10);
    require(to_plmap(from_plmap(g)) == g, "PL round trip failed for " + g.str());
    TreePair u = random::tree_pair(rng, 12);
    require(to_plmap(multiply(t, u)) == compose(f, to_plmap(u)), "tree pair product disagrees with composition");
  }
  require(is_in_F(thompson::x0()) && is_in_F(thompson::x1()), "x0 or x1 rejected");
  require(!is_in_F(PLMap::parse("PL[(0,0),(1/4,3/4),(1,1)]")), "slope 3 accepted");
  require(!is_in_F(PLMap::parse("PL[(0,0),(1/3,1/2),(1,1)]")), "breakpoint 1/3 accepted");
  return std::to_string(n) + " reduced pairs";
}

// ---------------------------------------------------------------------------
// 8. wire formats

void expect_failure_at(const StoredReport& s, const std::function<void(TowerReport&)>& mutate,
                       const std::string& where) {
  TowerReport rep = report_from_json(s.json);
  mutate(rep);
  VerifyResult v = verify_report(s.h, report_from_json(to_json(rep)));
  require(!v.ok, "tampered report (" + where + ") verified");
  require(v.where == where, "tampered " + where + " reported at " + v.where);
}

std::string criterion_wire() {
  Rng rng(8008);
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    PLMap f = random::uniform(rng, 0, 1) ? random::f_element(rng, 12) : random::pl(rng, 6);
    require(PLMap::parse(f.str()) == f && PLMap::parse(f.str()).str() == f.str(), "PL round trip: " + f.str());
    PPMap p = random::pp_element(rng, 8);
    require(PPMap::parse(p.str()) == p && PPMap::parse(p.str()).str() == p.str(), "PP round trip: " + p.str());
    TreePair t = random::tree_pair(rng, 12);
    require(TreePair::parse(t.str()) == t, "tree pair round trip: " + t.str());
    IntervalSet s = support(p);
    require(IntervalSet::parse(s.str()) == s, "interval set round trip: " + s.str());
    Word w = random::word(rng, {"x0", "x1", "g1"}, 12);
    require(Word::parse(w.str()) == w, "word round trip: " + w.str());
  }

  require(!g_reports.empty(), "no reports from the tower criterion");
  int injected = 0;
  for (const StoredReport& s : g_reports) {
    require(to_json(report_from_json(s.json)) == s.json, "report round trip not bit-exact");
    TowerReport rep = report_from_json(s.json);
    expect_failure_at(s, [](TowerReport& r) { r.outcome = r.outcome == Outcome::Terminated ? Outcome::AbelianAtStart : Outcome::Terminated; },
                      "outcome");
    expect_failure_at(s, [](TowerReport& r) { r.partition.points.back() = make_rational(7, 8); }, "partition");
    ++injected;
    ++injected;
    if (rep.steps.empty()) continue;
    expect_failure_at(s, [](TowerReport& r) { r.steps[0].displacement = Word(); }, "steps[0].certificate");
    expect_failure_at(s, [](TowerReport& r) { r.steps[0].certificate.inequality += " "; }, "steps[0].certificate");
    expect_failure_at(s, [](TowerReport& r) { r.steps[0].left_cells_identity = !r.steps[0].left_cells_identity; },
                      "steps[0].left_cells_identity");
    expect_failure_at(s, [](TowerReport& r) { r.steps[0].next_generators.push_back("[x0,x1]"); },
                      "steps[0].next_generators");
    injected += 4;
  }
  return std::to_string(n) + " element round trips, " + std::to_string(g_reports.size()) + " reports, " +
         std::to_string(injected) + " injected faults located";
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact-kernel laws", 5, criterion_kernel},
      {2, "group axioms and support transport", 10, criterion_axioms},
      {3, "germ triviality of commutators", 30, criterion_germs},
      {4, "partition dichotomy", 10, criterion_partition},
      {5, "displacement", 60, criterion_displacement},
      {6, "tower termination", 120, criterion_tower},
      {7, "tree pair representations", 5, criterion_representations},
      {8, "wire formats", 5, criterion_wire},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      std::ostringstream msg;
      msg << "over budget (" << c.budget_seconds << " s); " << detail;
      detail = msg.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ": " << detail << " [" << timing
              << "]" << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
