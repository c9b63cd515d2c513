#include <gtest/gtest.h>

#include "printers.hpp"

#include "pltower/error.hpp"
#include "pltower/random.hpp"
#include "pltower/report.hpp"
#include "pltower/tower.hpp"
#include "pltower/treepair.hpp"

using namespace pltower;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

const PLMap x0 = thompson::x0();
const PLMap x1 = thompson::x1();

GeneratingSet<PLMap> f_gens() {
  GeneratingSet<PLMap> h;
  h.add("x0", x0);
  h.add("x1", x1);
  return h;
}

}  // namespace

TEST(Displace, GreedyPushesLeft) {
  auto h = f_gens();
  Displacement d = displace(h, IntervalSet::parse("(1/4,1/2)"), Interval::open(0, 1));
  // 1/2.x0 = 1/4 touches, 1/2.x0^2 = 1/8 clears
  EXPECT_EQ(d.word, Word::parse("x0^2"));
  EXPECT_EQ(d.certificate.direction, Direction::Left);
  EXPECT_EQ(d.certificate.image, IntervalSet::parse("(1/16,1/8)"));
  EXPECT_EQ(d.certificate.inequality, "sup(I.k) = 1/8 < 1/4 = inf(I)");
}

TEST(Displace, WithinCell) {
  GeneratingSet<PLMap> h;
  h.add("x1", x1);
  Displacement d = displace(h, IntervalSet::parse("(5/8,3/4)"), Interval::open(r(1, 2), 1));
  Word w = d.word;
  ASSERT_EQ(w.letters().size(), 1u);
  EXPECT_EQ(w.letters()[0].name, "x1");
  PLMap k = h.evaluate(w);
  EXPECT_TRUE(image_under(IntervalSet::parse("(5/8,3/4)"), k).is_disjoint(IntervalSet::parse("(5/8,3/4)")));
  EXPECT_TRUE(image_under(IntervalSet::parse("(5/8,3/4)"), k).is_subset_of(IntervalSet::parse("(1/2,1)")));
}

TEST(Displace, BfsFindsShortestWord) {
  auto h = f_gens();
  TowerConfig cfg;
  cfg.strategy = Strategy::Bfs;
  cfg.max_steps = 8;
  Displacement d = displace(h, IntervalSet::parse("(1/4,1/2)"), Interval::open(0, 1), cfg);
  EXPECT_LE(d.word.length(), 2);
  EXPECT_TRUE(displacement_certificate(h.evaluate(d.word), IntervalSet::parse("(1/4,1/2)")).has_value());
}

TEST(Displace, Preconditions) {
  auto h = f_gens();
  auto kind = [&](const char* interval, const Interval& cell) {
    try {
      displace(h, IntervalSet::parse(interval), cell);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Semantic;
  };
  EXPECT_EQ(kind("(0,1)", Interval::open(0, 1)), ErrorKind::Precondition);
  EXPECT_EQ(kind("{}", Interval::open(0, 1)), ErrorKind::Precondition);
  EXPECT_EQ(kind("(1/2,3/2)", Interval::open(0, 1)), ErrorKind::Precondition);
}

TEST(Displace, CertificateRejectsOverlap) {
  // (1/8,1/4) is disjoint from (1/4,1/2) but the inequality is not strict
  EXPECT_FALSE(displacement_certificate(x0, IntervalSet::parse("(1/4,1/2)")).has_value());
  EXPECT_TRUE(displacement_certificate(compose(x0, x0), IntervalSet::parse("(1/4,1/2)")).has_value());
  EXPECT_FALSE(displacement_certificate(PLMap::identity(), IntervalSet::parse("(1/4,1/2)")).has_value());
  auto right = displacement_certificate(inverse(x0), IntervalSet::parse("(1/8,3/16)"));
  ASSERT_TRUE(right.has_value());
  EXPECT_EQ(right->direction, Direction::Right);
}

TEST(Tower, CanonicalTrace) {
  auto h = f_gens();
  TowerReport rep = build_tower(h);
  EXPECT_EQ(rep.partition.points, (std::vector<Number>{0, 1}));
  EXPECT_EQ(rep.initial_generators, std::vector<std::string>{"[x0,x1]"});
  EXPECT_TRUE(rep.germs_trivial);
  ASSERT_EQ(rep.steps.size(), 1u);
  const TowerStep& s = rep.steps[0];
  EXPECT_EQ(s.cell, 0u);
  EXPECT_EQ(s.interval, IntervalSet::parse("(1/4,3/4)"));
  EXPECT_EQ(s.displacement, Word::parse("x0^3"));
  EXPECT_EQ(s.certificate.inequality, "sup(I.k) = 1/8 < 1/4 = inf(I)");
  EXPECT_TRUE(s.next_generators.empty());
  EXPECT_EQ(rep.terminal_level, 0u);
  EXPECT_TRUE(rep.terminal_identity);
  EXPECT_EQ(rep.outcome, Outcome::Terminated);
  EXPECT_TRUE(verify_report(h, rep).ok);
}

TEST(Tower, AbelianAtStart) {
  GeneratingSet<PLMap> h;
  h.add("f", PLMap::parse("PL[(0,0),(1/4,1/8),(3/8,1/4),(1/2,1/2),(1,1)]"));
  h.add("g", x1);
  TowerReport rep = build_tower(h);
  EXPECT_EQ(rep.outcome, Outcome::AbelianAtStart);
  EXPECT_TRUE(rep.steps.empty());
  EXPECT_TRUE(verify_report(h, rep).ok);
}

TEST(Tower, ProjectiveGeneratorsDepthTwo) {
  GeneratingSet<PPMap> h;
  h.add("a", projective::a());
  h.add("b", projective::b());
  h.add("c", projective::c());
  TowerReport rep = build_tower(h);
  EXPECT_EQ(rep.germ_depth, 2);
  EXPECT_EQ(rep.ambient, Ambient::RealLine);
  EXPECT_TRUE(verify_report(h, report_from_json(to_json(rep))).ok);
}

TEST(Tower, RandomTwoCellSubgroups) {
  random::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    auto h = random::pl_subgroup(rng, 2, 2);
    TowerReport rep = build_tower(h);
    if (rep.outcome == Outcome::Terminated) EXPECT_LE(rep.terminal_level, 2u);
    for (const TowerStep& s : rep.steps) {
      // independent recheck by composition
      PLMap k = h.evaluate(s.displacement);
      EXPECT_TRUE(image_under(s.interval, k).is_disjoint(s.interval));
    }
    EXPECT_TRUE(verify_report(h, rep).ok);
  }
}

TEST(Verify, TamperedDisplacement) {
  auto h = f_gens();
  TowerReport rep = build_tower(h);
  rep.steps[0].displacement = Word::parse("x0");
  VerifyResult v = verify_report(h, rep);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.where, "steps[0].certificate");
}

TEST(Verify, DifferentGroup) {
  auto h = f_gens();
  TowerReport rep = build_tower(h);
  GeneratingSet<PLMap> other;
  other.add("x0", x0);
  other.add("x1", compose(x1, x1));
  VerifyResult v = verify_report(other, rep);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.where, "generators");

  GeneratingSet<PLMap> renamed;
  renamed.add("y0", x0);
  renamed.add("y1", x1);
  EXPECT_FALSE(verify_report(renamed, rep).ok);
}

TEST(Report, JsonRoundTrip) {
  auto h = f_gens();
  TowerReport rep = build_tower(h);
  std::string text = to_json(rep);
  TowerReport back = report_from_json(text);
  EXPECT_EQ(back, rep);
  EXPECT_EQ(to_json(back), text);
  EXPECT_NE(text.find("\"schema\": \"pltower.tower-report\""), std::string::npos);
}

TEST(Report, MalformedJson) {
  auto kind = [](std::string_view text) {
    try {
      report_from_json(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Precondition;
  };
  EXPECT_EQ(kind("{"), ErrorKind::Syntax);
  EXPECT_EQ(kind("{\"schema\": \"other\"}"), ErrorKind::Semantic);
  std::string text = to_json(build_tower(f_gens()));
  text.replace(text.find("\"version\": 1"), 12, "\"version\": 9");
  EXPECT_EQ(kind(text), ErrorKind::Semantic);
}
