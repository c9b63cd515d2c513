#include <gtest/gtest.h>

#include "printers.hpp"

#include "pltower/error.hpp"
#include "pltower/interval_set.hpp"
#include "pltower/plmap.hpp"
#include "pltower/treepair.hpp"
#include "pltower/word.hpp"

using namespace pltower;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Precondition;
}

const PLMap x0 = thompson::x0();
const PLMap x1 = thompson::x1();

// bumps supported on (0,1/2) and (1/2,1)
PLMap left_bump() { return PLMap::parse("PL[(0,0),(1/4,1/8),(3/8,1/4),(1/2,1/2),(1,1)]"); }
PLMap right_bump() { return x1; }

}  // namespace

TEST(IntervalSet, Basics) {
  IntervalSet a = IntervalSet::parse("(1/2,1)");
  IntervalSet b = IntervalSet::parse("[0,1/2]");
  EXPECT_TRUE(a.intersect(b).empty());
  EXPECT_TRUE(IntervalSet::parse("(1/8,1/4)").is_disjoint(IntervalSet::parse("(1/4,1/2)")));
  EXPECT_FALSE(IntervalSet::parse("(1/8,1/4]").is_disjoint(IntervalSet::parse("[1/4,1/2)")));
  EXPECT_EQ(a.unite(b), IntervalSet::unit_interval().intersect(IntervalSet::parse("[0,1)")));
  EXPECT_EQ(IntervalSet::parse("[0,1/4] u {1}").complement_in(IntervalSet::unit_interval()),
            IntervalSet::parse("(1/4,1)"));
  EXPECT_EQ(IntervalSet::parse("(0,1/2) u (1/2,1)").closure(), IntervalSet::unit_interval());
}

TEST(IntervalSet, Normalizes) {
  IntervalSet s(std::vector<Interval>{Interval::closed(r(1, 2), 1), Interval::open(0, r(1, 2))});
  EXPECT_EQ(s.str(), "(0,1]");
  EXPECT_EQ(IntervalSet::parse(s.str()), s);
  EXPECT_EQ(IntervalSet::parse("{}").size(), 0u);
}

TEST(IntervalSet, ImageUnderX0) {
  EXPECT_EQ(image_under(IntervalSet::parse("(1/2,1)"), x0), IntervalSet::parse("(1/4,1)"));
}

TEST(PLMap, Evaluate) {
  EXPECT_EQ(evaluate(PLMap::identity(), r(1, 3)), r(1, 3));
  EXPECT_EQ(evaluate(x0, r(1, 2)), r(1, 4));
  EXPECT_EQ(evaluate(x0, r(5, 8)), r(3, 8));
  EXPECT_EQ(evaluate(x0, Number::surd(0, r(1, 2), 2)), Number::surd(r(-1, 4), r(1, 2), 2));
  EXPECT_EQ(kind_of([] { (void)evaluate(x0, r(3, 2)); }), ErrorKind::OutOfDomain);
}

TEST(PLMap, Validation) {
  EXPECT_EQ(kind_of([] { (void)PLMap::parse("PL[(0,0),(1/2,1/4),(1/4,1/2),(1,1)]"); }), ErrorKind::Semantic);
  EXPECT_EQ(kind_of([] { (void)PLMap::parse("PL[(0,0),(1/2,1/2),(1/4,1/4)]"); }), ErrorKind::Semantic);
  EXPECT_EQ(kind_of([] { (void)PLMap::parse("PL[(0,0),(1/2,3/4),(3/4,1/2),(1,1)]"); }), ErrorKind::Semantic);
  EXPECT_EQ(kind_of([] { (void)PLMap::parse("PL[(0,0),(1,1)"); }), ErrorKind::Syntax);
  EXPECT_EQ(PLMap::parse("PL[(0,0),(1/2,1/2),(1,1)]"), PLMap::identity());
}

TEST(PLMap, Compose) {
  EXPECT_TRUE(compose(x0, inverse(x0)).is_identity());
  EXPECT_EQ(evaluate(compose(x0, x0), r(3, 4)), r(1, 4));
  EXPECT_EQ(compose(PLMap::identity(), x1), x1);
  // right action: x.(f g) = (x.f).g
  EXPECT_EQ(evaluate(compose(x0, x1), r(7, 8)), evaluate(x1, evaluate(x0, r(7, 8))));
}

TEST(PLMap, Inverse) {
  EXPECT_EQ(inverse(PLMap::identity()), PLMap::identity());
  EXPECT_EQ(inverse(x0), PLMap::parse("PL[(0,0),(1/4,1/2),(1/2,3/4),(1,1)]"));
  EXPECT_EQ(inverse(inverse(x1)), x1);
}

TEST(PLMap, CommutatorAndConjugate) {
  EXPECT_TRUE(commutator(x0, x0).is_identity());
  EXPECT_TRUE(commutator(left_bump(), right_bump()).is_identity());
  EXPECT_EQ(support(conjugate(x1, x0)), IntervalSet::parse("(1/4,1)"));
  // breakpoints of [x0,x1] computed by composing the four maps pointwise on
  // the grid k/1024 with exact fractions and reading off slope changes
  EXPECT_EQ(commutator(x0, x1), PLMap::parse("PL[(0,0),(1/4,1/4),(3/8,1/2),(1/2,5/8),(3/4,3/4),(1,1)]"));
}

TEST(PLMap, FixSetAndSupport) {
  EXPECT_EQ(fix_set(PLMap::identity()), IntervalSet::unit_interval());
  EXPECT_EQ(fix_set(x1), IntervalSet::parse("[0,1/2] u {1}"));
  EXPECT_EQ(support(x1), IntervalSet::parse("(1/2,1)"));
  EXPECT_EQ(fix_set(PLMap::parse("PL[(0,0),(1/4,1/4),(1/2,3/8),(1,1)]")), IntervalSet::parse("[0,1/4] u {1}"));
  EXPECT_EQ(fix_set(x0), IntervalSet::parse("{0} u {1}"));
  // crossing the diagonal between breakpoints: y = x at 1/2 inside a piece
  PLMap cross = PLMap::parse("PL[(0,0),(1/4,1/8),(3/4,7/8),(1,1)]");
  EXPECT_EQ(fix_set(cross), IntervalSet::parse("{0} u {1/2} u {1}"));
}

TEST(PLMap, Germs) {
  EXPECT_EQ(one_sided_slope(x0, 0, Side::Right), r(1, 2));
  EXPECT_EQ(one_sided_slope(x0, 1, Side::Left), r(2));
  PLMap k = commutator(x0, x1);
  EXPECT_EQ(one_sided_slope(k, 0, Side::Right), r(1));
  EXPECT_EQ(one_sided_slope(k, 1, Side::Left), r(1));
  EXPECT_TRUE(identity_near(k, 0));
  EXPECT_TRUE(identity_near(k, 1));
  EXPECT_FALSE(identity_near(x0, 0));
  EXPECT_EQ(identity_radius(k, 0), Number(r(1, 4)));
  EXPECT_EQ(identity_radius(k, 1), Number(r(1, 4)));
  EXPECT_FALSE(identity_radius(x0, 0).has_value());
  EXPECT_FALSE(identity_near(x0, r(1, 2)));
}

TEST(PLMap, IsInF) {
  EXPECT_TRUE(is_in_F(x0));
  EXPECT_TRUE(is_in_F(x1));
  EXPECT_FALSE(is_in_F(PLMap::parse("PL[(0,0),(1/3,1/2),(1,1)]")));
  EXPECT_FALSE(is_in_F(PLMap::parse("PL[(0,0),(1/4,3/4),(1,1)]")));
}

TEST(TreePair, Reduce) {
  BinaryTree t = BinaryTree::parse("((* *) (* (* *)))");
  TreePair id = reduce(TreePair(t, t));
  EXPECT_TRUE(id.domain().is_leaf());
  EXPECT_TRUE(id.range().is_leaf());
  EXPECT_EQ(reduce(thompson::x0_pair()), thompson::x0_pair());
  // x0's pair with one extra common caret on the last leaf
  TreePair padded = TreePair::parse("((* *) (* *))|(* (* (* *)))");
  TreePair reduced = reduce(padded);
  EXPECT_EQ(reduced.domain().leaf_count() + 1, padded.domain().leaf_count());
  EXPECT_EQ(to_plmap(reduced), to_plmap(padded));
  EXPECT_EQ(kind_of([] { (void)TreePair::parse("(* *)|*"); }), ErrorKind::LeafCountMismatch);
}

TEST(TreePair, ToPLMap) {
  EXPECT_TRUE(to_plmap(TreePair()).is_identity());
  EXPECT_EQ(to_plmap(thompson::x0_pair()), x0);
  EXPECT_EQ(to_plmap(thompson::x1_pair()), x1);
  EXPECT_EQ(from_plmap(x0), thompson::x0_pair());
  EXPECT_EQ(from_plmap(x1), thompson::x1_pair());
  EXPECT_EQ(kind_of([] { (void)from_plmap(PLMap::parse("PL[(0,0),(1/4,3/4),(1,1)]")); }), ErrorKind::NotInF);
}

TEST(TreePair, Multiply) {
  TreePair a = thompson::x0_pair();
  TreePair b = thompson::x1_pair();
  EXPECT_EQ(to_plmap(multiply(a, b)), compose(x0, x1));
  EXPECT_EQ(to_plmap(inverse(a)), inverse(x0));
  EXPECT_EQ(multiply(a, inverse(a)), TreePair());
}

TEST(Word, Evaluate) {
  std::map<std::string, PLMap, std::less<>> env = {{"x0", x0}, {"x1", x1}};
  EXPECT_TRUE(word_evaluate<PLMap>(Word::parse("x0 x0^-1"), env).is_identity());
  PLMap k = evaluate_expr<PLMap>(Expr::parse("[x0,x1]"), [&](const std::string& n) -> const PLMap* {
    auto it = env.find(n);
    return it == env.end() ? nullptr : &it->second;
  });
  EXPECT_EQ(k, commutator(x0, x1));
  std::map<std::string, PLMap, std::less<>> only_x0 = {{"x0", x0}};
  EXPECT_EQ(kind_of([&] { (void)word_evaluate<PLMap>(Word::parse("x1"), only_x0); }), ErrorKind::UnboundName);
}

TEST(Word, Text) {
  Word w = Word::parse("x0^2 x1^-1 x1^-1");
  EXPECT_EQ(w.str(), "x0^2 x1^-2");
  EXPECT_EQ(w.length(), 4);
  EXPECT_EQ(w.inverse().str(), "x1^2 x0^-2");
  EXPECT_TRUE(Word::parse("x0 x0^-1").empty());
  Expr e = Expr::parse("[x0, x1^-1] (x0 x1)^3");
  EXPECT_EQ(Expr::parse(e.str()), e);
  EXPECT_EQ(Expr::parse("(x0)^-1 x1 x0").flatten(), Word::parse("x0^-1 x1 x0"));
  EXPECT_EQ(kind_of([] { (void)Expr::parse("[x0, x1"); }), ErrorKind::Syntax);
}
