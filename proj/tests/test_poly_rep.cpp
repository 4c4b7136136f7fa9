#include <gtest/gtest.h>

#include "daha/poly_rep.hpp"

using namespace daha;

namespace {

std::shared_ptr<const AffineWeylGroup> group(Family f, int n, Twist t = Twist::Untwisted) {
  return std::make_shared<AffineWeylGroup>(RootSystemData::build({f, n, t}));
}

Weight wt(std::initializer_list<int> c) {
  Weight v{};
  int i = 0;
  for (int x : c) v[i++] = x;
  return v;
}

GroupAlgElt X(std::initializer_list<int> c) { return GroupAlgElt::monomial(wt(c)); }

GroupAlgElt tau(int p = 1) {
  Monomial m;
  m.tau[0] = p;
  return GroupAlgElt::term(m);
}

}  // namespace

TEST(LevelledActionTest, A1Examples) {
  auto g = group(Family::A, 1);
  const LevelledAction act(g, 1);
  EXPECT_EQ(act.c(), 1);
  EXPECT_EQ(act.act(g->simple_reflection(0), wt({0})), wt({2}));  // s_0(0) = alpha_1
  EXPECT_EQ(act.act(g->simple_reflection(0), wt({1})), wt({1}));  // omega lies on the wall
  EXPECT_EQ(act.act(g->simple_reflection(1), wt({3})), wt({-3}));
  EXPECT_THROW(LevelledAction(g, 0), std::invalid_argument);
}

TEST(LevelledActionTest, IsAnAction) {
  for (auto g : {group(Family::C, 2, Twist::Twisted), group(Family::B, 2), group(Family::G, 2)}) {
    for (int t : {1, 2}) {
      const LevelledAction act(g, t);
      const auto ball = g->enumerate_ball(2);
      for (const auto& a : ball)
        for (const auto& b : ball)
          for (const Weight& mu : monomial_box(2, 1))
            EXPECT_EQ(act.act(a.element * b.element, mu), act.act(a.element, act.act(b.element, mu)));
    }
  }
}

TEST(PolyRep, GeneratorExamples) {
  auto g = group(Family::A, 1);
  const PolynomialRepresentation rep(LevelledAction(g, 1), HeckeParams::symbolic());
  // T_1 X^w = t X^-w + (t - t^-1) X^w.
  EXPECT_EQ(rep.apply_generator(1, X({1})), tau() * X({-1}) + (tau() - tau(-1)) * X({1}));
  EXPECT_EQ(rep.apply_generator(1, GroupAlgElt::constant(1)), tau());
  // T_0 1 = t X^a + (t - t^-1) (1 - X^a) / (1 - X^a).
  EXPECT_EQ(rep.apply_generator(0, GroupAlgElt::constant(1)),
            tau() * X({2}) + (tau() - tau(-1)));
}

TEST(PolyRep, TrivialParameterIsPermutationAction) {
  auto g = group(Family::A, 2);
  const LevelledAction act(g, 1);
  const PolynomialRepresentation rep(act, HeckeParams::specialized({Rational(1), Rational(1)}));
  for (const Weight& mu : monomial_box(2, 2))
    for (int j = 0; j <= 2; ++j)
      EXPECT_EQ(rep.apply_generator(j, GroupAlgElt::monomial(mu)),
                GroupAlgElt::monomial(act.act(g->simple_reflection(j), mu)));
}

TEST(PolyRep, PresentationA1) {
  auto g = group(Family::A, 1);
  const PolynomialRepresentation rep(LevelledAction(g, 1), HeckeParams::symbolic());
  const VerificationReport r = verify_poly_presentation(rep, 4, 2);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_GT(r.count(CaseStatus::Pass), 4u);
}

TEST(PolyRep, PresentationA2AndC2) {
  for (auto g : {group(Family::A, 2), group(Family::C, 2, Twist::Twisted)}) {
    const PolynomialRepresentation rep(LevelledAction(g, 1), HeckeParams::symbolic());
    const VerificationReport r = verify_poly_presentation(rep, 1, 2);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(PolyRep, MutatedQuadraticFails) {
  auto g = group(Family::A, 1);
  const PolynomialRepresentation rep(LevelledAction(g, 1), HeckeParams::symbolic());
  const VerificationReport r = verify_poly_presentation(rep.mutate(Mutation::TauSquared), 1, 0);
  EXPECT_FALSE(r.passed());
}

TEST(PolyRep, Box) {
  EXPECT_EQ(monomial_box(1, 4).size(), 9u);
  EXPECT_EQ(monomial_box(2, 2).size(), 25u);
  EXPECT_EQ(monomial_box(3, 0).size(), 1u);
}
