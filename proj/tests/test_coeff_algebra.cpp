#include <gtest/gtest.h>

#include "daha/coeff_algebra.hpp"

using namespace daha;

namespace {

Weight wt(std::initializer_list<int> c) {
  Weight v{};
  int i = 0;
  for (int x : c) v[i++] = x;
  return v;
}

GroupAlgElt X(std::initializer_list<int> c) { return GroupAlgElt::monomial(wt(c)); }
GroupAlgElt one() { return GroupAlgElt::constant(1); }

GroupAlgElt tau(int slot, int p = 1) {
  Monomial m;
  m.tau[slot] = p;
  return GroupAlgElt::term(m);
}

}  // namespace

TEST(GroupAlg, MonomialArithmetic) {
  EXPECT_EQ(X({1}) * X({-1}), one());
  EXPECT_EQ(X({1, 2}) * X({3, -1}), X({4, 1}));
  EXPECT_TRUE((X({1}) - X({1})).is_zero());
  const GroupAlgElt f = one() + X({1}) + tau(0);
  EXPECT_EQ(f * f, one() + X({2}) + tau(0, 2) + X({1}).scale(2) + tau(0).scale(2) +
                       (X({1}) * tau(0)).scale(2));
}

TEST(GroupAlg, ExactDivision) {
  // (X^w - X^{-w}) / (1 - X^{-2w}) = X^w in A1.
  auto q = exact_divide(X({1}) - X({-1}), wt({2}));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, X({1}));
  auto r = exact_divide(one() - X({-2}), wt({2}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, one());
  EXPECT_FALSE(exact_divide(one() + X({-2}), wt({2})));
  // Negative direction.
  auto s = exact_divide(one() - X({2}), wt({-2}));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, one());
}

TEST(GroupAlg, DivisionRoundTrip) {
  // Multiply random-looking polynomials by a binomial and divide back.
  const GroupAlgElt g = X({3, -1}).scale(Rational(2, 3)) + tau(1, -2) * X({0, 1}) - one();
  for (const Weight& beta : {wt({1, 0}), wt({-1, 2}), wt({2, -3})}) {
    const GroupAlgElt binom = one() - GroupAlgElt::monomial(wt({-beta[0], -beta[1]}));
    auto q = exact_divide(g * binom, beta);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, g);
    EXPECT_FALSE(exact_divide(g * binom + X({7, 7}), beta));
  }
  Monomial d;
  d.x = wt({1, 1});
  d.tau[0] = 2;
  const GroupAlgElt deformed = one() - GroupAlgElt::term(d);
  auto q = divide_by_binomial(g * deformed, d, 1);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, g);
}

TEST(GroupAlg, Specialization) {
  TauAssignment a{Rational(2), Rational(3)};
  const GroupAlgElt f = (tau(0) - tau(0, -1)) * X({1});
  EXPECT_EQ(f.specialize(a), X({1}).scale(Rational(3, 2)));
  const GroupAlgElt g = tau(1, 2) + X({-1});
  EXPECT_EQ((f * g).specialize(a), f.specialize(a) * g.specialize(a));
  EXPECT_THROW(f.specialize(TauAssignment{Rational(0), Rational(1)}), std::invalid_argument);
}

TEST(GroupAlg, Rendering) {
  EXPECT_EQ(GroupAlgElt().render(1, true), "0");
  EXPECT_EQ((one() - X({-2})).render(1, true), "1 - X[-2]");
  EXPECT_EQ((tau(0) - tau(0, -1)).render(1, true), "t - t^-1");
  EXPECT_EQ(tau(1, 2).render(2, false), "tl^2");
}

TEST(TauLaurentTest, Arithmetic) {
  const TauLaurent t = TauLaurent::tau(0);
  const TauLaurent ti = TauLaurent::tau(0, -1);
  EXPECT_EQ(t * ti, TauLaurent(1));
  EXPECT_EQ((t - ti).evaluate({Rational(2), Rational(1)}), Rational(3, 2));
}

class RationalFnTest : public ::testing::Test {
 protected:
  std::shared_ptr<const RootSystemData> a1 = RootSystemData::build({Family::A, 1});
  std::shared_ptr<const RootSystemData> a2 = RootSystemData::build({Family::A, 2});
};

TEST_F(RationalFnTest, InverseTimesBinomialIsOne) {
  const RationalFn inv = RationalFn::inverse_root_binomial(*a1, 0);
  const RationalFn binom(*a1, one() - X({-2}));
  EXPECT_EQ(inv * binom, RationalFn(*a1, one()));
  EXPECT_TRUE((inv * binom).is_polynomial());
}

TEST_F(RationalFnTest, NormalFormIsUnique) {
  // (X^w - X^-w) / (1 - X^-2w) reduces to X^w.
  const RationalFn f = RationalFn::fraction(*a1, X({1}) - X({-1}), {{root_factor(*a1, 0), 1}});
  EXPECT_EQ(f, RationalFn(*a1, X({1})));
  // 1/(1-X^-a) + X^-a/(1-X^-a) ... two paths to (1 + X^-a)/(1 - X^-a).
  const RationalFn inv = RationalFn::inverse_root_binomial(*a1, 0);
  const RationalFn p1 = inv + RationalFn(*a1, X({-2})) * inv;
  const RationalFn p2 = RationalFn::fraction(*a1, one() + X({-2}), {{root_factor(*a1, 0), 1}});
  EXPECT_EQ(p1, p2);
}

TEST_F(RationalFnTest, NegativeRootBinomialIsCanonicalized) {
  // 1 / (1 - X^{a}) = -X^{-a} / (1 - X^{-a}).
  const RationalFn f = RationalFn::inverse_root_binomial(*a1, 1);
  EXPECT_EQ(f.denominator().size(), 1u);
  EXPECT_EQ(f.denominator().begin()->first.root, 0);
  EXPECT_EQ(f * RationalFn(*a1, one() - X({2})), RationalFn(*a1, one()));
}

TEST_F(RationalFnTest, NonRootDenominatorRejected) {
  DenomFactor bad;
  bad.root = 0;
  bad.dir.x = wt({-1});
  EXPECT_THROW(RationalFn::fraction(*a1, one(), {{bad, 1}}), std::invalid_argument);
}

TEST_F(RationalFnTest, GradientAction) {
  const FiniteWeylElt s1 = FiniteWeylElt::reflection(*a1, 0);
  EXPECT_EQ(RationalFn(*a1, X({1})).act(s1), RationalFn(*a1, X({-1})));
  const RationalFn inv = RationalFn::inverse_root_binomial(*a1, 0);
  EXPECT_EQ(inv.act(s1), RationalFn::inverse_root_binomial(*a1, 1));
  // Translations act trivially.
  Coweight lambda{};
  lambda[0] = 3;
  const auto t = ExtAffineWeylElt::translation(*a1, lambda);
  EXPECT_EQ(gradient_action(t, inv), inv);
}

TEST_F(RationalFnTest, GradientActionIsAGroupAction) {
  const FiniteWeylElt s1 = FiniteWeylElt::reflection(*a2, a2->simple_root(1));
  const FiniteWeylElt s2 = FiniteWeylElt::reflection(*a2, a2->simple_root(2));
  const RationalFn f = RationalFn::fraction(*a2, X({1, 0}) + tau(0), {{root_factor(*a2, 0), 2}}) +
                       RationalFn::inverse_root_binomial(*a2, 2);
  EXPECT_EQ(f.act(s1 * s2), f.act(s2).act(s1));
  EXPECT_EQ(f.act(s1).act(s1), f);
  const RationalFn c(*a2, tau(0, 3));
  EXPECT_EQ(c.act(s1 * s2), c);
}

TEST_F(RationalFnTest, UnitRecognition) {
  const HeckeParams params = HeckeParams::symbolic();
  // (t^-1 - t X^-a) / (1 - X^-a) is a unit of the deformed localization.
  const RationalFn f = RationalFn::fraction(*a1, tau(0, -1) - tau(0) * X({-2}),
                                            {{root_factor(*a1, 0), 1}});
  EXPECT_TRUE(is_localized_unit(f, params));
  auto inv = unit_inverse(f, params);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * f, RationalFn(*a1, one()));
  EXPECT_FALSE(is_localized_unit(RationalFn(*a1, one() + X({2})), params));
  EXPECT_FALSE(is_localized_unit(RationalFn(*a1), params));
  EXPECT_TRUE(is_localized_unit(RationalFn(*a1, X({5}).scale(-3)), params));
}

TEST_F(RationalFnTest, UnitRecognitionSpecialized) {
  const HeckeParams params = HeckeParams::specialized({Rational(2), Rational(1)});
  const RationalFn f = RationalFn::fraction(*a1, one().scale(Rational(1, 2)) - X({-2}).scale(2),
                                            {{root_factor(*a1, 0), 1}});
  EXPECT_TRUE(is_localized_unit(f, params));
  auto inv = unit_inverse(f, params);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * f, RationalFn(*a1, one()));
}

TEST_F(RationalFnTest, SpecializationIsAHomomorphism) {
  const TauAssignment a{Rational(-2, 3), Rational(5)};
  const RationalFn f = RationalFn::fraction(*a2, tau(0) * X({1, 0}) - tau(0, -1),
                                            {{root_factor(*a2, 1), 1}});
  const RationalFn g = RationalFn::inverse_root_binomial(*a2, 0) + RationalFn(*a2, tau(0, 2));
  EXPECT_EQ((f * g).specialize(a), f.specialize(a) * g.specialize(a));
  EXPECT_EQ((f + g).specialize(a), f.specialize(a) + g.specialize(a));
}

TEST_F(RationalFnTest, MixedSystemsRejected) {
  EXPECT_THROW(RationalFn(*a1, one()) + RationalFn(*a2, one()), std::invalid_argument);
}

TEST_F(RationalFnTest, Rendering) {
  EXPECT_EQ(RationalFn::inverse_root_binomial(*a1, 0).render(), "1 / (1 - X[-2])");
}
