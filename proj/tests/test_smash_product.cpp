#include <gtest/gtest.h>

#include "daha/smash_product.hpp"

using namespace daha;

namespace {

class SmashTest : public ::testing::Test {
 protected:
  std::shared_ptr<const RootSystemData> rs = RootSystemData::build({Family::A, 1});
  AffineWeylGroup g{rs};

  SmashElt X(int k) const {
    Weight w{};
    w[0] = k;
    return SmashElt::embed_fn(*rs, RationalFn(*rs, GroupAlgElt::monomial(w)));
  }
  SmashElt W(const ExtAffineWeylElt& w) const { return SmashElt::embed_group(w); }
};

}  // namespace

TEST_F(SmashTest, CommutativePart) { EXPECT_EQ(X(1) * X(2), X(3)); }

TEST_F(SmashTest, CrossRelation) {
  const auto& s1 = g.simple_reflection(1);
  EXPECT_EQ(W(s1) * X(1), X(-1) * W(s1));
  Coweight lambda{};
  lambda[0] = 1;
  const auto t = ExtAffineWeylElt::translation(*rs, lambda);
  EXPECT_EQ(W(t) * X(1), X(1) * W(t));
}

TEST_F(SmashTest, Embeddings) {
  const SmashElt unit = W(g.identity());
  const SmashElt a = X(1) + W(g.simple_reflection(0));
  EXPECT_EQ(unit * a, a);
  EXPECT_EQ(a * unit, a);
  const auto& s0 = g.simple_reflection(0);
  const auto& s1 = g.simple_reflection(1);
  EXPECT_EQ(W(s0) * W(s1), W(s0 * s1));
  const RationalFn f = RationalFn::inverse_root_binomial(*rs, 0);
  const RationalFn h(*rs, GroupAlgElt::monomial(Weight{3}));
  EXPECT_EQ(SmashElt::embed_fn(*rs, f) * SmashElt::embed_fn(*rs, h), SmashElt::embed_fn(*rs, f * h));
}

TEST_F(SmashTest, ConjugationActsThroughGradient) {
  const RationalFn f = RationalFn::inverse_root_binomial(*rs, 0);
  for (const auto& e : g.enumerate_ball(3)) {
    const SmashElt lhs = W(e.element) * SmashElt::embed_fn(*rs, f) * W(e.element.inverse());
    EXPECT_EQ(lhs, SmashElt::embed_fn(*rs, gradient_action(e.element, f)));
  }
}

TEST_F(SmashTest, TranslationsAreCentralForCoefficients) {
  Coweight lambda{};
  lambda[0] = 2;
  const auto t = ExtAffineWeylElt::translation(*rs, lambda);
  const SmashElt f = SmashElt::embed_fn(*rs, RationalFn::inverse_root_binomial(*rs, 1)) + X(5);
  EXPECT_EQ(W(t) * f, f * W(t));
}

TEST_F(SmashTest, ZeroCoefficientsAreDropped) {
  const SmashElt a = W(g.simple_reflection(0));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).size(), 0u);
}

TEST_F(SmashTest, Rendering) {
  const SmashElt a = X(1) * W(g.simple_reflection(1)) + W(g.omega()[1].element);
  EXPECT_EQ(a.render(g), "X[1] · [u0; 1] + 1 · [u1;]");
}
