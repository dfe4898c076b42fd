#include <gtest/gtest.h>

#include "acurv/curvature.hpp"
#include "acurv/errors.hpp"
#include "acurv/symgroup.hpp"
#include "generators.hpp"

using namespace acurv;

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  const auto a = Permutation::parse_cycles(3, "(1 2)");
  const auto b = Permutation::parse_cycles(3, "(1 3)");
  const Permutation c = compose(a, b);
  // 1 -> 3, 3 -> 2, 2 -> 1
  EXPECT_EQ(c(1), 3);
  EXPECT_EQ(c(3), 2);
  EXPECT_EQ(c(2), 1);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(c(i), a(b(i)));
}

TEST(Permutation, IdentityAndInverse) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testgen::random_permutation(rng, 5);
    EXPECT_EQ(compose(Permutation::identity(5), p), p);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_EQ(p.inverse().sign(), p.sign());
  }
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation(std::vector<int>{1, 1, 2}), DomainError);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), DomainError);
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), ShapeError);
  EXPECT_THROW(Permutation::parse_cycles(3, "(1 2"), ParseError);
  EXPECT_THROW(Permutation::parse_cycles(3, "(1 4)"), DomainError);
}

TEST(Permutation, CycleNotationRoundTrip) {
  const auto p = Permutation::parse_cycles(4, "(1 3)(2 4)");
  EXPECT_EQ(std::vector<int>(p.images().begin(), p.images().end()), (std::vector<int>{3, 4, 1, 2}));
  EXPECT_EQ(Permutation::parse_cycles(4, p.cycle_string()), p);
  EXPECT_EQ(Permutation::parse_cycles(4, "id"), Permutation::identity(4));
  EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ(Permutation::transposition(4, 1, 2).sign(), -1);
}

TEST(EnumerateGroup, CountsAndOrder) {
  EXPECT_EQ(enumerate_group(1).size(), 1u);
  EXPECT_EQ(enumerate_group(4).size(), 24u);
  const auto s3 = enumerate_group(3);
  EXPECT_TRUE(s3.front().is_identity());
  EXPECT_TRUE(std::is_sorted(s3.begin(), s3.end()));
  EXPECT_THROW(enumerate_group(9), CapExceeded);
  try {
    enumerate_group(9);
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find('8'), std::string::npos);
  }
}

TEST(GroupRing, NoZeroCoefficientsStored) {
  GroupRingElement a(3);
  const auto p = Permutation::transposition(3, 1, 2);
  a.add(p, 2);
  a.add(p, -2);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.size(), 0u);
}

TEST(GroupRing, ProductMatchesOracle) {
  Rng rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = static_cast<int>(rng.uniform(2, 5));
    const auto a = testgen::random_element(rng, r, 4);
    const auto b = testgen::random_element(rng, r, 4);
    EXPECT_EQ(testgen::to_oracle(ring_product(a, b)),
              oracle::product(testgen::to_oracle(a), testgen::to_oracle(b)));
  }
}

TEST(GroupRing, Associativity) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = static_cast<int>(rng.uniform(2, 5));
    const auto a = testgen::random_element(rng, r, 3);
    const auto b = testgen::random_element(rng, r, 3);
    const auto c = testgen::random_element(rng, r, 3);
    EXPECT_EQ(ring_product(ring_product(a, b), c), ring_product(a, ring_product(b, c)));
  }
}

TEST(GroupRing, StarIsAnInvolutiveAntiHomomorphism) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testgen::random_element(rng, 4, 5);
    const auto b = testgen::random_element(rng, 4, 5);
    EXPECT_EQ(star(star(a)), a);
    EXPECT_EQ(star(ring_product(a, b)), ring_product(star(b), star(a)));
  }
  const auto t = Permutation::transposition(3, 1, 2);
  const auto e = GroupRingElement::identity(3) + GroupRingElement::single(t);
  EXPECT_EQ(star(e), e);
  const auto cyc = Permutation::parse_cycles(3, "(1 2 3)");
  EXPECT_EQ(star(GroupRingElement::single(cyc, make_rational(5, 2))),
            GroupRingElement::single(cyc.inverse(), make_rational(5, 2)));
}

TEST(GroupRing, IdentityIsUnit) {
  Rng rng(5);
  const auto a = testgen::random_element(rng, 4, 6);
  EXPECT_EQ(ring_product(GroupRingElement::identity(4), a), a);
  EXPECT_EQ(ring_product(a, GroupRingElement::identity(4)), a);
  EXPECT_THROW(ring_product(a, GroupRingElement::identity(3)), ShapeError);
}

TEST(GroupRing, RatioTo) {
  Rng rng(6);
  const auto a = testgen::random_element(rng, 4, 6);
  EXPECT_EQ(*(Rational(7) * a).ratio_to(a), 7);
  EXPECT_FALSE((a + GroupRingElement::identity(4) * Rational(1000)).ratio_to(a).has_value());
}

TEST(SolveRightFactor, IdentityAndZero) {
  Rng rng(7);
  const auto c = testgen::random_element(rng, 4, 5);
  const auto x = solve_right_factor(GroupRingElement::identity(4), c);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, c);
  const auto& el = canonical_elements();
  EXPECT_FALSE(solve_right_factor(GroupRingElement(4), el.y_star).has_value());
}

TEST(SolveRightFactor, SigmaPlusReachesYStar) {
  const auto& el = canonical_elements();
  const auto x = solve_right_factor(el.sigma_plus, el.y_star);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(ring_product(el.sigma_plus, *x), el.y_star);
  EXPECT_EQ(ring_product(el.sigma_plus, el.x0), el.y_star);
}

TEST(SolveRightFactor, UnsolvableIsEmpty) {
  // y* is not invertible, so y* x = id has no solution.
  const auto& el = canonical_elements();
  EXPECT_FALSE(solve_right_factor(el.y_star, GroupRingElement::identity(4)).has_value());
}

TEST(IdentityTable, AllNineEntries) {
  const auto& el = canonical_elements();
  using R = Rational;
  EXPECT_EQ(el.y_star * el.y_star, R(12) * el.y_star);
  EXPECT_EQ(el.y_star * el.sigma_plus, R(12) * el.sigma_plus);
  EXPECT_TRUE((el.sigma_plus * el.y_star).is_zero());
  EXPECT_EQ(el.y_star * el.sigma_minus, R(12) * el.sigma_minus);
  EXPECT_EQ(el.sigma_minus * el.y_star, R(96) * el.y_star);
  EXPECT_TRUE((el.sigma_plus * el.sigma_plus).is_zero());
  EXPECT_EQ(el.sigma_minus * el.sigma_minus, R(96) * el.sigma_minus);
  EXPECT_EQ(el.sigma_minus * el.sigma_plus, R(96) * el.sigma_plus);
  EXPECT_TRUE((el.sigma_plus * el.sigma_minus).is_zero());
  EXPECT_FALSE(el.sigma_plus.is_zero());
  EXPECT_FALSE(el.sigma_minus.is_zero());
  for (const auto& check : verify_identity_table()) EXPECT_TRUE(check.pass) << check.name;
  EXPECT_EQ(verify_identity_table().size(), 9u);
}

TEST(IdentityTable, DetectsCorruption) {
  CanonicalElements el = canonical_elements();
  el.sigma_minus.add(Permutation::identity(4), 1);
  bool any_fail = false;
  for (const auto& check : verify_identity_table(el)) any_fail = any_fail || !check.pass;
  EXPECT_TRUE(any_fail);
}
