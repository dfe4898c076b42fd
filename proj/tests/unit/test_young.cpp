#include <gtest/gtest.h>

#include "acurv/errors.hpp"
#include "acurv/young.hpp"
#include "oracles.hpp"

using namespace acurv;

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
  EXPECT_EQ(Partition::parse("3,1,1"), Partition({3, 1, 1}));
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_THROW(Partition::parse("3,,1"), ParseError);
  EXPECT_EQ(Partition({3, 1}).to_string(), "3,1");
  EXPECT_EQ(Partition().to_string(), "0");
}

TEST(Partition, EnumerationMatchesCompositionOracle) {
  for (int r = 1; r <= 10; ++r) {
    std::vector<std::vector<int>> got;
    for (const auto& p : partitions_of(r)) got.push_back(p.parts());
    EXPECT_EQ(got, oracle::partitions_by_compositions(r)) << "r = " << r;
  }
  const auto p4 = partitions_of(4);
  ASSERT_EQ(p4.size(), 5u);
  EXPECT_EQ(p4[0], Partition({4}));
  EXPECT_EQ(p4[1], Partition({3, 1}));
  EXPECT_EQ(p4[2], Partition({2, 2}));
  EXPECT_EQ(p4[3], Partition({2, 1, 1}));
  EXPECT_EQ(p4[4], Partition({1, 1, 1, 1}));
  EXPECT_EQ(partitions_of(1), std::vector<Partition>{Partition({1})});
  EXPECT_THROW(partitions_of(13), CapExceeded);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(Partition({2, 2}).conjugate(), Partition({2, 2}));
  EXPECT_EQ(Partition({4}).conjugate(), Partition({1, 1, 1, 1}));
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  for (int r = 1; r <= 8; ++r) {
    for (const auto& p : partitions_of(r)) EXPECT_EQ(p.conjugate().conjugate(), p);
  }
}

TEST(StandardTableaux, CountsMatchHookLengthAndBruteForce) {
  for (int r = 1; r <= 7; ++r) {
    for (const auto& lambda : partitions_of(r)) {
      const auto tabs = standard_tableaux(lambda);
      EXPECT_EQ(static_cast<long>(tabs.size()), oracle::count_standard_fillings(lambda.parts()))
          << lambda.to_string();
      EXPECT_EQ(Integer(static_cast<long>(tabs.size())), hook_length_count(lambda));
      for (const auto& t : tabs) {
        EXPECT_TRUE(t.is_standard());
        EXPECT_EQ(t.shape(), lambda);
      }
    }
  }
}

TEST(StandardTableaux, RiemannShape) {
  const auto tabs = standard_tableaux(Partition({2, 2}));
  ASSERT_EQ(tabs.size(), 2u);
  const YoungTableau riem({{1, 3}, {2, 4}});
  EXPECT_NE(std::find(tabs.begin(), tabs.end(), riem), tabs.end());
  EXPECT_EQ(standard_tableaux(Partition({5})).size(), 1u);
  EXPECT_EQ(standard_tableaux(Partition({2, 1})).size(), 2u);
}

TEST(YoungTableau, ParseAndValidate) {
  const auto t = YoungTableau::parse("1,3;2,4");
  EXPECT_EQ(t.rows(), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(t.to_string(), "1,3;2,4");
  EXPECT_THROW(YoungTableau({{1, 1}, {2, 3}}), DomainError);
  EXPECT_THROW(YoungTableau({{1}, {2, 3}}), DomainError);
  EXPECT_FALSE(YoungTableau({{2, 1}}).is_standard());
}

TEST(YoungSymmetrizer, RiemannTableauHasSixteenUnitTerms) {
  const auto y = young_symmetrizer(YoungTableau({{1, 3}, {2, 4}}));
  EXPECT_EQ(y.size(), 16u);
  for (const auto& [p, c] : y.terms()) EXPECT_TRUE(c == 1 || c == -1);
  EXPECT_EQ(star(y).size(), y.size());
}

TEST(YoungSymmetrizer, RowAndColumn) {
  const auto t12 = Permutation::transposition(2, 1, 2);
  EXPECT_EQ(young_symmetrizer(YoungTableau({{1, 2}})),
            GroupRingElement::identity(2) + GroupRingElement::single(t12));
  EXPECT_EQ(young_symmetrizer(YoungTableau({{1}, {2}})),
            GroupRingElement::identity(2) - GroupRingElement::single(t12));
}

TEST(YoungSymmetrizer, EssentialIdempotency) {
  // y_t y_t = kappa y_t with kappa * f^lambda = r!
  for (int r = 1; r <= 5; ++r) {
    Integer fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    for (const auto& lambda : partitions_of(r)) {
      const Integer f = hook_length_count(lambda);
      for (const auto& t : standard_tableaux(lambda)) {
        const auto y = young_symmetrizer(t);
        const auto kappa = ring_product(y, y).ratio_to(y);
        ASSERT_TRUE(kappa.has_value()) << t.to_string();
        EXPECT_NE(*kappa, 0);
        EXPECT_EQ(*kappa * Rational(f), Rational(fact)) << t.to_string();
      }
    }
  }
}

TEST(DerivativeIdempotent, TableauShapes) {
  EXPECT_EQ(derivative_tableau(0).rows(), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(derivative_tableau(1).rows(), (std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}}));
  EXPECT_EQ(derivative_tableau(2).rows(), (std::vector<std::vector<int>>{{1, 3, 5, 6}, {2, 4}}));
  EXPECT_TRUE(derivative_tableau(3).is_standard());
}

TEST(DerivativeIdempotent, IdempotentForSmallU) {
  const Rational scale[] = {make_rational(1, 12), make_rational(1, 24), make_rational(1, 80)};
  for (int u = 0; u <= 2; ++u) {
    const auto e = derivative_idempotent(u);
    EXPECT_EQ(e.degree(), u + 4);
    EXPECT_EQ(ring_product(e, e), e) << "u = " << u;
    EXPECT_EQ(e, scale[u] * young_symmetrizer(derivative_tableau(u)));
  }
  EXPECT_THROW(derivative_idempotent(5), CapExceeded);
}
