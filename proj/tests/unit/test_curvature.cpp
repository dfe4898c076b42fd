#include <gtest/gtest.h>

#include "acurv/curvature.hpp"
#include "acurv/errors.hpp"
#include "generators.hpp"

using namespace acurv;

namespace {

// Independent check of the index symmetries and Bianchi identity.
bool oracle_is_curvature(const DenseTensor& t) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Rational& v = t.at(i, j, k, l);
          if (v != -t.at(j, i, k, l) || v != -t.at(i, j, l, k) || v != t.at(k, l, i, j)) return false;
          if (v + t.at(i, k, l, j) + t.at(i, l, j, k) != 0) return false;
        }
  return true;
}

}  // namespace

TEST(Gamma, Examples) {
  const auto g = gamma(Matrix::identity(2));
  // 1-based (1,2,2,1) -> 0-based (0,1,1,0)
  EXPECT_EQ(g.at(0, 1, 1, 0), Rational(1, 3));
  EXPECT_EQ(g.at(0, 1, 0, 1), Rational(-1, 3));
  EXPECT_EQ(g.at(0, 0, 0, 0), 0);
  EXPECT_TRUE(gamma(Matrix::zero(3)).is_zero());
  EXPECT_THROW(gamma(Matrix{{0, 1}, {0, 0}}), DomainError);
}

TEST(Alpha, Examples) {
  const Matrix a{{0, 1}, {-1, 0}};
  EXPECT_EQ(alpha(a).at(0, 1, 0, 1), 1);
  EXPECT_TRUE(alpha(Matrix::zero(3)).is_zero());
  EXPECT_THROW(alpha(Matrix::identity(2)), DomainError);
}

TEST(QuadraticLaws, ScalingAndMembership) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    const Matrix s = random_symmetric(rng, n);
    const Matrix a = random_skew(rng, n);
    const Rational c = rng.nonzero_rational();
    EXPECT_EQ(gamma(c * s), c * c * gamma(s));
    EXPECT_EQ(alpha(c * a), c * c * alpha(a));
    EXPECT_TRUE(is_algebraic_curvature(gamma(s)));
    EXPECT_TRUE(is_algebraic_curvature(alpha(a)));
    EXPECT_TRUE(is_algebraic_curvature(gamma(s) + alpha(a)));
    EXPECT_TRUE(bianchi_defect(gamma(s)).is_zero());
    EXPECT_TRUE(bianchi_defect(alpha(a)).is_zero());
  }
}

TEST(Projectors, YStarOnDecomposableTensors) {
  Rng rng(22);
  const auto& y_star = canonical_elements().y_star;
  for (int trial = 0; trial < 8; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    const Matrix s = random_symmetric(rng, n);
    const Matrix a = random_skew(rng, n);
    EXPECT_EQ(apply_symmetry_operator(y_star, tensor_product(s, s)), Rational(12) * gamma(s));
    EXPECT_EQ(apply_symmetry_operator(y_star, tensor_product(a, a)), Rational(12) * alpha(a));
    EXPECT_TRUE(apply_symmetry_operator(y_star, tensor_product(s, a)).is_zero());
    EXPECT_TRUE(apply_symmetry_operator(y_star, tensor_product(a, s)).is_zero());
  }
}

TEST(Projectors, XiPlusAnnihilatesCurvature) {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = testgen::random_curvature(rng, 3);
    EXPECT_TRUE(apply_symmetry_operator(canonical_elements().xi_plus, t).is_zero());
  }
}

TEST(Membership, CriteriaAgreeWithOracle) {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 3));
    const DenseTensor t = trial % 2 ? testgen::random_curvature(rng, n) : testgen::random_tensor(rng, 4, n);
    const auto check = check_algebraic_curvature(t);
    EXPECT_EQ(check.ok(), oracle_is_curvature(t));
    EXPECT_EQ(check.young_criterion, check.pair_symmetries && check.bianchi);
    EXPECT_EQ(check.young_criterion, satisfies_young_criterion(t));
  }
}

TEST(Membership, Diagnostics) {
  Rng rng(25);
  const Matrix s = random_symmetric(rng, 3);
  const auto check = check_algebraic_curvature(tensor_product(s, s));
  EXPECT_FALSE(check.ok());
  EXPECT_FALSE(check.first_violation.empty());
  EXPECT_TRUE(is_algebraic_curvature(DenseTensor(4, 3)));
  EXPECT_THROW(check_algebraic_curvature(DenseTensor(3, 2)), ShapeError);
  const auto generic = testgen::random_tensor(rng, 4, 3);
  EXPECT_FALSE(bianchi_defect(generic).is_zero());
  EXPECT_GT(check_algebraic_curvature(generic).bianchi_defect_nonzeros, 0u);
}

TEST(Membership, PairSymmetricButNotBianchi) {
  // Satisfies every index symmetry but not the cyclic identity.
  DenseTensor t(4, 4);
  auto set = [&](int i, int j, int k, int l, int v) {
    t.at(i, j, k, l) = v;
    t.at(j, i, k, l) = -v;
    t.at(i, j, l, k) = -v;
    t.at(j, i, l, k) = v;
    t.at(k, l, i, j) = v;
    t.at(l, k, i, j) = -v;
    t.at(k, l, j, i) = -v;
    t.at(l, k, j, i) = v;
  };
  set(0, 1, 2, 3, 1);
  const auto check = check_algebraic_curvature(t);
  EXPECT_TRUE(check.pair_symmetries);
  EXPECT_FALSE(check.bianchi);
  EXPECT_FALSE(check.young_criterion);
}

TEST(Decompose, RoundTripsAllKinds) {
  Rng rng(26);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const auto t = testgen::random_curvature(rng, n);
    const auto mixed = decompose_mixed(t);
    EXPECT_EQ(mixed.reconstruct(), t);
    EXPECT_EQ(mixed.kind, DecompositionKind::mixed);
    const auto pg = decompose_pure(t, DecompositionKind::pure_gamma);
    EXPECT_EQ(pg.reconstruct(), t);
    EXPECT_TRUE(pg.alpha_terms.empty());
    const auto pa = decompose_pure(t, DecompositionKind::pure_alpha);
    EXPECT_EQ(pa.reconstruct(), t);
    EXPECT_TRUE(pa.gamma_terms.empty());
    for (const auto* d : {&mixed, &pg, &pa}) {
      for (const auto& w : d->gamma_terms) {
        EXPECT_TRUE(w.matrix.is_symmetric());
        EXPECT_GT(w.weight, 0);
        EXPECT_TRUE(w.sign == 1 || w.sign == -1);
      }
      for (const auto& w : d->alpha_terms) {
        EXPECT_TRUE(w.matrix.is_skew());
        EXPECT_GT(w.weight, 0);
      }
    }
  }
}

TEST(Decompose, CrossKinds) {
  Rng rng(27);
  const Matrix a0 = random_skew(rng, 3);
  const Matrix s0 = random_symmetric(rng, 3);
  EXPECT_EQ(decompose_pure(alpha(a0), DecompositionKind::pure_gamma).reconstruct(), alpha(a0));
  EXPECT_EQ(decompose_pure(gamma(s0), DecompositionKind::pure_alpha).reconstruct(), gamma(s0));
}

TEST(Decompose, ZeroAndErrors) {
  EXPECT_EQ(decompose_mixed(DenseTensor(4, 3)).term_count(), 0u);
  EXPECT_EQ(decompose_pure(DenseTensor(4, 3), DecompositionKind::pure_gamma).term_count(), 0u);
  Rng rng(28);
  EXPECT_THROW(decompose_mixed(testgen::random_tensor(rng, 4, 2)), DomainError);
  EXPECT_THROW(decompose_pure(testgen::random_tensor(rng, 4, 2), DecompositionKind::pure_alpha),
               DomainError);
}

TEST(Decompose, CliffordShape) {
  // 3 gamma(g) + 3 alpha(A_1) on R^4
  const Matrix a1{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  const DenseTensor t = Rational(3) * gamma(Matrix::identity(4)) + Rational(3) * alpha(a1);
  EXPECT_EQ(decompose_mixed(t).reconstruct(), t);
}

TEST(Decompose, EpsilonFormIsConsistent) {
  Rng rng(29);
  const auto t = testgen::random_curvature(rng, 2);
  const auto d = decompose_mixed(t);
  const auto eps = epsilon_form(d);
  ASSERT_EQ(eps.size(), d.term_count());
  // gamma(sqrt(w) X) = w gamma(X), so sum sign * gamma(folded) approximates T.
  for (std::size_t k = 0; k < d.gamma_terms.size(); ++k) {
    const double w = d.gamma_terms[k].weight.get_d();
    const double x = d.gamma_terms[k].matrix(0, 0).get_d();
    EXPECT_NEAR(eps[k].matrix[0][0] * eps[k].matrix[0][0], w * x * x, 1e-9);
  }
}

TEST(CanonicalElements, Structure) {
  const auto& el = canonical_elements();
  EXPECT_EQ(el.tableau.rows(), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(el.y_star, star(el.y));
  EXPECT_EQ(ring_product(el.f_half, el.f_half), el.f_half);
  EXPECT_EQ(el.f, Rational(2) * el.f_half);
  EXPECT_EQ(el.sigma_plus, el.y_star * el.f * el.xi_plus);
  EXPECT_EQ(el.sigma_minus, el.y_star * el.f * el.xi_minus);
  EXPECT_EQ(el.y.size(), 16u);
  EXPECT_EQ(el.sigma_plus.size(), 16u);
  EXPECT_EQ(el.sigma_minus.size(), 24u);
}
