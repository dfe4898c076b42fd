// One PASS/FAIL line per acceptance criterion. Sample counts, seeds and time
// budgets are fixed here; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acurv/curvature.hpp"
#include "acurv/errors.hpp"
#include "acurv/osserman.hpp"
#include "acurv/polynomial.hpp"
#include "acurv/schur.hpp"
#include "acurv/symgroup.hpp"
#include "acurv/tensor.hpp"
#include "acurv/young.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace acurv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

constexpr double kIdentityBudgetSeconds = 1.0;
constexpr double kIdempotentBudgetSeconds = 30.0;

Outcome identity_table() {
  Outcome o;
  const auto checks = verify_identity_table();
  o.require(checks.size() == 9, "expected nine products");
  for (const auto& c : checks) o.require(c.pass, c.name + " != " + c.expected);
  if (o.ok) o.detail = "9/9 products";
  return o;
}

Outcome idempotents() {
  Outcome o;
  for (int u = 0; u <= 2; ++u) {
    const auto e = derivative_idempotent(u);
    o.require(ring_product(e, e) == e, "e_t e_t != e_t for u = " + std::to_string(u));
  }
  if (o.ok) o.detail = "u = 0, 1, 2";
  return o;
}

Outcome projectors() {
  Outcome o;
  Rng rng(301);
  const auto& y_star = canonical_elements().y_star;
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(2 + trial % 3);
    const Matrix s = random_symmetric(rng, n);
    const Matrix a = random_skew(rng, n);
    const std::string at = " (trial " + std::to_string(trial) + ")";
    o.require(apply_symmetry_operator(y_star, tensor_product(s, s)) == Rational(12) * gamma(s), "SS" + at);
    o.require(apply_symmetry_operator(y_star, tensor_product(a, a)) == Rational(12) * alpha(a), "AA" + at);
    o.require(apply_symmetry_operator(y_star, tensor_product(s, a)).is_zero(), "SA" + at);
    o.require(apply_symmetry_operator(y_star, tensor_product(a, s)).is_zero(), "AS" + at);
  }
  if (o.ok) o.detail = "20 random (S, A), n = 2..4";
  return o;
}

Outcome round_trips() {
  Outcome o;
  Rng rng(401);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const DenseTensor t = testgen::random_curvature(rng, n);
    const std::string at = " (trial " + std::to_string(trial) + ")";
    o.require(decompose_mixed(t).reconstruct() == t, "mixed" + at);
    o.require(decompose_pure(t, DecompositionKind::pure_gamma).reconstruct() == t, "pure-gamma" + at);
    o.require(decompose_pure(t, DecompositionKind::pure_alpha).reconstruct() == t, "pure-alpha" + at);

    const auto un = static_cast<std::size_t>(n);
    const DenseTensor ta = alpha(random_skew(rng, un));
    const DenseTensor tg = gamma(random_symmetric(rng, un));
    o.require(decompose_pure(ta, DecompositionKind::pure_gamma).reconstruct() == ta, "pure-gamma of alpha" + at);
    o.require(decompose_pure(tg, DecompositionKind::pure_alpha).reconstruct() == tg, "pure-alpha of gamma" + at);
  }
  if (o.ok) o.detail = "20 tensors, 3 algorithms, cross kinds";
  return o;
}

Outcome criteria_agreement() {
  Outcome o;
  Rng rng(501);
  int disagreements = 0, generic_rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const bool curvature = trial < 50;
    const DenseTensor t = curvature ? testgen::random_curvature(rng, n) : testgen::random_tensor(rng, 4, n);
    const CurvatureCheck direct = check_direct_criteria(t);
    const bool a = direct.pair_symmetries && direct.bianchi;
    const bool b = satisfies_young_criterion(t);
    disagreements += a != b;
    if (curvature) o.require(a && b, "curvature tensor rejected (trial " + std::to_string(trial) + ")");
    else generic_rejected += !b;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.ok) {
    o.detail = "0 disagreements on 100 tensors (" + std::to_string(generic_rejected) + "/50 generic rejected)";
  }
  return o;
}

std::vector<Partition> partitions_up_to(int w) {
  std::vector<Partition> out{Partition()};
  for (int r = 1; r <= w; ++r)
    for (auto& p : partitions_of(r)) out.push_back(p);
  return out;
}

Outcome schur_table() {
  Outcome o;
  o.require(lr_product(Partition({2}), Partition({1, 1})) == SchurSum{Partition({3, 1}), Partition({2, 1, 1})},
            "[2][1,1]");
  o.require(plethysm_sym2(2) == SchurSum{Partition({4}), Partition({2, 2})}, "[2] plethysm [2]");
  o.require(plethysm_transpose(plethysm_sym2(2)) == SchurSum{Partition({2, 2}), Partition({1, 1, 1, 1})},
            "transposed plethysm");
  const auto parts = partitions_up_to(4);
  int pairs = 0;
  for (const auto& l : parts) {
    for (const auto& m : parts) {
      const int k = l.weight() + m.weight();
      SchurSum expected;
      const auto prod = oracle::multiply(oracle::schur_polynomial(l.parts(), k), oracle::schur_polynomial(m.parts(), k));
      for (const auto& [shape, c] : oracle::schur_expansion(prod, k)) expected.add(Partition(shape), c);
      o.require(lr_product(l, m) == expected, "oracle mismatch for " + l.to_string() + " * " + m.to_string());
      ++pairs;
    }
  }
  if (o.ok) o.detail = "table plus " + std::to_string(pairs) + " oracle pairs";
  return o;
}

Outcome annihilation() {
  Outcome o;
  Rng rng(701);
  const auto& y = canonical_elements().y;
  int ss_nonzero = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix s = random_symmetric(rng, 3);
    const Matrix a = random_skew(rng, 3);
    const VectorTuple b(testgen::random_vectors(rng, 4, 3));
    const std::string at = " (trial " + std::to_string(trial) + ")";
    o.require(ring_product(to_group_ring(tensor_product(s, a), b), y).is_zero(), "(S x A)_b y != 0" + at);
    o.require(ring_product(to_group_ring(tensor_product(a, s), b), y).is_zero(), "(A x S)_b y != 0" + at);
    ss_nonzero += !ring_product(to_group_ring(tensor_product(s, s), b), y).is_zero();
  }
  o.require(ss_nonzero > 0, "(S x S)_b y vanished on every instance");
  if (o.ok) o.detail = "20 instances, SS nonzero on " + std::to_string(ss_nonzero);
  return o;
}

Outcome clifford_spectrum() {
  Outcome o;
  const Metric g = Metric::euclidean(4);
  const DenseTensor t = clifford_family(2, {1}, {quaternionic_triple()[0]}, g);
  const SpectrumReport r = osserman_spectrum_sample(t, g, 10, 1, 801);
  o.require(r.samples.size() == 10, "expected 10 samples");
  std::set<Vector> distinct;
  for (const auto& s : r.samples) {
    distinct.insert(s.x);
    o.require(g.inner(s.x, s.x) == 1, "sample off the unit sphere");
    o.require(s.rational, "irrational eigenvalue");
    o.require(s.roots == r.samples.front().roots, "multiplicities differ across samples");
  }
  o.require(distinct.size() == r.samples.size(), "sample points not distinct");
  o.require(r.roots == std::vector<Rational>{-1, 0, 2}, "spectrum is not {-1, 0, 2}");
  if (o.ok) {
    std::ostringstream mult;
    for (const auto& [root, m] : r.samples.front().roots) mult << " " << root.get_str() << "^" << m;
    o.detail = "{-1, 0, 2} at 10 unit vectors, multiplicities" + mult.str();
  }
  return o;
}

Outcome nilpotent_examples() {
  Outcome o;
  struct Case {
    bool sym;
    int p, q;
  };
  const std::vector<Case> cases{{true, 1, 1}, {true, 2, 1}, {false, 2, 2}, {false, 3, 2}};
  std::string failures;
  for (const auto& c : cases) {
    const std::string name = std::string(c.sym ? "gamma" : "alpha") + " on (" + std::to_string(c.p) + "," +
                             std::to_string(c.q) + ")";
    const Metric g = Metric::signature(c.p, c.q);
    const Matrix m = c.sym ? nilpotent_sym_example(c.p, c.q) : nilpotent_skew_example(c.p, c.q);
    const DenseTensor t = c.sym ? gamma(m) : alpha(m);
    const auto xs = probe_vectors(g, 20, 901);
    bool square_zero = xs.size() >= 20, pure_power = true;
    const Polynomial expected = Polynomial::from_roots({{Rational(0), g.dim()}});
    for (const auto& x : xs) {
      const LinearMap j = jacobi_operator(t, g, x);
      square_zero = square_zero && (j * j).is_zero();
      pure_power = pure_power && char_poly(j) == expected;
    }
    o.require(square_zero, name + ": J^2 != 0");
    o.require(pure_power, name + ": characteristic polynomial is not a pure power");
    if (t.is_zero()) {
      // Self-adjoint S F with (S F)^2 = 0 has totally isotropic image, so in
      // signature (p,1) or (1,q) S has rank one and gamma(S) = 0.
      o.require(false, name + ": T = 0 (rank " + std::to_string(rank(m)) + " S; any nilpotent S here has rank <= 1)");
      failures += (failures.empty() ? "" : ", ") + name;
    }
  }
  if (o.ok) o.detail = "4 examples, 20 samples each";
  else if (!failures.empty()) o.detail += "; T = 0 for " + failures;
  return o;
}

Outcome lorentz() {
  Outcome o;
  Rng rng(1001);
  for (int q = 1; q <= 3; ++q) {
    const std::string sig = " in (1," + std::to_string(q) + ")";
    const Metric g = Metric::signature(1, q);
    const DenseTensor t = gamma(nilpotent_sym_example(1, q));
    const auto xs = probe_vectors(g, 20, 1002);
    o.require(xs.size() >= 20, "too few samples" + sig);
    for (const auto& x : xs) o.require(jacobi_operator(t, g, x).is_zero(), "J_gamma(S)(x) != 0" + sig);
    const auto n = static_cast<std::size_t>(1 + q);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix a = random_skew(rng, n);
      const Matrix af = a * g.matrix();
      o.require(!a.is_zero() && !(af * af).is_zero(), "(A F)^2 = 0" + sig);
    }
    auto throws = [](int p, int qq) {
      try {
        nilpotent_skew_example(p, qq);
      } catch (const SignatureError&) {
        return true;
      }
      return false;
    };
    o.require(throws(1, q), "skew example accepted (1," + std::to_string(q) + ")");
    o.require(throws(q, 1), "skew example accepted (" + std::to_string(q) + ",1)");
  }
  if (o.ok) o.detail = "q = 1..3: 20 samples, 50 skew A, errors raised";
  return o;
}

GroupRingElement order_two(int sign) {
  const auto swap = GroupRingElement::single(Permutation::transposition(2, 1, 2));
  const auto id = GroupRingElement::identity(2);
  return Rational(1, 2) * (sign > 0 ? id + swap : id - swap);
}

Outcome tb_calculus() {
  Outcome o;
  Rng rng(1101);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const DenseTensor t = testgen::random_tensor(rng, 4, n);
    const auto a = testgen::random_element(rng, 4, 5);
    const VectorTuple b(testgen::random_vectors(rng, 4, n));
    o.require(to_group_ring(apply_symmetry_operator(a, t), b) == ring_product(to_group_ring(t, b), star(a)),
              "(aT)_b != T_b a* (trial " + std::to_string(trial) + ")");
  }
  const auto e1s = star(order_two(1)), e2s = star(order_two(-1));
  for (int trial = 0; trial < 20; ++trial) {
    const VectorTuple b(testgen::random_vectors(rng, 2, 3));
    const auto sb = to_group_ring(DenseTensor::from_matrix(random_symmetric(rng, 3)), b);
    const auto ab = to_group_ring(DenseTensor::from_matrix(random_skew(rng, 3)), b);
    o.require(ring_product(sb, e1s) == sb, "S_b e1* != S_b");
    o.require(ring_product(ab, e2s) == ab, "A_b e2* != A_b");
  }
  if (o.ok) o.detail = "30 order-4 cases, 20 order-2 cases";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
  double budget_seconds;  // <= 0: no per-criterion budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "group-ring identity table", identity_table, kIdentityBudgetSeconds},
      {2, "idempotents e_t", idempotents, kIdempotentBudgetSeconds},
      {3, "projector identities", projectors, 0},
      {4, "decomposition round trips", round_trips, 0},
      {5, "membership criteria agree", criteria_agreement, 0},
      {6, "Schur products and plethysm", schur_table, 0},
      {7, "annihilation by y_t", annihilation, 0},
      {8, "Clifford family spectrum", clifford_spectrum, 0},
      {9, "nilpotent Osserman examples", nilpotent_examples, 0},
      {10, "Lorentzian rigidity", lorentz, 0},
      {11, "T_b calculus", tb_calculus, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(c.budget_seconds) + " s budget)";
    }
    failed += !o.ok;
    std::printf("%s  %2d  %-30s %.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.number, c.title, seconds,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
