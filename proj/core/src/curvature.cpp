#include "acurv/curvature.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "acurv/errors.hpp"

namespace acurv {

namespace {

std::string index_string(int i, int j, int k, int l) {
  std::ostringstream out;
  out << '[' << i << ',' << j << ',' << k << ',' << l << ']';
  return out.str();
}

// Accumulates c * Q(X) for a quadratic map Q, keyed by X up to sign.
class QuadraticCollector {
 public:
  explicit QuadraticCollector(std::size_t dim) : dim_(dim) {}

  void add(Matrix x, const Rational& coeff) {
    if (coeff == 0 || x.is_zero()) return;
    for (const auto& v : x.data()) {
      if (v == 0) continue;
      if (v < 0) x *= Rational(-1);
      break;
    }
    auto [it, inserted] = terms_.try_emplace(x.data(), coeff);
    if (!inserted) it->second += coeff;
  }

  std::vector<WeightedMatrix> terms() const {
    std::vector<WeightedMatrix> out;
    for (const auto& [data, coeff] : terms_) {
      if (coeff == 0) continue;
      Matrix m(dim_, dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = data[i * dim_ + j];
      }
      out.push_back({coeff > 0 ? 1 : -1, abs(coeff), std::move(m)});
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::map<std::vector<Rational>, Rational> terms_;
};

void require_curvature(const DenseTensor& t, const char* op) {
  const auto check = check_algebraic_curvature(t);
  if (!check.ok()) {
    throw DomainError(std::string(op) + ": input is not an algebraic curvature tensor (" +
                      check.first_violation + ")");
  }
}

void verify_reconstruction(const CurvatureDecomposition& d, const DenseTensor& t) {
  if (!(d.reconstruct() == t)) {
    throw InvariantViolation(to_string(d.kind) + " decomposition does not reconstruct its input");
  }
}

}  // namespace

DenseTensor gamma(const Matrix& s) {
  if (!s.is_symmetric()) throw DomainError("gamma: matrix is not symmetric");
  const int n = static_cast<int>(s.rows());
  DenseTensor out(4, n);
  const Rational third(1, 3);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
          const auto K = static_cast<std::size_t>(k), L = static_cast<std::size_t>(l);
          out.at(i, j, k, l) = third * (s(I, L) * s(J, K) - s(I, K) * s(J, L));
        }
      }
    }
  }
  return out;
}

DenseTensor alpha(const Matrix& a) {
  if (!a.is_skew()) throw DomainError("alpha: matrix is not skew-symmetric");
  const int n = static_cast<int>(a.rows());
  DenseTensor out(4, n);
  const Rational third(1, 3);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
          const auto K = static_cast<std::size_t>(k), L = static_cast<std::size_t>(l);
          out.at(i, j, k, l) = third * (2 * a(I, J) * a(K, L) + a(I, K) * a(J, L) - a(I, L) * a(J, K));
        }
      }
    }
  }
  return out;
}

CanonicalElements CanonicalElements::build() {
  CanonicalElements c;
  c.tableau = YoungTableau({{1, 3}, {2, 4}});
  c.y = young_symmetrizer(c.tableau);
  c.y_star = star(c.y);

  const auto id = GroupRingElement::identity(4);
  const auto exchange = GroupRingElement::single(Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  const auto t12 = GroupRingElement::single(Permutation::transposition(4, 1, 2));
  const auto t34 = GroupRingElement::single(Permutation::transposition(4, 3, 4));

  c.f = id + exchange;
  c.f_half = Rational(1, 2) * c.f;
  c.xi_plus = (id + t12) * (id + t34);
  c.xi_minus = (id - t12) * (id - t34);
  c.sigma_plus = c.y_star * c.f * c.xi_plus;
  c.sigma_minus = c.y_star * c.f * c.xi_minus;

  auto x0 = solve_right_factor(c.sigma_plus, c.y_star);
  if (!x0) throw InvariantViolation("sigma_1 does not generate the right ideal of y*");
  c.x0 = std::move(*x0);
  return c;
}

const CanonicalElements& canonical_elements() {
  static const CanonicalElements elements = CanonicalElements::build();
  return elements;
}

CurvatureCheck check_direct_criteria(const DenseTensor& t) {
  if (t.order() != 4) throw ShapeError("curvature check: tensor has order " + std::to_string(t.order()));
  CurvatureCheck check;
  check.pair_symmetries = true;
  const int n = t.dim();
  for (int i = 0; i < n && check.pair_symmetries; ++i) {
    for (int j = 0; j < n && check.pair_symmetries; ++j) {
      for (int k = 0; k < n && check.pair_symmetries; ++k) {
        for (int l = 0; l < n && check.pair_symmetries; ++l) {
          const Rational& v = t.at(i, j, k, l);
          if (v != -t.at(j, i, k, l)) {
            check.pair_symmetries = false;
            check.first_violation = "antisymmetry in the first index pair fails at T" + index_string(i, j, k, l);
          } else if (v != -t.at(i, j, l, k)) {
            check.pair_symmetries = false;
            check.first_violation = "antisymmetry in the second index pair fails at T" + index_string(i, j, k, l);
          } else if (v != t.at(k, l, i, j)) {
            check.pair_symmetries = false;
            check.first_violation = "pair exchange symmetry fails at T" + index_string(i, j, k, l);
          }
        }
      }
    }
  }
  const DenseTensor defect = bianchi_defect(t);
  check.bianchi_defect_nonzeros = defect.nonzero_count();
  check.bianchi = check.bianchi_defect_nonzeros == 0;
  if (!check.bianchi && check.first_violation.empty()) {
    for (std::size_t off = 0; off < defect.size(); ++off) {
      if (defect.data()[off] == 0) continue;
      const auto idx = defect.index_of(off);
      check.first_violation = "first Bianchi identity fails at T" + index_string(idx[0], idx[1], idx[2], idx[3]);
      break;
    }
  }
  return check;
}

bool satisfies_young_criterion(const DenseTensor& t) {
  if (t.order() != 4) throw ShapeError("curvature check: tensor has order " + std::to_string(t.order()));
  return apply_symmetry_operator(canonical_elements().y_star, t) == Rational(12) * t;
}

CurvatureCheck check_algebraic_curvature(const DenseTensor& t) {
  CurvatureCheck check = check_direct_criteria(t);
  check.young_criterion = satisfies_young_criterion(t);
  const bool direct = check.pair_symmetries && check.bianchi;
  if (direct != check.young_criterion) {
    throw InvariantViolation("curvature criteria disagree: direct test " + std::string(direct ? "passes" : "fails") +
                             ", y* T = 12 T " + (check.young_criterion ? "holds" : "fails"));
  }
  if (!check.young_criterion && check.first_violation.empty()) check.first_violation = "y* T != 12 T";
  return check;
}

DenseTensor bianchi_defect(const DenseTensor& t) {
  if (t.order() != 4) throw ShapeError("bianchi_defect: tensor has order " + std::to_string(t.order()));
  const int n = t.dim();
  DenseTensor out(4, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) out.at(i, j, k, l) = t.at(i, j, k, l) + t.at(i, k, l, j) + t.at(i, l, j, k);
      }
    }
  }
  return out;
}

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::mixed: return "mixed";
    case DecompositionKind::pure_gamma: return "pure-gamma";
    case DecompositionKind::pure_alpha: return "pure-alpha";
  }
  return "unknown";
}

DenseTensor CurvatureDecomposition::reconstruct() const {
  DenseTensor out(4, dim);
  for (const auto& term : gamma_terms) out += (term.sign * term.weight) * gamma(term.matrix);
  for (const auto& term : alpha_terms) out += (term.sign * term.weight) * alpha(term.matrix);
  return out;
}

CurvatureDecomposition decompose_mixed(const DenseTensor& t) {
  require_curvature(t, "decompose_mixed");
  const auto n = static_cast<std::size_t>(t.dim());
  CurvatureDecomposition d;
  d.kind = DecompositionKind::mixed;
  d.dim = t.dim();

  // T = f_half T = 1/2 sum (M+N)⊗(M+N) - M⊗M - N⊗N over the slices of T,
  // and y*(X⊗X) = 12 (gamma(S) + alpha(A)) for X = S + A since the cross
  // terms are annihilated. With T = y* T / 12 every X contributes
  // z/2 (gamma(S) + alpha(A)).
  QuadraticCollector gammas(n);
  QuadraticCollector alphas(n);
  auto add = [&](const Matrix& x, const Rational& z) {
    const auto [s, a] = sym_split(x);
    gammas.add(s, z / 2);
    alphas.add(a, z / 2);
  };
  for (const auto& [m, e] : slice_pairs(t)) {
    add(m + e, 1);
    add(m, -1);
    add(e, -1);
  }
  d.gamma_terms = gammas.terms();
  d.alpha_terms = alphas.terms();
  verify_reconstruction(d, t);
  return d;
}

CurvatureDecomposition decompose_pure(const DenseTensor& t, DecompositionKind kind) {
  if (kind == DecompositionKind::mixed) return decompose_mixed(t);
  require_curvature(t, "decompose_pure");
  const auto& c = canonical_elements();
  const auto n = static_cast<std::size_t>(t.dim());
  const bool want_gamma = kind == DecompositionKind::pure_gamma;

  // T = sigma T' with sigma = y* f xi. For alpha, sigma_-1 y* = 96 y* gives
  // T' = T/96. For gamma, sigma_1 y* = 0, so T' = x0 T / 12 with
  // sigma_1 x0 = y*.
  const DenseTensor preimage = want_gamma ? Rational(1, 12) * apply_symmetry_operator(c.x0, t)
                                          : Rational(1, 96) * t;

  // xi maps M⊗N to (M ± M^T)⊗(N ± N^T); f then symmetrizes the pair, and
  // y* sends each X⊗X to 12 gamma(X) or 12 alpha(X).
  QuadraticCollector collector(n);
  for (const auto& [m, e] : slice_pairs(preimage)) {
    const Matrix first = want_gamma ? m + m.transpose() : m - m.transpose();
    const Matrix second = want_gamma ? e + e.transpose() : e - e.transpose();
    collector.add(first + second, 12);
    collector.add(first, -12);
    collector.add(second, -12);
  }

  CurvatureDecomposition d;
  d.kind = kind;
  d.dim = t.dim();
  (want_gamma ? d.gamma_terms : d.alpha_terms) = collector.terms();
  verify_reconstruction(d, t);
  return d;
}

std::vector<EpsilonTerm> epsilon_form(const CurvatureDecomposition& d) {
  std::vector<EpsilonTerm> out;
  auto push = [&](const WeightedMatrix& term, bool is_gamma) {
    const double scale = std::sqrt(term.weight.get_d());
    EpsilonTerm e{is_gamma, term.sign, {}};
    for (std::size_t i = 0; i < term.matrix.rows(); ++i) {
      e.matrix.emplace_back();
      for (std::size_t j = 0; j < term.matrix.cols(); ++j) e.matrix.back().push_back(scale * term.matrix(i, j).get_d());
    }
    out.push_back(std::move(e));
  };
  for (const auto& term : d.gamma_terms) push(term, true);
  for (const auto& term : d.alpha_terms) push(term, false);
  return out;
}

std::vector<IdentityCheck> verify_identity_table(const CanonicalElements& c) {
  struct Row {
    const char* name;
    const GroupRingElement* lhs;
    const GroupRingElement* rhs;
    int scalar;
    const char* expected;
    const GroupRingElement* target;
  };
  const Row rows[] = {
      {"y* * y*", &c.y_star, &c.y_star, 12, "12 y*", &c.y_star},
      {"y* * sigma_1", &c.y_star, &c.sigma_plus, 12, "12 sigma_1", &c.sigma_plus},
      {"sigma_1 * y*", &c.sigma_plus, &c.y_star, 0, "0", &c.y_star},
      {"y* * sigma_-1", &c.y_star, &c.sigma_minus, 12, "12 sigma_-1", &c.sigma_minus},
      {"sigma_-1 * y*", &c.sigma_minus, &c.y_star, 96, "96 y*", &c.y_star},
      {"sigma_1 * sigma_1", &c.sigma_plus, &c.sigma_plus, 0, "0", &c.sigma_plus},
      {"sigma_-1 * sigma_-1", &c.sigma_minus, &c.sigma_minus, 96, "96 sigma_-1", &c.sigma_minus},
      {"sigma_-1 * sigma_1", &c.sigma_minus, &c.sigma_plus, 96, "96 sigma_1", &c.sigma_plus},
      {"sigma_1 * sigma_-1", &c.sigma_plus, &c.sigma_minus, 0, "0", &c.sigma_minus},
  };
  std::vector<IdentityCheck> out;
  for (const auto& row : rows) {
    const auto product = ring_product(*row.lhs, *row.rhs);
    // A zero operand would make "= 12 x" hold vacuously.
    const bool nonzero_operands = !row.lhs->is_zero() && !row.rhs->is_zero();
    const bool pass = nonzero_operands && product == Rational(row.scalar) * (*row.target);
    out.push_back({row.name, row.expected, pass});
  }
  return out;
}

}  // namespace acurv
