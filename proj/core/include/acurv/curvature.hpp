#pragma once

#include <string>
#include <vector>

#include "acurv/tensor.hpp"
#include "acurv/young.hpp"

namespace acurv {

// gamma(S)_ijkl = 1/3 (S_il S_jk - S_ik S_jl). Throws DomainError unless S is
// symmetric.
DenseTensor gamma(const Matrix& s);

// alpha(A)_ijkl = 1/3 (2 A_ij A_kl + A_ik A_jl - A_il A_jk). Throws
// DomainError unless A is skew.
DenseTensor alpha(const Matrix& a);

// Group ring elements of Q[S_4] shared by the membership test and the
// decompositions. Built once per process.
struct CanonicalElements {
  YoungTableau tableau;        // rows (1,3), (2,4)
  GroupRingElement y;          // Young symmetrizer of `tableau`
  GroupRingElement y_star;
  GroupRingElement f_half;     // (id + (1 3)(2 4)) / 2, idempotent
  GroupRingElement f;          // id + (1 3)(2 4)
  GroupRingElement xi_plus;    // (id + (1 2))(id + (3 4))
  GroupRingElement xi_minus;   // (id - (1 2))(id - (3 4))
  GroupRingElement sigma_plus;   // y* f xi_plus
  GroupRingElement sigma_minus;  // y* f xi_minus
  GroupRingElement x0;         // sigma_plus * x0 = y*

  static CanonicalElements build();
};

const CanonicalElements& canonical_elements();

// Outcome of both membership criteria for an order-4 tensor.
struct CurvatureCheck {
  bool pair_symmetries = false;  // T_ijkl = -T_jikl = -T_ijlk = T_klij
  bool bianchi = false;          // T_ijkl + T_iklj + T_iljk = 0
  bool young_criterion = false;  // y* T = 12 T
  std::string first_violation;   // empty when everything holds
  std::size_t bianchi_defect_nonzeros = 0;

  bool ok() const { return pair_symmetries && bianchi && young_criterion; }
};

// Index symmetries and first Bianchi identity only; fills the diagnostic
// fields of the result but not young_criterion.
CurvatureCheck check_direct_criteria(const DenseTensor& t);

bool satisfies_young_criterion(const DenseTensor& t);

// Evaluates both criteria. Throws ShapeError unless T has order 4, and
// InvariantViolation if the criteria disagree.
CurvatureCheck check_algebraic_curvature(const DenseTensor& t);

inline bool is_algebraic_curvature(const DenseTensor& t) { return check_algebraic_curvature(t).ok(); }

// B_ijkl = T_ijkl + T_iklj + T_iljk.
DenseTensor bianchi_defect(const DenseTensor& t);

enum class DecompositionKind { mixed, pure_gamma, pure_alpha };

std::string to_string(DecompositionKind kind);

struct WeightedMatrix {
  int sign = 1;          // +1 or -1
  Rational weight;       // strictly positive
  Matrix matrix;         // symmetric for gamma terms, skew for alpha terms
};

// T = sum sign * weight * gamma(S) + sum sign * weight * alpha(A).
//
// The weight carries the rescaling that would otherwise need square roots:
// gamma(c S) = c^2 gamma(S), so a term with weight w is gamma(sqrt(w) S).
struct CurvatureDecomposition {
  DecompositionKind kind = DecompositionKind::mixed;
  int dim = 0;
  std::vector<WeightedMatrix> gamma_terms;
  std::vector<WeightedMatrix> alpha_terms;

  DenseTensor reconstruct() const;
  std::size_t term_count() const { return gamma_terms.size() + alpha_terms.size(); }
};

// Every algebraic curvature tensor as a signed sum of gammas and alphas.
// Throws DomainError if T is not an algebraic curvature tensor.
CurvatureDecomposition decompose_mixed(const DenseTensor& t);

// Gamma-only (kind = pure_gamma) or alpha-only (kind = pure_alpha) form.
CurvatureDecomposition decompose_pure(const DenseTensor& t, DecompositionKind kind);

// Term with the weight folded into the matrix, sqrt(w) * X, in floating
// point. For display only; not exact.
struct EpsilonTerm {
  bool is_gamma = true;
  int sign = 1;
  std::vector<std::vector<double>> matrix;
};
std::vector<EpsilonTerm> epsilon_form(const CurvatureDecomposition& d);

struct IdentityCheck {
  std::string name;      // e.g. "sigma-1 * y*"
  std::string expected;  // e.g. "96 y*"
  bool pass = false;
};

// The nine products among y*, sigma_1 and sigma_-1 with their expected
// multiples.
std::vector<IdentityCheck> verify_identity_table(const CanonicalElements& elements);
inline std::vector<IdentityCheck> verify_identity_table() {
  return verify_identity_table(canonical_elements());
}

}  // namespace acurv
