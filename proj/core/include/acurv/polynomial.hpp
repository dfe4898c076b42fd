#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acurv/linalg.hpp"

namespace acurv {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  // prod (x - root)^multiplicity.
  static Polynomial from_roots(const std::vector<std::pair<Rational, int>>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](int k) const {
    return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
  }

  Rational operator()(const Rational& x) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // "x^4 - 3*x^3 + 2*x", variable name configurable.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// det(x I - M) by the Faddeev-LeVerrier recurrence, exact over Q.
Polynomial char_poly(const Matrix& m);

struct RationalRoots {
  // Distinct rational roots in increasing order with multiplicities.
  std::vector<std::pair<Rational, int>> roots;
  // Monic remainder after removing every rational root; degree zero means
  // the spectrum is entirely rational.
  Polynomial residual;

  bool fully_rational() const { return residual.degree() <= 0; }
};

// Rational root search over p/q with p dividing the constant term and q the
// leading coefficient of the integer-scaled polynomial.
RationalRoots rational_roots(const Polynomial& p);

}  // namespace acurv
