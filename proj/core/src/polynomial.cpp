#include "acurv/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "acurv/errors.hpp"

namespace acurv {

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divides p by (x - root); the caller guarantees root is a root.
Polynomial deflate(const Polynomial& p, const Rational& root) {
  std::vector<Rational> q(static_cast<std::size_t>(p.degree()));
  Rational carry = 0;
  for (int k = p.degree(); k >= 1; --k) {
    carry = carry * root + p[k];
    q[static_cast<std::size_t>(k - 1)] = carry;
  }
  return Polynomial(std::move(q));
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  Polynomial p({Rational(1)});
  for (const auto& [root, mult] : roots) {
    for (int k = 0; k < mult; ++k) p = p * Polynomial({-root, Rational(1)});
  }
  return p;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) out << acurv::to_string(mag) << (k > 0 ? "*" : "");
    if (k > 0) out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  // c[k] is the coefficient of x^k; M_k = A M_{k-1} + c_{n-k+1} I and
  // c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

RationalRoots rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
  RationalRoots result;
  Polynomial rest = p;

  int zero_mult = 0;
  while (rest.degree() > 0 && rest[0] == 0) {
    rest = deflate(rest, 0);
    ++zero_mult;
  }
  std::map<Rational, int> found;
  if (zero_mult > 0) found[Rational(0)] = zero_mult;

  while (rest.degree() > 0) {
    // Scale to integer coefficients.
    Integer lcm = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    const Integer lead = Integer(rest[rest.degree()] * lcm);
    const Integer constant = Integer(rest[0] * lcm);

    std::set<Rational> candidates;
    for (const auto& num : positive_divisors(constant)) {
      for (const auto& den : positive_divisors(lead)) {
        Rational r(num, den);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    }
    bool progressed = false;
    for (const auto& r : candidates) {
      if (rest(r) != 0) continue;
      while (rest.degree() > 0 && rest(r) == 0) {
        rest = deflate(rest, r);
        ++found[r];
      }
      progressed = true;
      break;
    }
    if (!progressed) break;
  }

  result.roots.assign(found.begin(), found.end());
  const Rational lead = rest[rest.degree()];
  std::vector<Rational> monic = rest.coeffs();
  for (auto& c : monic) c /= lead;
  result.residual = Polynomial(std::move(monic));
  return result;
}

}  // namespace acurv
