#include "acurv/symgroup.hpp"

#include <algorithm>
#include <numeric>

#include "acurv/errors.hpp"
#include "acurv/linalg.hpp"

namespace acurv {

std::vector<Permutation> enumerate_group(int r, int cap) {
  if (r < 1) throw DomainError("enumerate_group: degree must be positive");
  if (r > cap) {
    throw CapExceeded("group degree " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> img(static_cast<std::size_t>(r));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

GroupRingElement GroupRingElement::identity(int degree) {
  return single(Permutation::identity(degree));
}

GroupRingElement GroupRingElement::single(const Permutation& p, const Rational& coeff) {
  GroupRingElement e(p.degree());
  e.add(p, coeff);
  return e;
}

Rational GroupRingElement::coeff(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add(const Permutation& p, const Rational& value) {
  if (p.degree() != degree_) {
    throw ShapeError("group ring element of degree " + std::to_string(degree_) +
                     " cannot hold a permutation of degree " + std::to_string(p.degree()));
  }
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElement::require_same_degree(const GroupRingElement& other, const char* op) const {
  if (other.degree_ != degree_) {
    throw ShapeError(std::string(op) + ": degree mismatch " + std::to_string(degree_) + " vs " +
                     std::to_string(other.degree_));
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_degree(other, "group ring sum");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_degree(other, "group ring difference");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

std::optional<Rational> GroupRingElement::ratio_to(const GroupRingElement& other) const {
  if (degree_ != other.degree_) return std::nullopt;
  if (is_zero()) return Rational(0);
  if (other.is_zero() || terms_.size() != other.terms_.size()) return std::nullopt;
  const auto& [p0, c0] = *other.terms_.begin();
  const Rational ratio = coeff(p0) / c0;
  if (ratio == 0) return std::nullopt;
  for (const auto& [p, c] : other.terms_) {
    if (coeff(p) != ratio * c) return std::nullopt;
  }
  return ratio;
}

GroupRingElement ring_product(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.degree() != b.degree()) {
    throw ShapeError("ring_product: degree mismatch " + std::to_string(a.degree()) + " vs " +
                     std::to_string(b.degree()));
  }
  GroupRingElement out(a.degree());
  for (const auto& [p, x] : a.terms()) {
    for (const auto& [q, y] : b.terms()) out.add(compose(p, q), x * y);
  }
  return out;
}

GroupRingElement star(const GroupRingElement& a) {
  GroupRingElement out(a.degree());
  for (const auto& [p, c] : a.terms()) out.add(p.inverse(), c);
  return out;
}

std::optional<GroupRingElement> solve_right_factor(const GroupRingElement& a,
                                                   const GroupRingElement& c, int cap) {
  if (a.degree() != c.degree()) {
    throw ShapeError("solve_right_factor: degree mismatch " + std::to_string(a.degree()) + " vs " +
                     std::to_string(c.degree()));
  }
  const auto group = enumerate_group(a.degree(), cap);
  const std::size_t n = group.size();
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(group[i], i);

  // Column u holds a*u, so entry (s, u) is a(s ∘ u^{-1}).
  Matrix lhs(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& [p, coeff] : a.terms()) {
      lhs(index.at(compose(p, group[u])), u) += coeff;
    }
  }
  std::vector<Rational> rhs(n);
  for (const auto& [p, coeff] : c.terms()) rhs[index.at(p)] = coeff;

  const auto solution = solve_linear_system(lhs, rhs);
  if (!solution) return std::nullopt;
  GroupRingElement x(a.degree());
  for (std::size_t u = 0; u < n; ++u) x.add(group[u], (*solution)[u]);
  return x;
}

}  // namespace acurv
