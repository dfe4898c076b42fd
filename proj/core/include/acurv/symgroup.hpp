#pragma once

#include <map>
#include <optional>
#include <vector>

#include "acurv/permutation.hpp"
#include "acurv/rational.hpp"

namespace acurv {

// Largest group degree accepted by enumerations and products unless the
// caller passes a larger cap. 8! = 40320.
inline constexpr int kDefaultGroupCap = 8;

// Largest degree for which solve_right_factor builds the dense r! x r!
// left-multiplication matrix.
inline constexpr int kSolveCap = 6;

// All r! permutations of {1..r} in lexicographic order of their one-line
// images. Throws CapExceeded when r > cap.
std::vector<Permutation> enumerate_group(int r, int cap = kDefaultGroupCap);

// Element of the rational group ring Q[S_r]; a finitely supported map from
// permutations to nonzero rationals.
class GroupRingElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  GroupRingElement() = default;
  explicit GroupRingElement(int degree) : degree_(degree) {}

  static GroupRingElement identity(int degree);
  static GroupRingElement single(const Permutation& p, const Rational& coeff = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Permutation& p) const;
  // Adds `value` to the coefficient of p, erasing it if the sum is zero.
  void add(const Permutation& p, const Rational& value);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Rational& scalar);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const Rational& c, GroupRingElement a) { return a *= c; }
  friend GroupRingElement operator*(GroupRingElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // If *this == c * other for some rational c, returns c.
  std::optional<Rational> ratio_to(const GroupRingElement& other) const;

 private:
  void require_same_degree(const GroupRingElement& other, const char* op) const;

  int degree_ = 0;
  Terms terms_;
};

// Convolution: (a*b)(s) = sum over p∘q = s of a(p) b(q).
GroupRingElement ring_product(const GroupRingElement& a, const GroupRingElement& b);

inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  return ring_product(a, b);
}

// a* = sum a(p) p^{-1}.
GroupRingElement star(const GroupRingElement& a);

// Finds x with a*x = c by exact row reduction of the r! x r! matrix of left
// multiplication by a. Free variables are set to zero, so the answer is one
// member of an affine solution space. Returns nullopt if no x exists.
std::optional<GroupRingElement> solve_right_factor(const GroupRingElement& a,
                                                   const GroupRingElement& c,
                                                   int cap = kSolveCap);

}  // namespace acurv
