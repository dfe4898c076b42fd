#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acurv {

// A bijection of {1..r} in one-line notation: images()[i-1] is the image of i.
//
// Products follow (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;

  // Throws DomainError unless `images` is a bijection of {1..r}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // The transposition (i j) in S_degree, 1-based.
  static Permutation transposition(int degree, int i, int j);
  // Builds a permutation from disjoint or overlapping cycles, composed
  // right-to-left like any other product.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // Parses "(1 2)(3 4)" or "id"; also accepts comma separators inside cycles.
  static Permutation parse_cycles(int degree, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  // Cycle notation, fixed points omitted; "id" for the identity.
  std::string cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (p ∘ q)(i) = p(q(i)). Throws ShapeError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

}  // namespace acurv
