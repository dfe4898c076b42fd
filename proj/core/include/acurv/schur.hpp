#pragma once

#include <map>
#include <string>
#include <string_view>

#include "acurv/young.hpp"

namespace acurv {

inline constexpr int kLrWeightCap = 8;
inline constexpr int kPlethysmCap = 6;

// Formal combination sum m_lambda [lambda] with positive integer
// multiplicities.
class SchurSum {
 public:
  using Terms = std::map<Partition, long>;

  SchurSum() = default;
  SchurSum(std::initializer_list<Partition> parts);

  void add(const Partition& lambda, long multiplicity = 1);

  const Terms& terms() const { return terms_; }
  long multiplicity(const Partition& lambda) const;
  bool contains(const Partition& lambda) const { return multiplicity(lambda) > 0; }
  bool empty() const { return terms_.empty(); }

  // Largest partition first: "3,1 + 2,1,1"; multiplicities above one are
  // written "2*(3,1)".
  std::string to_string() const;

  friend bool operator==(const SchurSum&, const SchurSum&) = default;

 private:
  Terms terms_;
};

// Littlewood-Richardson coefficient c^nu_{lambda mu}: the number of skew
// tableaux of shape nu/lambda and content mu whose reverse reading word is a
// lattice word.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// [lambda][mu] = sum_nu c^nu_{lambda mu} [nu]. Throws CapExceeded if either
// weight exceeds `cap`.
SchurSum lr_product(const Partition& lambda, const Partition& mu, int cap = kLrWeightCap);

// [2] ⊙ [n] = sum over lambda |- n of [2 lambda].
SchurSum plethysm_sym2(int n, int cap = kPlethysmCap);

// Replaces every [lambda] by [lambda'].
SchurSum plethysm_transpose(const SchurSum& s);

// Left ideals spanned by (X ⊗ Y)_b for symmetric S and skew A.
enum class IdealKind { SS, SA, AS, AA };

IdealKind parse_ideal_kind(std::string_view text);
std::string to_string(IdealKind kind);

// [2]⊙[2] for SS, [2][1^2] for SA and AS, [1^2]⊙[2] for AA.
SchurSum ideal_structure(IdealKind kind);

}  // namespace acurv
