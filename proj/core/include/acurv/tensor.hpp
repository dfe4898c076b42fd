#pragma once

#include <span>
#include <utility>
#include <vector>

#include "acurv/linalg.hpp"
#include "acurv/symgroup.hpp"

namespace acurv {

// Covariant tensor of order r over an n-dimensional space; n^r exact
// rationals stored row-major by index tuple (last index fastest). Indices are
// 0-based.
class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(int order, int dim);

  static DenseTensor from_matrix(const Matrix& m);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  Rational& operator[](std::span<const int> idx) { return data_[offset(idx)]; }
  const Rational& operator[](std::span<const int> idx) const { return data_[offset(idx)]; }
  // Order-4 shorthand.
  Rational& at(int i, int j, int k, int l) { return data_[offset4(i, j, k, l)]; }
  const Rational& at(int i, int j, int k, int l) const { return data_[offset4(i, j, k, l)]; }

  std::vector<Rational>& data() { return data_; }
  const std::vector<Rational>& data() const { return data_; }

  // Decodes a flat offset into its index tuple.
  std::vector<int> index_of(std::size_t offset) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  // Throws ShapeError unless order() == 2.
  Matrix as_matrix() const;

  DenseTensor& operator+=(const DenseTensor& other);
  DenseTensor& operator-=(const DenseTensor& other);
  DenseTensor& operator*=(const Rational& scalar);

  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(const Rational& c, DenseTensor a) { return a *= c; }
  friend DenseTensor operator*(DenseTensor a, const Rational& c) { return a *= c; }
  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(std::span<const int> idx) const;
  std::size_t offset4(int i, int j, int k, int l) const {
    const auto n = static_cast<std::size_t>(dim_);
    return ((static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
            static_cast<std::size_t>(k)) * n + static_cast<std::size_t>(l);
  }
  void require_same_shape(const DenseTensor& other, const char* op) const;

  int order_ = 0;
  int dim_ = 0;
  std::vector<Rational> data_;
};

// b = (v_1, ..., v_r), all of a common dimension.
class VectorTuple {
 public:
  // Throws ShapeError if the vectors have different lengths.
  explicit VectorTuple(std::vector<Vector> vectors);

  std::size_t size() const { return vectors_.size(); }
  int dim() const { return vectors_.empty() ? 0 : static_cast<int>(vectors_[0].size()); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }

 private:
  std::vector<Vector> vectors_;
};

// T(v_1, ..., v_r) = T_{i_1...i_r} v_1^{i_1} ... v_r^{i_r}.
Rational evaluate(const DenseTensor& t, std::span<const Vector> vectors);

// (aT)_{i_1...i_r} = sum_p a(p) T_{i_{p(1)}...i_{p(r)}}. With the product
// convention of ring_product, (a*b)T = a(bT).
DenseTensor apply_symmetry_operator(const GroupRingElement& a, const DenseTensor& t);

// (M ⊗ N)_{ijkl} = M_ij N_kl.
DenseTensor tensor_product(const Matrix& m, const Matrix& n);

// T_b = sum_p T(v_{p(1)}, ..., v_{p(r)}) p. Satisfies (aT)_b = T_b * a*.
GroupRingElement to_group_ring(const DenseTensor& t, const VectorTuple& b);

// Pairs (M^{(kl)}, E^{(kl)}) with M^{(kl)}_ij = T_ijkl and E^{(kl)} the (k,l)
// matrix unit, skipping zero slices; the sum of M ⊗ N over the result is T.
std::vector<std::pair<Matrix, Matrix>> slice_pairs(const DenseTensor& t);

struct SymSplit {
  Matrix symmetric;
  Matrix skew;
};

// M = S + A with S = (M + M^T)/2 and A = (M - M^T)/2.
SymSplit sym_split(const Matrix& m);

}  // namespace acurv
