#include "acurv/tensor.hpp"

#include "acurv/errors.hpp"

namespace acurv {

namespace {

std::size_t checked_size(int order, int dim) {
  if (order < 0 || dim < 0) throw ShapeError("tensor order and dimension must be non-negative");
  std::size_t size = 1;
  for (int k = 0; k < order; ++k) {
    size *= static_cast<std::size_t>(dim);
    if (size > (std::size_t{1} << 26)) throw CapExceeded("tensor has more than 2^26 entries");
  }
  return size;
}

}  // namespace

DenseTensor::DenseTensor(int order, int dim)
    : order_(order), dim_(dim), data_(checked_size(order, dim)) {}

DenseTensor DenseTensor::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("from_matrix: matrix is not square");
  DenseTensor t(2, static_cast<int>(m.rows()));
  t.data_ = m.data();
  return t;
}

std::size_t DenseTensor::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_) {
    throw ShapeError("tensor index of length " + std::to_string(idx.size()) + " for order " +
                     std::to_string(order_));
  }
  std::size_t off = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw ShapeError("tensor index " + std::to_string(i) + " out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return off;
}

std::vector<int> DenseTensor::index_of(std::size_t off) const {
  std::vector<int> idx(static_cast<std::size_t>(order_));
  for (int k = order_ - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(off % static_cast<std::size_t>(dim_));
    off /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

bool DenseTensor::is_zero() const { return nonzero_count() == 0; }

std::size_t DenseTensor::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& v : data_) count += (v != 0);
  return count;
}

Matrix DenseTensor::as_matrix() const {
  if (order_ != 2) throw ShapeError("as_matrix: tensor has order " + std::to_string(order_));
  const auto n = static_cast<std::size_t>(dim_);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = data_[i * n + j];
  }
  return m;
}

void DenseTensor::require_same_shape(const DenseTensor& other, const char* op) const {
  if (order_ != other.order_ || dim_ != other.dim_) {
    throw ShapeError(std::string(op) + ": tensor shapes differ");
  }
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& other) {
  require_same_shape(other, "tensor sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& other) {
  require_same_shape(other, "tensor difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

DenseTensor& DenseTensor::operator*=(const Rational& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

VectorTuple::VectorTuple(std::vector<Vector> vectors) : vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.size() != vectors_[0].size()) throw ShapeError("VectorTuple: vectors of different lengths");
  }
}

Rational evaluate(const DenseTensor& t, std::span<const Vector> vectors) {
  if (static_cast<int>(vectors.size()) != t.order()) {
    throw ShapeError("evaluate: " + std::to_string(vectors.size()) + " vectors for order " +
                     std::to_string(t.order()));
  }
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != t.dim()) throw ShapeError("evaluate: vector dimension mismatch");
  }
  Rational sum = 0;
  Rational term;
  std::vector<int> idx(static_cast<std::size_t>(t.order()), 0);
  for (std::size_t off = 0; off < t.size(); ++off) {
    if (t.data()[off] != 0) {
      term = t.data()[off];
      for (std::size_t k = 0; k < idx.size() && term != 0; ++k) {
        term *= vectors[k][static_cast<std::size_t>(idx[k])];
      }
      sum += term;
    }
    for (int k = t.order() - 1; k >= 0; --k) {
      if (++idx[static_cast<std::size_t>(k)] < t.dim()) break;
      idx[static_cast<std::size_t>(k)] = 0;
    }
  }
  return sum;
}

DenseTensor apply_symmetry_operator(const GroupRingElement& a, const DenseTensor& t) {
  if (a.degree() != t.order()) {
    throw ShapeError("symmetry operator of degree " + std::to_string(a.degree()) +
                     " applied to tensor of order " + std::to_string(t.order()));
  }
  const int r = t.order();
  const auto n = static_cast<std::size_t>(t.dim());
  std::vector<std::size_t> stride(static_cast<std::size_t>(r));
  for (int k = r - 1; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] =
        (k == r - 1) ? 1 : stride[static_cast<std::size_t>(k + 1)] * n;
  }
  DenseTensor out(r, t.dim());
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  for (std::size_t off = 0; off < t.size(); ++off) {
    Rational& target = out.data()[off];
    for (const auto& [p, coeff] : a.terms()) {
      // Source index tuple has i_{p(k)} in slot k.
      std::size_t src = 0;
      for (int k = 0; k < r; ++k) {
        src += idx[static_cast<std::size_t>(p(k + 1) - 1)] * stride[static_cast<std::size_t>(k)];
      }
      if (t.data()[src] != 0) target += coeff * t.data()[src];
    }
    for (int k = r - 1; k >= 0; --k) {
      if (++idx[static_cast<std::size_t>(k)] < n) break;
      idx[static_cast<std::size_t>(k)] = 0;
    }
  }
  return out;
}

DenseTensor tensor_product(const Matrix& m, const Matrix& n) {
  if (!m.is_square() || !n.is_square() || m.rows() != n.rows()) {
    throw ShapeError("tensor_product: factors must be square matrices of equal dimension");
  }
  const auto dim = static_cast<int>(m.rows());
  DenseTensor out(4, dim);
  std::size_t off = 0;
  for (const auto& x : m.data()) {
    for (const auto& y : n.data()) {
      if (x != 0 && y != 0) out.data()[off] = x * y;
      ++off;
    }
  }
  return out;
}

GroupRingElement to_group_ring(const DenseTensor& t, const VectorTuple& b) {
  if (static_cast<int>(b.size()) != t.order()) {
    throw ShapeError("to_group_ring: tuple of " + std::to_string(b.size()) + " vectors for order " +
                     std::to_string(t.order()));
  }
  if (b.dim() != t.dim()) throw ShapeError("to_group_ring: vector dimension mismatch");
  GroupRingElement out(t.order());
  std::vector<Vector> permuted(b.size());
  for (const auto& p : enumerate_group(t.order())) {
    for (std::size_t k = 0; k < b.size(); ++k) permuted[k] = b[static_cast<std::size_t>(p(static_cast<int>(k) + 1) - 1)];
    out.add(p, evaluate(t, permuted));
  }
  return out;
}

std::vector<std::pair<Matrix, Matrix>> slice_pairs(const DenseTensor& t) {
  if (t.order() != 4) throw ShapeError("slice_pairs: tensor has order " + std::to_string(t.order()));
  const auto n = static_cast<std::size_t>(t.dim());
  std::vector<std::pair<Matrix, Matrix>> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      Matrix slice(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          slice(i, j) = t.at(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), static_cast<int>(l));
        }
      }
      if (!slice.is_zero()) out.emplace_back(std::move(slice), Matrix::unit(n, k, l));
    }
  }
  return out;
}

SymSplit sym_split(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("sym_split: matrix is not square");
  const Matrix mt = m.transpose();
  const Rational half(1, 2);
  return {half * (m + mt), half * (m - mt)};
}

}  // namespace acurv
