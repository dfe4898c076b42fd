#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "acurv/symgroup.hpp"

namespace acurv {

inline constexpr int kPartitionCap = 12;

// Weakly decreasing sequence of positive integers. The empty partition is
// the partition of zero.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3,1,1"; "0" is accepted for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Row length, zero past the last row.
  int operator[](int row) const {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  Partition conjugate() const;
  // Whether the frame of `other` fits inside this frame.
  bool contains(const Partition& other) const;

  // Comma-joined parts, "0" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Every partition of r, largest first in lexicographic order:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int r, int cap = kPartitionCap);

// Number of standard tableaux of shape lambda, r! / prod(hook lengths).
Integer hook_length_count(const Partition& lambda);

// A Young frame filled with 1..r, each exactly once.
class YoungTableau {
 public:
  YoungTableau() = default;
  // Throws DomainError if the rows do not form a frame filled with 1..r.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  // "1,3;2,4": rows separated by ';', entries by ','.
  static YoungTableau parse(std::string_view text);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const;
  Partition shape() const;
  int weight() const;
  bool is_standard() const;

  std::string to_string() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// All standard tableaux of shape lambda. Throws CapExceeded if the weight is
// above `cap`.
std::vector<YoungTableau> standard_tableaux(const Partition& lambda, int cap = kDefaultGroupCap);

// Permutations that only move entries within each of the given blocks.
std::vector<Permutation> block_stabilizer(int degree, const std::vector<std::vector<int>>& blocks);

// y_t = sum_{p in H_t} sum_{q in V_t} sign(q) p∘q.
GroupRingElement young_symmetrizer(const YoungTableau& t, int cap = kDefaultGroupCap);

// The standard tableau with rows (1, 3, 5, 6, ..., u+4) and (2, 4).
YoungTableau derivative_tableau(int u);

// e_t = (u+1) / (2 (u+3)!) * y_t for derivative_tableau(u); an idempotent of
// Q[S_{u+4}].
GroupRingElement derivative_idempotent(int u, int cap = kDefaultGroupCap);

}  // namespace acurv
