#include "acurv/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "acurv/errors.hpp"

namespace acurv {

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<int> parse_int_list(std::string_view text, char sep, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(sep, pos);
    const auto field = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    std::size_t b = 0;
    std::size_t e = field.size();
    while (b < e && field[b] == ' ') ++b;
    while (e > b && field[e - 1] == ' ') --e;
    if (b == e) throw ParseError(std::string(what) + " '" + std::string(text) + "': empty field");
    int value = 0;
    for (std::size_t i = b; i < e; ++i) {
      if (field[i] < '0' || field[i] > '9') {
        throw ParseError(std::string(what) + " '" + std::string(text) + "': not an integer list");
      }
      value = value * 10 + (field[i] - '0');
      if (value > 1000000) throw ParseError(std::string(what) + ": entry too large");
    }
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  if (text == "0" || text.empty()) return Partition();
  try {
    return Partition(parse_int_list(text, ',', "partition"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("partition '") + std::string(text) + "': " + e.what());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int c = 0; c < (empty() ? 0 : parts_[0]); ++c) {
    int len = 0;
    while (len < length() && parts_[static_cast<std::size_t>(len)] > c) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other[i] > (*this)[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  return out.str();
}

std::vector<Partition> partitions_of(int r, int cap) {
  if (r < 0) throw DomainError("partitions_of: negative weight");
  if (r > cap) {
    throw CapExceeded("partition weight " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(r, r);
  return out;
}

Integer hook_length_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  }
  return factorial(lambda.weight()) / hooks;
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  const Partition frame(lengths);  // validates the frame
  const int r = frame.weight();
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  for (const auto& row : rows_) {
    for (int v : row) {
      if (v < 1 || v > r || seen[static_cast<std::size_t>(v - 1)]) {
        throw DomainError("tableau entries must be exactly 1.." + std::to_string(r));
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
}

YoungTableau YoungTableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(';', pos);
    rows.push_back(parse_int_list(text.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                                  : next - pos),
                                  ',', "tableau"));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  try {
    return YoungTableau(std::move(rows));
  } catch (const DomainError& e) {
    throw ParseError(std::string("tableau '") + std::string(text) + "': " + e.what());
  }
}

std::vector<std::vector<int>> YoungTableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_[0].size());
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  return cols;
}

Partition YoungTableau::shape() const {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lengths));
}

int YoungTableau::weight() const { return shape().weight(); }

bool YoungTableau::is_standard() const {
  for (const auto& row : rows_) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  for (const auto& col : columns()) {
    if (!std::is_sorted(col.begin(), col.end())) return false;
  }
  return true;
}

std::string YoungTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << (i ? ";" : "");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) out << (j ? "," : "") << rows_[i][j];
  }
  return out.str();
}

std::vector<YoungTableau> standard_tableaux(const Partition& lambda, int cap) {
  const int r = lambda.weight();
  if (r > cap) {
    throw CapExceeded("tableau weight " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  std::vector<YoungTableau> out;
  // Entry k goes into any row whose next cell is an addable corner.
  std::function<void(int)> place = [&](int k) {
    if (k > r) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < lambda.length(); ++i) {
      const auto len = static_cast<int>(rows[static_cast<std::size_t>(i)].size());
      if (len >= lambda[i]) continue;
      if (i > 0 && static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) <= len) continue;
      rows[static_cast<std::size_t>(i)].push_back(k);
      place(k + 1);
      rows[static_cast<std::size_t>(i)].pop_back();
    }
  };
  place(1);
  if (Integer(static_cast<unsigned long>(out.size())) != hook_length_count(lambda)) {
    throw InvariantViolation("standard tableau count disagrees with the hook length formula for " +
                             lambda.to_string());
  }
  return out;
}

std::vector<Permutation> block_stabilizer(int degree, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      out.emplace_back(images);
      return;
    }
    std::vector<int> targets = blocks[b];
    std::sort(targets.begin(), targets.end());
    do {
      for (std::size_t k = 0; k < targets.size(); ++k) {
        images[static_cast<std::size_t>(blocks[b][k] - 1)] = targets[k];
      }
      rec(b + 1);
    } while (std::next_permutation(targets.begin(), targets.end()));
    for (int v : blocks[b]) images[static_cast<std::size_t>(v - 1)] = v;
  };
  rec(0);
  return out;
}

GroupRingElement young_symmetrizer(const YoungTableau& t, int cap) {
  const int r = t.weight();
  if (r < 1) throw DomainError("young_symmetrizer: empty tableau");
  if (r > cap) {
    throw CapExceeded("tableau weight " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  }
  const auto horizontal = block_stabilizer(r, t.rows());
  const auto vertical = block_stabilizer(r, t.columns());
  GroupRingElement y(r);
  for (const auto& p : horizontal) {
    for (const auto& q : vertical) y.add(compose(p, q), q.sign());
  }
  return y;
}

YoungTableau derivative_tableau(int u) {
  if (u < 0) throw DomainError("derivative_tableau: u must be non-negative");
  std::vector<int> first{1, 3};
  for (int k = 5; k <= u + 4; ++k) first.push_back(k);
  return YoungTableau({first, {2, 4}});
}

GroupRingElement derivative_idempotent(int u, int cap) {
  if (u < 0) throw DomainError("derivative_idempotent: u must be non-negative");
  if (u + 4 > cap) {
    throw CapExceeded("derivative idempotent degree " + std::to_string(u + 4) + " exceeds cap " +
                      std::to_string(cap));
  }
  Rational scale(Integer(u + 1), 2 * factorial(u + 3));
  scale.canonicalize();
  return scale * young_symmetrizer(derivative_tableau(u), cap);
}

}  // namespace acurv
