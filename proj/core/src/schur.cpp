#include "acurv/schur.hpp"

#include <functional>
#include <sstream>

#include "acurv/errors.hpp"

namespace acurv {

SchurSum::SchurSum(std::initializer_list<Partition> parts) {
  for (const auto& p : parts) add(p);
}

void SchurSum::add(const Partition& lambda, long multiplicity) {
  if (multiplicity < 0) throw DomainError("SchurSum: negative multiplicity");
  if (multiplicity == 0) return;
  terms_[lambda] += multiplicity;
}

long SchurSum::multiplicity(const Partition& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

std::string SchurSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    if (it->second == 1) {
      out << it->first.to_string();
    } else {
      out << it->second << "*(" << it->first.to_string() << ")";
    }
  }
  return out.str();
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda)) return 0;
  if (mu.empty()) return 1;

  // Cells of nu/lambda in reverse reading order: rows top to bottom, each
  // row right to left. Row-weak, column-strict and lattice conditions can
  // all be checked against cells already filled.
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < nu.length(); ++i) {
    for (int j = nu[i] - 1; j >= lambda[i]; --j) cells.push_back({i, j});
  }
  std::vector<std::vector<int>> filling(static_cast<std::size_t>(nu.length()));
  for (int i = 0; i < nu.length(); ++i) filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu[i]), 0);
  std::vector<int> used(static_cast<std::size_t>(mu.length()) + 1, 0);

  long count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    auto& row = filling[static_cast<std::size_t>(i)];
    int hi = mu.length();
    if (j + 1 < nu[i]) hi = std::min(hi, row[static_cast<std::size_t>(j + 1)]);
    int lo = 1;
    if (i > 0 && j >= lambda[i - 1] && j < nu[i - 1]) {
      lo = filling[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
    }
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)] >= mu[v - 1]) continue;
      if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)]) continue;
      row[static_cast<std::size_t>(j)] = v;
      ++used[static_cast<std::size_t>(v)];
      fill(k + 1);
      --used[static_cast<std::size_t>(v)];
    }
    row[static_cast<std::size_t>(j)] = 0;
  };
  fill(0);
  return count;
}

SchurSum lr_product(const Partition& lambda, const Partition& mu, int cap) {
  if (lambda.weight() > cap || mu.weight() > cap) {
    throw CapExceeded("lr_product: partition weight exceeds cap " + std::to_string(cap));
  }
  const int total = lambda.weight() + mu.weight();
  SchurSum out;
  for (const auto& nu : partitions_of(total, total)) {
    out.add(nu, lr_coefficient(lambda, mu, nu));
  }
  return out;
}

SchurSum plethysm_sym2(int n, int cap) {
  if (n < 1) throw DomainError("plethysm_sym2: n must be positive");
  if (n > cap) throw CapExceeded("plethysm_sym2: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  SchurSum out;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<int> doubled = lambda.parts();
    for (auto& part : doubled) part *= 2;
    out.add(Partition(std::move(doubled)));
  }
  return out;
}

SchurSum plethysm_transpose(const SchurSum& s) {
  SchurSum out;
  for (const auto& [lambda, m] : s.terms()) out.add(lambda.conjugate(), m);
  return out;
}

IdealKind parse_ideal_kind(std::string_view text) {
  if (text == "SS") return IdealKind::SS;
  if (text == "SA") return IdealKind::SA;
  if (text == "AS") return IdealKind::AS;
  if (text == "AA") return IdealKind::AA;
  throw ParseError("ideal kind '" + std::string(text) + "': expected SS, SA, AS or AA");
}

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::SS: return "SS";
    case IdealKind::SA: return "SA";
    case IdealKind::AS: return "AS";
    case IdealKind::AA: return "AA";
  }
  return "?";
}

SchurSum ideal_structure(IdealKind kind) {
  switch (kind) {
    case IdealKind::SS: return plethysm_sym2(2);
    case IdealKind::SA:
    case IdealKind::AS: return lr_product(Partition{2}, Partition{1, 1});
    case IdealKind::AA: return plethysm_transpose(plethysm_sym2(2));
  }
  throw DomainError("ideal_structure: unknown kind");
}

}  // namespace acurv
