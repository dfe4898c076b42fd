#include "acurv/permutation.hpp"

#include <sstream>

#include "acurv/errors.hpp"

namespace acurv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int r = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("permutation images are not a bijection of {1.." + std::to_string(r) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i < 1 || j < 1 || i > degree || j > degree) {
    throw DomainError("transposition entries outside 1.." + std::to_string(degree));
  }
  auto img = identity(degree).images_;
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    auto img = identity(degree).images_;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % cycle.size()];
      if (a < 1 || a > degree || used[static_cast<std::size_t>(a - 1)]) {
        throw DomainError("cycle entry " + std::to_string(a) + " invalid or repeated");
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      img[static_cast<std::size_t>(a - 1)] = b;
    }
    result = compose(result, Permutation(std::move(img)));
  }
  return result;
}

Permutation Permutation::parse_cycles(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "id") return identity(degree);
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("cycle notation: expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos >= text.size()) throw ParseError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int value = 0;
      bool any = false;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        any = true;
        ++pos;
      }
      if (!any) throw ParseError("cycle notation: unexpected character at offset " + std::to_string(pos));
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      visited[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i] || images_[i] == static_cast<int>(i) + 1) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      visited[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "id" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw ShapeError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  }
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) img[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(img));
}

}  // namespace acurv
