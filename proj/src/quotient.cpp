#include "zigzag/quotient.hpp"

#include <numeric>
#include <stdexcept>

namespace zigzag {

UnionFind::UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

std::size_t UnionFind::add() {
  parent_.push_back(parent_.size());
  return parent_.size() - 1;
}

std::size_t UnionFind::find(std::size_t x) {
  if (x >= parent_.size()) throw std::out_of_range("UnionFind::find");
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  std::size_t rx = find(x);
  std::size_t ry = find(y);
  if (rx == ry) return false;
  // keep the order-minimal root
  if (ry < rx) std::swap(rx, ry);
  parent_[ry] = rx;
  return true;
}

QuotientSet QuotientSet::seal(UnionFind& uf) {
  QuotientSet q;
  const std::size_t n = uf.size();
  q.class_of_.resize(n);
  std::vector<std::size_t> root_class(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = uf.find(x);
    if (root_class[r] == n) {
      // r is the least element of its class, and is met first at x == r
      root_class[r] = q.reps_.size();
      q.reps_.push_back(r);
    }
    q.class_of_[x] = root_class[r];
  }
  return q;
}

QuotientSet QuotientSet::discrete(std::size_t n) {
  UnionFind uf(n);
  return seal(uf);
}

std::vector<std::size_t> QuotientSet::members(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < class_of_.size(); ++x)
    if (class_of_[x] == c) out.push_back(x);
  return out;
}

}  // namespace zigzag
