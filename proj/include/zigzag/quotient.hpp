#ifndef ZIGZAG_QUOTIENT_HPP
#define ZIGZAG_QUOTIENT_HPP

#include <cstddef>
#include <vector>

namespace zigzag {

// Union-find over 0..n-1 whose roots are always the least index of their
// class. Single owner while building; seal() produces a QuotientSet.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0);

  std::size_t size() const { return parent_.size(); }
  std::size_t add();  // appends a fresh singleton, returns its index
  std::size_t find(std::size_t x);
  // Returns true if the call merged two distinct classes.
  bool unite(std::size_t x, std::size_t y);

 private:
  std::vector<std::size_t> parent_;
};

// A finite set partitioned into classes, each with its least element as
// canonical representative. Classes are numbered by increasing representative.
class QuotientSet {
 public:
  QuotientSet() = default;
  static QuotientSet seal(UnionFind& uf);
  static QuotientSet discrete(std::size_t n);

  std::size_t num_elements() const { return class_of_.size(); }
  std::size_t num_classes() const { return reps_.size(); }
  std::size_t class_of(std::size_t x) const { return class_of_.at(x); }
  std::size_t representative(std::size_t c) const { return reps_.at(c); }
  const std::vector<std::size_t>& representatives() const { return reps_; }
  std::vector<std::size_t> members(std::size_t c) const;
  bool same(std::size_t x, std::size_t y) const { return class_of(x) == class_of(y); }

  friend bool operator==(const QuotientSet&, const QuotientSet&) = default;

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> reps_;
};

}  // namespace zigzag

#endif  // ZIGZAG_QUOTIENT_HPP
