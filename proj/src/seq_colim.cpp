#include "zigzag/seq_colim.hpp"

#include <algorithm>
#include <numeric>

namespace zigzag {

namespace {

void check_map(const FinMap& m, std::size_t from, std::size_t to, const std::string& what) {
  if (m.size() != from) throw DiagramError(what + ": domain size mismatch");
  for (std::size_t y : m)
    if (y >= to) throw DiagramError(what + ": value out of range");
}

std::string at(const char* what, std::size_t n, std::size_t x) {
  return std::string(what) + " fails at level " + std::to_string(n) + ", element " + std::to_string(x);
}

}  // namespace

FinSeqDiagram::FinSeqDiagram(std::vector<std::size_t> sizes, std::vector<FinMap> maps)
    : sizes_(std::move(sizes)), maps_(std::move(maps)) {
  if (sizes_.empty()) throw DiagramError("diagram needs at least one stage");
  if (maps_.size() + 1 != sizes_.size()) throw DiagramError("diagram needs exactly one map per consecutive pair");
  for (std::size_t n = 0; n < maps_.size(); ++n)
    check_map(maps_[n], sizes_[n], sizes_[n + 1], "map " + std::to_string(n));
}

FinSeqDiagram FinSeqDiagram::constant(std::size_t set_size, std::size_t bound) {
  FinMap id(set_size);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return FinSeqDiagram(std::vector<std::size_t>(bound + 1, set_size), std::vector<FinMap>(bound, id));
}

FinSeqDiagram FinSeqDiagram::shifted() const {
  if (bound() == 0) throw DiagramError("cannot shift a diagram of bound 0");
  return FinSeqDiagram(std::vector<std::size_t>(sizes_.begin() + 1, sizes_.end()),
                       std::vector<FinMap>(maps_.begin() + 1, maps_.end()));
}

FinSeqDiagram FinSeqDiagram::truncated(std::size_t n) const {
  if (n > bound()) throw DiagramError("truncation above the diagram bound");
  return FinSeqDiagram(std::vector<std::size_t>(sizes_.begin(), sizes_.begin() + n + 1),
                       std::vector<FinMap>(maps_.begin(), maps_.begin() + n));
}

StagedElement DirectLimit::unflat(std::size_t i) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  std::size_t n = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return StagedElement{n, i - offsets_[n]};
}

DirectLimit direct_limit(const FinSeqDiagram& d, const std::vector<std::size_t>& union_order) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t n = 0; n <= d.bound(); ++n) offsets.push_back(offsets.back() + d.size(n));
  UnionFind uf(offsets.back());
  const std::size_t linked = offsets[d.bound()];  // elements of stages 0..N-1
  if (union_order.size() != linked) throw DiagramError("union order must list every element below the top stage");
  for (std::size_t i : union_order) {
    if (i >= linked) throw DiagramError("union order out of range");
    auto it = std::upper_bound(offsets.begin(), offsets.end(), i);
    std::size_t n = static_cast<std::size_t>(it - offsets.begin()) - 1;
    std::size_t x = i - offsets[n];
    uf.unite(i, offsets[n + 1] + d.map(n)[x]);
  }
  return DirectLimit(std::move(offsets), QuotientSet::seal(uf));
}

DirectLimit direct_limit(const FinSeqDiagram& d) {
  std::size_t linked = 0;
  for (std::size_t n = 0; n < d.bound(); ++n) linked += d.size(n);
  std::vector<std::size_t> order(linked);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return direct_limit(d, order);
}

SeqMorphism::SeqMorphism(const FinSeqDiagram& source, const FinSeqDiagram& target, std::vector<FinMap> levels)
    : levels_(std::move(levels)) {
  if (source.bound() != target.bound() || levels_.size() != source.bound() + 1)
    throw DiagramError("morphism needs one level per stage of equally truncated diagrams");
  for (std::size_t n = 0; n < levels_.size(); ++n)
    check_map(levels_[n], source.size(n), target.size(n), "level " + std::to_string(n));
  for (std::size_t n = 0; n < source.bound(); ++n) {
    for (std::size_t x = 0; x < source.size(n); ++x) {
      if (target.map(n)[levels_[n][x]] != levels_[n + 1][source.map(n)[x]])
        throw DiagramError(at("square condition", n, x));
    }
  }
}

SeqMorphism compose(const SeqMorphism& second, const SeqMorphism& first, const FinSeqDiagram& source,
                    const FinSeqDiagram& target) {
  std::vector<FinMap> levels;
  for (std::size_t n = 0; n <= first.bound(); ++n) {
    FinMap h(first.level(n).size());
    for (std::size_t x = 0; x < h.size(); ++x) h[x] = second.level(n).at(first.level(n)[x]);
    levels.push_back(std::move(h));
  }
  return SeqMorphism(source, target, std::move(levels));
}

std::vector<std::size_t> map_of_limits(const SeqMorphism& m, const FinSeqDiagram& source,
                                       const FinSeqDiagram& target) {
  DirectLimit src = direct_limit(source);
  DirectLimit tgt = direct_limit(target);
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> out(src.num_classes(), unset);
  for (std::size_t n = 0; n <= source.bound(); ++n) {
    for (std::size_t x = 0; x < source.size(n); ++x) {
      std::size_t c = src.iota(n, x);
      std::size_t image = tgt.iota(n, m.level(n)[x]);
      if (out[c] == unset) {
        out[c] = image;
      } else if (out[c] != image) {
        throw DiagramError(at("well-definedness on classes", n, x));
      }
    }
  }
  return out;
}

std::vector<std::size_t> shift_identification(const FinSeqDiagram& d) {
  FinSeqDiagram sh = d.shifted();
  DirectLimit lim = direct_limit(d);
  DirectLimit slim = direct_limit(sh);
  std::vector<std::size_t> out(slim.num_classes());
  for (std::size_t c = 0; c < out.size(); ++c) {
    StagedElement r = slim.representative(c);
    out[c] = lim.iota(r.stage + 1, r.element);
  }
  return out;
}

SeqZigzag::SeqZigzag(FinSeqDiagram left, FinSeqDiagram right, std::vector<FinMap> fwd, std::vector<FinMap> bwd)
    : left_(std::move(left)), right_(std::move(right)), fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
  const std::size_t N = left_.bound();
  if (right_.bound() != N) throw DiagramError("zigzag diagrams must share a bound");
  if (fwd_.size() != N + 1 || bwd_.size() != N) throw DiagramError("zigzag needs N+1 forward and N backward maps");
  for (std::size_t n = 0; n <= N; ++n) check_map(fwd_[n], left_.size(n), right_.size(n), "fwd " + std::to_string(n));
  for (std::size_t n = 0; n < N; ++n)
    check_map(bwd_[n], right_.size(n), left_.size(n + 1), "bwd " + std::to_string(n));
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t x = 0; x < left_.size(n); ++x)
      if (left_.map(n)[x] != bwd_[n][fwd_[n][x]]) throw DiagramError(at("upper triangle", n, x));
    for (std::size_t y = 0; y < right_.size(n); ++y)
      if (right_.map(n)[y] != fwd_[n + 1][bwd_[n][y]]) throw DiagramError(at("lower triangle", n, y));
  }
}

SeqZigzag half_shift(const SeqZigzag& z) {
  const std::size_t N = z.bound();
  if (N == 0) throw DiagramError("cannot half-shift a zigzag of bound 0");
  std::vector<FinMap> fwd, bwd;
  for (std::size_t n = 0; n + 1 <= N; ++n) fwd.push_back(z.bwd(n));
  for (std::size_t n = 0; n + 1 < N; ++n) bwd.push_back(z.fwd(n + 1));
  return SeqZigzag(z.right().truncated(N - 1), z.left().shifted(), std::move(fwd), std::move(bwd));
}

SeqMorphism zigzag_to_morphism(const SeqZigzag& z) {
  std::vector<FinMap> levels;
  for (std::size_t n = 0; n <= z.bound(); ++n) levels.push_back(z.fwd(n));
  return SeqMorphism(z.left(), z.right(), std::move(levels));
}

EquivalenceReport zigzag_equivalence(const SeqZigzag& z) {
  const std::size_t N = z.bound();
  if (N < 2) throw DiagramError("truncation bound must be at least 2 to verify any class");

  EquivalenceReport rep;
  DirectLimit left = direct_limit(z.left());
  DirectLimit right = direct_limit(z.right());
  rep.forward = map_of_limits(zigzag_to_morphism(z), z.left(), z.right());

  SeqZigzag hs = half_shift(z);
  std::vector<std::size_t> back_shifted = map_of_limits(zigzag_to_morphism(hs), hs.left(), hs.right());
  DirectLimit right_trunc = direct_limit(hs.left());
  DirectLimit left_shift = direct_limit(hs.right());

  rep.backward.assign(right.num_classes(), npos);
  for (std::size_t c = 0; c < right.num_classes(); ++c) {
    StagedElement r = right.representative(c);
    if (r.stage > N - 1) continue;
    StagedElement img = left_shift.representative(back_shifted[right_trunc.iota(r.stage, r.element)]);
    // drop the first triangle: stage m of A_{•+1} is stage m+1 of A_•
    rep.backward[c] = left.iota(img.stage + 1, img.element);
  }

  for (std::size_t c = 0; c < left.num_classes(); ++c) {
    if (left.representative(c).stage + 1 >= N) continue;
    ++rep.safe_left;
    std::size_t there = rep.forward[c];
    std::size_t back = rep.backward[there];
    if (back != c) rep.failures.push_back("g∘f differs from identity on left class " + std::to_string(c));
  }
  for (std::size_t c = 0; c < right.num_classes(); ++c) {
    if (right.representative(c).stage + 1 >= N) continue;
    ++rep.safe_right;
    std::size_t back = rep.backward[c];
    if (back == npos || rep.forward[back] != c)
      rep.failures.push_back("f∘g differs from identity on right class " + std::to_string(c));
  }
  return rep;
}

}  // namespace zigzag
