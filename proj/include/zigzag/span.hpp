#ifndef ZIGZAG_SPAN_HPP
#define ZIGZAG_SPAN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zigzag {

using EdgeId = std::uint32_t;

enum class Side : std::uint8_t { A, B };

// A vertex of the realized graph A ⊔ B.
struct Vertex {
  Side side = Side::A;
  std::uint32_t index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  std::string label;
  std::uint32_t a;  // f(s)
  std::uint32_t b;  // g(s)
};

// A finite span A <- S -> B with a basepoint a0 in A. File order of
// vertices and edges is the tie-breaking order for everything downstream.
class FiniteSpan {
 public:
  FiniteSpan() = default;

  // Validates and throws std::invalid_argument on duplicate labels,
  // out-of-range endpoints or basepoint.
  FiniteSpan(std::vector<std::string> a_vertices, std::vector<std::string> b_vertices,
             std::vector<Edge> edges, std::uint32_t basepoint);

  const std::vector<std::string>& a_vertices() const { return a_; }
  const std::vector<std::string>& b_vertices() const { return b_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint32_t basepoint() const { return base_; }

  std::size_t num_a() const { return a_.size(); }
  std::size_t num_b() const { return b_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::uint32_t f(EdgeId s) const { return edges_.at(s).a; }
  std::uint32_t g(EdgeId s) const { return edges_.at(s).b; }

  // Edges s with f(s) = a, resp. g(s) = b, in input order.
  const std::vector<EdgeId>& edges_at_a(std::uint32_t a) const { return at_a_.at(a); }
  const std::vector<EdgeId>& edges_at_b(std::uint32_t b) const { return at_b_.at(b); }

  std::optional<Vertex> find_vertex(std::string_view label) const;
  std::optional<EdgeId> find_edge(std::string_view label) const;
  const std::string& label(Vertex v) const;

  friend bool operator==(const FiniteSpan& x, const FiniteSpan& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.base_ == y.base_ && x.edges_.size() == y.edges_.size() &&
           std::equal(x.edges_.begin(), x.edges_.end(), y.edges_.begin(), [](const Edge& p, const Edge& q) {
             return p.label == q.label && p.a == q.a && p.b == q.b;
           });
  }

 private:
  std::vector<std::string> a_;
  std::vector<std::string> b_;
  std::vector<Edge> edges_;
  std::uint32_t base_ = 0;
  std::vector<std::vector<EdgeId>> at_a_;
  std::vector<std::vector<EdgeId>> at_b_;
};

FiniteSpan parse_span(std::string_view text);
FiniteSpan load_span(const std::string& path);
std::string serialize_span(const FiniteSpan& span);

// Geometric realization: vertices A ⊔ B (A first), one undirected edge per s.
struct RealizedGraph {
  std::size_t num_a = 0;
  std::size_t num_b = 0;
  // edge k joins vertex ends[k].first (an A-vertex) and ends[k].second (a B-vertex)
  std::vector<std::pair<Vertex, Vertex>> ends;
  // incident edge ids per flat vertex id, in increasing edge order
  std::vector<std::vector<EdgeId>> incidence;

  std::size_t num_vertices() const { return num_a + num_b; }
  std::size_t num_edges() const { return ends.size(); }
  std::size_t flat(Vertex v) const { return v.side == Side::A ? v.index : num_a + v.index; }
  Vertex vertex(std::size_t flat_id) const;
  // The other end of edge e seen from v.
  Vertex across(EdgeId e, Vertex v) const;
};

RealizedGraph realize(const FiniteSpan& span);

struct Component {
  std::vector<Vertex> vertices;  // BFS discovery order
  std::vector<EdgeId> tree;      // spanning-tree edges in discovery order
  std::size_t num_edges = 0;     // all edges with both ends in the component
};

// BFS from v, scanning incident edges by input edge index.
Component component_of(const RealizedGraph& graph, Vertex v);

}  // namespace zigzag

#endif  // ZIGZAG_SPAN_HPP
