#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alexcalc {

class SpaceExpr;

enum class VertexColor { Black, White };

// Colored P2-graph of a 3-manifold whose boundary consists of projective
// planes: one vertex per piece of the manifold cut along a complete system of
// two-sided projective planes, white for boundary collars.  Multigraph; loops
// are allowed on black vertices.
class ColoredGraph {
 public:
  struct Vertex {
    std::string id;
    VertexColor color;
  };

  std::size_t add_vertex(std::string id, VertexColor color);
  void add_edge(std::size_t a, std::size_t b);
  void add_edge(std::string_view a, std::string_view b);
  // Removes the vertex and every incident edge; indices above it shift down.
  void remove_vertex(std::size_t v);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws VertexMissing

  // A loop contributes 2.
  std::size_t degree(std::size_t v) const;
  // Neighbor list with multiplicity; a loop lists v twice.
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t multiplicity(std::size_t a, std::size_t b) const;

  // White vertices have degree 1 and black vertices even degree.
  bool satisfies_degree_law() const;

  // Renames every vertex id to prefix + id.
  ColoredGraph prefixed(std::string_view prefix) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

// Glues along the boundary planes of two white vertices of one graph: both
// whites and their pendant edges go away and their neighbors are joined.
void join_whites(ColoredGraph& g, std::size_t white_a, std::size_t white_b);

// Graph of the manifold obtained by gluing the boundary planes represented
// by `white_a` and `white_b`.  Vertex ids of the result are prefixed "L." and
// "R.".  Throws NotWhite or VertexMissing.
ColoredGraph compose_p2(const ColoredGraph& a, std::string_view white_a,
                        const ColoredGraph& b, std::string_view white_b);

// Connected sum along spheres keeps the two systems apart.
ColoredGraph compose_s2(const ColoredGraph& a, const ColoredGraph& b);

// Color-preserving multigraph isomorphism by backtracking over a
// degree/color partition.
bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// Canonical byte string: equal iff the graphs are isomorphic.
std::string canonical_label(const ColoredGraph& g);

// True when two black vertices are joined by >= 2 parallel edges and one of
// them has no other incidences: a system that composition cannot keep
// minimal.
bool has_degenerate_parallel_pair(const ColoredGraph& g);

// Exchange format: one vertex per line, "id color: n1,n2,...".
std::string to_adjacency_text(const ColoredGraph& g);
ColoredGraph parse_adjacency_text(std::string_view text);
std::string to_dot(const ColoredGraph& g);

// P2-graph of the manifold part of `e`, assembled leaf by leaf; nullopt when
// an atom carries no graph data or a composition degenerates.
std::optional<ColoredGraph> graph_of(const SpaceExpr& e);

}  // namespace alexcalc
