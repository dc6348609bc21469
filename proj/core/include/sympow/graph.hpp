#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sympow {

/// Undirected edge as a normalized vertex pair: 1 <= first < second.
using Edge = std::pair<int, int>;

/// A finite simple graph on labeled vertices x_1..x_N.
/// Edges are stored deduplicated and sorted; instances are immutable.
class Graph {
 public:
  Graph(int num_vertices, std::vector<Edge> edges);

  static Graph cycle(int num_vertices);    // C_N, N >= 3
  static Graph complete(int num_vertices); // K_N, N >= 2

  // Odd cycle on 1..cycle_size plus one extra vertex joined to attach_at.
  static Graph cycle_with_pendant(int cycle_size, int attach_at);

  // First line "N", then one edge "i j" per line (1-based). Duplicate edges
  // collapse; self-loops, bad indices and malformed lines raise ParseError
  // with the offending line number.
  static Graph from_edge_list(const std::string& text);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;
  int vertex_degree(int v) const;

  // Vertices in cyclic traversal order (starting at 1, towards its smaller
  // neighbor) when the graph is a single cycle; nullopt otherwise.
  std::optional<std::vector<int>> cycle_order() const;
  bool is_cycle() const;
  bool is_odd_cycle() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A vertex cover, vertices sorted ascending.
struct VertexCover {
  std::vector<int> vertices;

  bool covers(const Graph& g) const;
  // Every vertex has a private edge: removing it breaks the cover property.
  bool is_minimal(const Graph& g) const;

  bool operator==(const VertexCover&) const = default;
};

/// 0/1 matrix with one row per minimal vertex cover, rows sorted by cover
/// size with ties broken lexicographically on the vertex index lists.
struct CoverMatrix {
  int num_vertices = 0;
  std::vector<std::vector<int>> rows;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int row_sum(int row) const;
};

// Exhaustive subset scan; exact but exponential, so graphs are capped.
inline constexpr int kMaxCoverVertices = 24;

// Exactly the inclusion-minimal vertex covers, in CoverMatrix row order.
std::vector<VertexCover> minimal_vertex_covers(const Graph& g);

CoverMatrix cover_matrix(const Graph& g);

}  // namespace sympow
