#include "sympow/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sympow/errors.hpp"

namespace sympow {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
  if (n_ < 1) throw InvalidArgument("graph needs at least one vertex");
  for (auto& [a, b] : edges) {
    if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_) throw InvalidArgument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Graph Graph::cycle(int num_vertices) {
  if (num_vertices < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < num_vertices; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, num_vertices);
  return Graph(num_vertices, std::move(edges));
}

Graph Graph::complete(int num_vertices) {
  if (num_vertices < 2) throw InvalidArgument("complete graph needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= num_vertices; ++i)
    for (int j = i + 1; j <= num_vertices; ++j) edges.emplace_back(i, j);
  return Graph(num_vertices, std::move(edges));
}

Graph Graph::cycle_with_pendant(int cycle_size, int attach_at) {
  if (cycle_size < 3 || cycle_size % 2 == 0)
    throw InvalidArgument("pendant construction requires an odd cycle of size >= 3");
  if (attach_at < 1 || attach_at > cycle_size)
    throw InvalidArgument("pendant attachment vertex out of range");
  Graph base = cycle(cycle_size);
  std::vector<Edge> edges = base.edges();
  edges.emplace_back(attach_at, cycle_size + 1);
  return Graph(cycle_size + 1, std::move(edges));
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> n) || n < 1) throw ParseError(line_no, "expected vertex count");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing content after vertex count");
      have_n = true;
      continue;
    }
    int a = 0, b = 0;
    if (!(ls >> a)) {
      std::string rest;
      std::istringstream probe(line);
      if (!(probe >> rest)) continue;  // blank line
      throw ParseError(line_no, "malformed edge");
    }
    if (!(ls >> b)) throw ParseError(line_no, "malformed edge");
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing content after edge");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(line_no, "vertex index out of range");
    edges.emplace_back(a, b);
  }
  if (!have_n) throw ParseError(1, "expected vertex count");
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

int Graph::vertex_degree(int v) const {
  if (v < 1 || v > n_) throw InvalidArgument("vertex index out of range");
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::optional<std::vector<int>> Graph::cycle_order() const {
  if (n_ < 3 || num_edges() != n_) return std::nullopt;
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int v = 1; v <= n_; ++v)
    if (adj[v].size() != 2) return std::nullopt;
  std::vector<int> order{1};
  int prev = 0, cur = 1;
  // deterministic orientation: leave vertex 1 towards its smaller neighbor
  int next = std::min(adj[1][0], adj[1][1]);
  while (next != 1) {
    order.push_back(next);
    prev = cur;
    cur = next;
    next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
  }
  if (static_cast<int>(order.size()) != n_) return std::nullopt;  // disconnected
  return order;
}

bool Graph::is_cycle() const { return cycle_order().has_value(); }

bool Graph::is_odd_cycle() const { return is_cycle() && n_ % 2 == 1; }

bool VertexCover::covers(const Graph& g) const {
  for (const auto& [a, b] : g.edges()) {
    bool hit = std::binary_search(vertices.begin(), vertices.end(), a) ||
               std::binary_search(vertices.begin(), vertices.end(), b);
    if (!hit) return false;
  }
  return true;
}

bool VertexCover::is_minimal(const Graph& g) const {
  if (!covers(g)) return false;
  for (int v : vertices) {
    bool private_edge = false;
    for (const auto& [a, b] : g.edges()) {
      int in_cover = 0;
      int at_v = 0;
      for (int e : {a, b}) {
        if (std::binary_search(vertices.begin(), vertices.end(), e)) ++in_cover;
        if (e == v) ++at_v;
      }
      if (at_v == 1 && in_cover == 1) {
        private_edge = true;
        break;
      }
    }
    if (!private_edge) return false;
  }
  return true;
}

int CoverMatrix::row_sum(int row) const {
  int sum = 0;
  for (int x : rows.at(row)) sum += x;
  return sum;
}

std::vector<VertexCover> minimal_vertex_covers(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxCoverVertices)
    throw ResourceLimit("cover enumeration capped at " + std::to_string(kMaxCoverVertices) +
                        " vertices");
  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges())
    edge_masks.push_back((1u << (a - 1)) | (1u << (b - 1)));

  std::vector<std::uint32_t> found;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t s = 0; s <= all; ++s) {
    bool cover = true;
    for (auto em : edge_masks)
      if (!(s & em)) {
        cover = false;
        break;
      }
    if (!cover) continue;
    // minimal iff every chosen vertex owns an edge no other chosen vertex hits
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if (!(s >> v & 1)) continue;
      bool private_edge = false;
      for (auto em : edge_masks)
        if ((s & em) == (1u << v)) {
          private_edge = true;
          break;
        }
      if (!private_edge) minimal = false;
    }
    if (minimal) found.push_back(s);
  }

  std::vector<VertexCover> covers;
  covers.reserve(found.size());
  for (auto s : found) {
    VertexCover c;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) c.vertices.push_back(v + 1);
    covers.push_back(std::move(c));
  }
  std::sort(covers.begin(), covers.end(), [](const VertexCover& a, const VertexCover& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return covers;
}

CoverMatrix cover_matrix(const Graph& g) {
  CoverMatrix m;
  m.num_vertices = g.num_vertices();
  for (const auto& cover : minimal_vertex_covers(g)) {
    std::vector<int> row(g.num_vertices(), 0);
    for (int v : cover.vertices) row[v - 1] = 1;
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace sympow
