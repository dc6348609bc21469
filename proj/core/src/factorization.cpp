#include "sympow/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sympow/errors.hpp"

namespace sympow {

namespace {

// Maximum packing on a path: caps per vertex, one edge between consecutive
// vertices. Greedy left-to-right is exact here (taking as much as possible
// on the first edge never blocks more than it gains).
std::int64_t path_packing(const std::vector<std::int64_t>& caps) {
  std::int64_t total = 0, prev = 0;
  for (std::size_t i = 0; i + 1 < caps.size(); ++i) {
    std::int64_t take = std::min(caps[i] - prev, caps[i + 1]);
    if (take < 0) take = 0;
    total += take;
    prev = take;
  }
  return total;
}

std::int64_t cycle_packing(const std::vector<int>& order,
                           const std::vector<std::int64_t>& exps) {
  const std::size_t n = order.size();
  std::vector<std::int64_t> caps(n);
  for (std::size_t i = 0; i < n; ++i) caps[i] = exps[order[i] - 1];
  std::int64_t best = 0;
  const std::int64_t wrap_max = std::min(caps.front(), caps.back());
  for (std::int64_t w = 0; w <= wrap_max; ++w) {
    std::vector<std::int64_t> reduced = caps;
    reduced.front() -= w;
    reduced.back() -= w;
    best = std::max(best, w + path_packing(reduced));
  }
  return best;
}

struct PackingProblem {
  std::vector<Edge> edges;             // edges that can carry at least one unit
  std::vector<std::int64_t> caps;      // per vertex, 0-based
};

// Exact branch-and-bound over the (sorted) edge list. Values are tried
// descending so good incumbents appear early; the bound is half the total
// capacity still reachable by the remaining edges.
void branch_packing(PackingProblem& p, std::size_t i, std::int64_t current,
                    std::int64_t& best) {
  best = std::max(best, current);
  if (i == p.edges.size()) return;
  std::vector<char> seen(p.caps.size(), 0);
  std::int64_t reachable = 0;
  for (std::size_t k = i; k < p.edges.size(); ++k) {
    for (int v : {p.edges[k].first, p.edges[k].second}) {
      if (!seen[v - 1]) {
        seen[v - 1] = 1;
        reachable += p.caps[v - 1];
      }
    }
  }
  if (current + reachable / 2 <= best) return;  // cannot beat the incumbent

  auto [a, b] = p.edges[i];
  const std::int64_t max_take = std::min(p.caps[a - 1], p.caps[b - 1]);
  for (std::int64_t v = max_take; v >= 0; --v) {
    p.caps[a - 1] -= v;
    p.caps[b - 1] -= v;
    branch_packing(p, i + 1, current + v, best);
    p.caps[a - 1] += v;
    p.caps[b - 1] += v;
  }
}

std::int64_t general_packing(const Graph& g, const std::vector<std::int64_t>& exps,
                             std::size_t skip_below = 0) {
  PackingProblem p;
  p.caps = exps;
  for (std::size_t k = skip_below; k < g.edges().size(); ++k) {
    const auto& [a, b] = g.edges()[k];
    if (exps[a - 1] >= 1 && exps[b - 1] >= 1) p.edges.push_back(g.edges()[k]);
  }
  std::int64_t best = 0;
  branch_packing(p, 0, 0, best);
  return best;
}

void require_same_size(const Graph& g, const Monomial& m) {
  if (m.num_vars() != g.num_vertices())
    throw InvalidArgument("monomial length does not match graph");
}

}  // namespace

std::int64_t Factorization::edge_count() const {
  return std::accumulate(edge_exponents.begin(), edge_exponents.end(), std::int64_t{0});
}

Monomial Factorization::reconstruct() const {
  if (ancillary.size() != static_cast<std::size_t>(graph.num_vertices()) ||
      edge_exponents.size() != graph.edges().size())
    throw InvalidArgument("factorization fields do not match the graph");
  std::vector<std::int64_t> exps = ancillary;
  for (std::size_t k = 0; k < edge_exponents.size(); ++k) {
    const auto& [a, b] = graph.edges()[k];
    exps[a - 1] += edge_exponents[k];
    exps[b - 1] += edge_exponents[k];
  }
  return Monomial(std::move(exps));
}

std::string Factorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < ancillary.size(); ++i) {
    if (ancillary[i] == 0) continue;
    if (!first) os << " * ";
    os << 'x' << (i + 1);
    if (ancillary[i] > 1) os << '^' << ancillary[i];
    first = false;
  }
  for (std::size_t k = 0; k < edge_exponents.size(); ++k) {
    if (edge_exponents[k] == 0) continue;
    if (!first) os << " * ";
    os << "e(" << graph.edges()[k].first << ',' << graph.edges()[k].second << ')';
    if (edge_exponents[k] > 1) os << '^' << edge_exponents[k];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::int64_t max_edge_count(const Graph& g, const Monomial& m) {
  require_same_size(g, m);
  if (auto order = g.cycle_order()) return cycle_packing(*order, m.exponents());
  return general_packing(g, m.exponents());
}

Factorization optimal_factorization(const Graph& g, const Monomial& m) {
  require_same_size(g, m);
  const std::int64_t target = max_edge_count(g, m);

  // Fix edges one at a time in sorted order, taking the smallest value that
  // still lets the remaining edges reach the target. This yields the
  // lexicographically smallest optimal edge-exponent vector.
  std::vector<std::int64_t> caps = m.exponents();
  std::vector<std::int64_t> chosen(g.edges().size(), 0);
  std::int64_t fixed = 0;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& [a, b] = g.edges()[k];
    const std::int64_t max_take = std::min(caps[a - 1], caps[b - 1]);
    bool assigned = false;
    for (std::int64_t v = 0; v <= max_take; ++v) {
      caps[a - 1] -= v;
      caps[b - 1] -= v;
      const std::int64_t tail = general_packing(g, caps, k + 1);
      if (fixed + v + tail >= target) {
        chosen[k] = v;
        fixed += v;
        assigned = true;
        break;
      }
      caps[a - 1] += v;
      caps[b - 1] += v;
    }
    if (!assigned) throw std::logic_error("optimal factorization search lost the optimum");
  }

  Factorization f{g, std::move(caps), std::move(chosen)};
  return f;
}

namespace {

struct CycleView {
  std::vector<int> order;                   // vertex labels in cyclic order
  std::vector<std::size_t> edge_at;         // edge index between order[p], order[p+1]
};

CycleView cycle_view(const Factorization& f) {
  if (f.ancillary.size() != static_cast<std::size_t>(f.graph.num_vertices()) ||
      f.edge_exponents.size() != f.graph.edges().size())
    throw InvalidArgument("factorization fields do not match the graph");
  const Graph& g = f.graph;
  auto order = g.cycle_order();
  if (!order) throw InvalidArgument("factorization pattern ops require a cycle graph");
  CycleView view{*order, {}};
  const int n = static_cast<int>(view.order.size());
  view.edge_at.resize(n);
  for (int p = 0; p < n; ++p) {
    int a = view.order[p], b = view.order[(p + 1) % n];
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Edge{a, b});
    view.edge_at[p] = static_cast<std::size_t>(it - g.edges().begin());
  }
  return view;
}

bool pattern_at(const Factorization& f, const CycleView& view, int start_pos, int k) {
  const int n = static_cast<int>(view.order.size());
  const int span = 2 * k + 1;
  if (span > n) return false;
  const int end_pos = (start_pos + span) % n;
  if (span == n) {
    // both ancillaries sit on the same vertex
    if (f.ancillary[view.order[start_pos] - 1] < 2) return false;
  } else {
    if (f.ancillary[view.order[start_pos] - 1] < 1) return false;
    if (f.ancillary[view.order[end_pos] - 1] < 1) return false;
  }
  for (int h = 0; h < k; ++h) {
    std::size_t e = view.edge_at[(start_pos + 2 * h + 1) % n];
    if (f.edge_exponents[e] < 1) return false;
  }
  return true;
}

}  // namespace

std::optional<OddPathWitness> find_evens_pattern(const Factorization& f) {
  CycleView view = cycle_view(f);
  const int n = static_cast<int>(view.order.size());
  for (int pos = 0; pos < n; ++pos) {
    for (int k = 0; 2 * k + 1 <= n; ++k) {
      if (pattern_at(f, view, pos, k))
        return OddPathWitness{view.order[pos], k};
    }
  }
  return std::nullopt;
}

bool has_evens_pattern(const Factorization& f) { return find_evens_pattern(f).has_value(); }

Factorization rewrite_odd_path(const Factorization& f, int j, int k) {
  CycleView view = cycle_view(f);
  const int n = static_cast<int>(view.order.size());
  auto it = std::find(view.order.begin(), view.order.end(), j);
  if (it == view.order.end()) throw InvalidArgument("vertex out of range");
  const int pos = static_cast<int>(it - view.order.begin());
  if (k < 0 || 2 * k + 1 > n || !pattern_at(f, view, pos, k))
    throw InvalidArgument("odd-path pattern preconditions not met at the given (j, k)");

  Factorization out = f;
  const int end_pos = (pos + 2 * k + 1) % n;
  --out.ancillary[view.order[pos] - 1];
  --out.ancillary[view.order[end_pos] - 1];
  for (int h = 0; h < k; ++h) --out.edge_exponents[view.edge_at[(pos + 2 * h + 1) % n]];
  for (int h = 0; h <= k; ++h) ++out.edge_exponents[view.edge_at[(pos + 2 * h) % n]];
  return out;
}

}  // namespace sympow
