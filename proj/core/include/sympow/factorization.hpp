#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympow/graph.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

/// A writing m = prod x_i^{a_i} * prod e^{b_e} of a monomial as ancillary
/// variables times edge monomials of a graph. edge_exponents is aligned with
/// graph.edges().
struct Factorization {
  Graph graph;
  std::vector<std::int64_t> ancillary;        // one entry per vertex
  std::vector<std::int64_t> edge_exponents;   // one entry per edge

  std::int64_t edge_count() const;            // sum of edge exponents
  Monomial reconstruct() const;
  std::string str() const;                    // "x1 * e(1,2) * e(2,3)^2"
};

/// b(m): the maximum number of edges (with multiplicity) whose product
/// divides m. Cycles use a linear sweep fixing the wrap edge; other graphs
/// an exact branch-and-bound over the sorted edge list.
std::int64_t max_edge_count(const Graph& g, const Monomial& m);

/// A factorization attaining edge_count == b(m). Among the maximizers,
/// returns the lexicographically smallest edge-exponent vector with respect
/// to the graph's sorted edge order.
Factorization optimal_factorization(const Graph& g, const Monomial& m);

/// Witness for the forbidden odd-path configuration: ancillaries at vertex j
/// and at the vertex 2k+1 steps further along the cycle, with every edge at
/// odd offset j+1, j+3, ..., j+2k-1 present. half_length is k.
struct OddPathWitness {
  int vertex = 0;
  int half_length = 0;
};

// Only defined when f.graph is a cycle; throws InvalidArgument otherwise.
// A factorization exhibiting the pattern cannot be optimal.
std::optional<OddPathWitness> find_evens_pattern(const Factorization& f);
bool has_evens_pattern(const Factorization& f);

/// Rewrites the witnessed odd path: removes the two end ancillaries and the
/// k odd-offset edges, inserts the k+1 even-offset edges. Preserves the
/// reconstructed monomial and increases edge_count by exactly one.
Factorization rewrite_odd_path(const Factorization& f, int j, int k);

}  // namespace sympow
