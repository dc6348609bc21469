#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sympow/generator_set.hpp"
#include "sympow/graph.hpp"
#include "sympow/monomial.hpp"

// Deliberately simple brute-force engines used only to cross-validate the
// main computation paths. They share no traversal logic with those paths;
// if both sides agree, a common bug is unlikely.

namespace sympow {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;  // box candidates

/// Bounds for exhaustive exponent-vector enumeration.
struct EnumerationBox {
  int num_vars = 0;
  std::int64_t max_degree = 0;
  std::int64_t exponent_cap = 0;
};

// Number of exponent vectors inside the box, saturated at 2^64-1.
std::uint64_t box_size(const EnumerationBox& box);

// Every vector in the box exactly once, degree-then-lex order. The callback
// returns false to stop early. Throws ResourceLimit when the box volume
// exceeds the budget.
void enumerate_monomials(const EnumerationBox& box,
                         const std::function<bool(const Monomial&)>& visit,
                         std::uint64_t budget = kDefaultBudget);

std::vector<Monomial> collect_monomials(const EnumerationBox& box,
                                        std::uint64_t budget = kDefaultBudget);

// b(m) by plain recursion over the edge list, no pruning. Exact; requires
// degree(m) <= 20.
std::int64_t bmax_naive(const Graph& g, const Monomial& m);

// Minimal vertex covers as complements of maximal independent sets, found by
// scanning all vertex subsets. Independent of the cover-scan in graph.cpp.
std::vector<VertexCover> naive_minimal_covers(const Graph& g);

// Divisibility-minimal elements, deduplicated and sorted degree-then-lex.
GeneratorSet minimize_generators(const std::vector<Monomial>& monomials);

}  // namespace sympow
