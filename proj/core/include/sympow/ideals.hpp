#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sympow/generator_set.hpp"
#include "sympow/graph.hpp"
#include "sympow/monomial.hpp"
#include "sympow/oracle.hpp"

namespace sympow {

/// The edge ideal I(G) = (x_i x_j : {i,j} in E(G)), with the minimal vertex
/// covers (the minimal primes) cached at construction.
class EdgeIdeal {
 public:
  explicit EdgeIdeal(Graph g);

  const Graph& graph() const { return graph_; }
  const std::vector<VertexCover>& covers() const { return covers_; }

  // Degree-2 squarefree generators, one per edge.
  GeneratorSet generators() const;

 private:
  Graph graph_;
  std::vector<VertexCover> covers_;
};

// m in I^t  <=>  b(m) >= t. t = 0 is the whole ring.
bool in_ordinary_power(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t);

// m in I^(t)  <=>  every minimal vertex cover has weight >= t on m.
bool in_symbolic_power(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t);

// L(t): cover weights >= t and degree >= 2t. D(t): cover weights >= t and
// degree < 2t. I^(t) = (L(t)) + (D(t)) by definition.
bool l_membership(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t);
bool d_membership(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t);

// Minimal generating set of (D(t)).
GeneratorSet d_generators(const EdgeIdeal& ideal, std::int64_t t,
                          std::uint64_t budget = kDefaultBudget);

// Minimal generating set of (L(t)): exactly the degree-2t members of L(t).
GeneratorSet l_generators(const EdgeIdeal& ideal, std::int64_t t,
                          std::uint64_t budget = kDefaultBudget);

// Minimal monomial generators of I^(t).
GeneratorSet symbolic_minimal_generators(const EdgeIdeal& ideal, std::int64_t t,
                                         std::uint64_t budget = kDefaultBudget);

// Minimal generators of I^t: the distinct products of t edges.
GeneratorSet ordinary_power_generators(const EdgeIdeal& ideal, std::int64_t t,
                                       std::uint64_t budget = kDefaultBudget);

/// Result of testing I^t = (L(t)) (equivalently, whether the decomposition
/// I^(t) = I^t + (D(t)) holds generator-by-generator). witnesses lists every
/// minimal generator of (L(t)) outside I^t in degree-then-lex order; witness
/// is the first. sum_holds reports the weaker ideal equality
/// I^(t) = I^t + (D(t)), which can survive even when holds is false.
struct DecompositionReport {
  bool holds = true;
  bool sum_holds = true;
  std::optional<Monomial> witness;
  std::vector<Monomial> witnesses;
};

DecompositionReport check_decomposition(const EdgeIdeal& ideal, std::int64_t t,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace sympow
