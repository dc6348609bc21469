#pragma once

#include <cstdint>

#include "sympow/graph.hpp"
#include "sympow/ideals.hpp"
#include "sympow/lp.hpp"
#include "sympow/monomial.hpp"

// alpha(I^(t)) machinery: the exact-rational linear program built from the
// minimal vertex cover matrix, the closed form for odd cycles, and an
// ascending-degree brute-force search. The LP value is only ever a lower
// bound for alpha; it is never reported as alpha itself.

namespace sympow {

// minimize 1.y subject to A y >= t over the full cover matrix of g.
LinearProgram alpha_program(const Graph& g, std::int64_t t);

// Same with only the 2n+1 size-(n+1) rows; g must be an odd cycle.
LinearProgram alpha_subprogram(const Graph& g, std::int64_t t);

// alpha(I(C_{2n+1})^(t)) = 2t - floor(t/(n+1)).
std::int64_t alpha_symbolic_closed(std::int64_t n, std::int64_t t);

// Least degree of a monomial in I^(t) (symbolic) or I^t (ordinary), found by
// scanning degrees upward.
std::int64_t alpha_bruteforce(const EdgeIdeal& ideal, std::int64_t t, bool symbolic,
                              std::uint64_t budget = kDefaultBudget);

// x_1^{s+d} x_2^{s+d} x_3^s ... x_{2n+1}^s for t = s(n+1)+d; a degree
// (2n+1)s + 2d element of I^(t) witnessing the closed form.
Monomial witness_monomial(std::int64_t n, std::int64_t t);

// The explicit dual point (1/(n+1), ..., 1/(n+1)) for the subprogram.
std::vector<Rational> subprogram_dual_point(std::int64_t n);

// Checks the known closed-form primal/dual pair for the subprogram exactly:
// y* = t/(n+1) * 1 is feasible, x* is dual feasible, both attain
// (2n+1)t/(n+1). Returns the common value; throws on any violation.
Rational verify_subprogram_certificate(const Graph& g, std::int64_t t);

}  // namespace sympow
