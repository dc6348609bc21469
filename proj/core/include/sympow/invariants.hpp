#pragma once

#include <cstdint>
#include <string>

#include "sympow/ideals.hpp"
#include "sympow/rational.hpp"

// Containment set T, resurgence, witness ratios and the symbolic defect
// sequence for edge ideals of odd cycles C_{2n+1}.

namespace sympow {

// m/r in T = { m/r : I^(m) not contained in I^r } for I(C_{2n+1}),
// decided by comparing alpha(I^(m)) against alpha(I^r) = 2r.
bool in_T(std::int64_t n, std::int64_t m, std::int64_t r);

// rho(I(C_{2n+1})) = (2n+2)/(2n+1).
Rational resurgence_closed(std::int64_t n);

/// k-th term of the witness sequence approaching the resurgence from below:
/// m_k = n+1 + k(2n+2), r_k = n+1 + k(2n+1). The pair is kept unreduced
/// (the k = 0 term is (n+1)/(n+1)); ratio is the reduced value.
struct WitnessTerm {
  std::int64_t m = 0;
  std::int64_t r = 0;
  Rational ratio;
};

WitnessTerm witness_sequence(std::int64_t n, std::int64_t k);

// Multiset coefficient ((p multichoose q)) = binomial(p+q-1, q); 0 for q < 0.
std::int64_t multichoose(std::int64_t p, std::int64_t q);

// sdefect(I(C_{2n+1}), t): 0 for t <= n, 1 for t = n+1, and the binomial sum
// for n+2 <= t <= 2n+1. Throws OutOfScope beyond 2n+1.
std::int64_t sdefect_closed(std::int64_t n, std::int64_t t);

// Number of minimal generators of I^(t) that lie outside I^t.
std::int64_t sdefect_bruteforce(const EdgeIdeal& ideal, std::int64_t t,
                                std::uint64_t budget = kDefaultBudget);

enum class ContainmentMethod { GeneratorCheck, AlphaComparison };

std::string to_string(ContainmentMethod method);

struct ContainmentReport {
  std::int64_t m = 0;
  std::int64_t r = 0;
  bool contained = false;
  ContainmentMethod method = ContainmentMethod::GeneratorCheck;
};

// Generator check: I^(m) subseteq I^r iff every minimal generator of I^(m)
// lies in I^r. On odd cycles the alpha comparison runs as well and any
// disagreement throws (it would contradict the minimum-degree criterion).
ContainmentReport containment_check(const EdgeIdeal& ideal, std::int64_t m,
                                    std::int64_t r,
                                    std::uint64_t budget = kDefaultBudget);

// The alpha comparison alone; only valid for odd cycles C_{2n+1}.
ContainmentReport containment_by_alpha(std::int64_t n, std::int64_t m, std::int64_t r);

}  // namespace sympow
