#include "sympow/invariants.hpp"

#include <algorithm>

#include "sympow/alpha.hpp"
#include "sympow/errors.hpp"
#include "sympow/factorization.hpp"

namespace sympow {

bool in_T(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (n < 1 || m < 1 || r < 1) throw InvalidArgument("in_T needs n, m, r >= 1");
  return alpha_symbolic_closed(n, m) < 2 * r;
}

Rational resurgence_closed(std::int64_t n) {
  if (n < 1) throw InvalidArgument("resurgence needs n >= 1");
  return Rational(BigInt(2 * n + 2), BigInt(2 * n + 1));
}

WitnessTerm witness_sequence(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0) throw InvalidArgument("witness sequence needs n >= 1, k >= 0");
  WitnessTerm w;
  w.m = n + 1 + k * (2 * n + 2);
  w.r = n + 1 + k * (2 * n + 1);
  w.ratio = Rational(BigInt(w.m), BigInt(w.r));
  return w;
}

std::int64_t multichoose(std::int64_t p, std::int64_t q) {
  if (p < 0) throw InvalidArgument("multichoose needs p >= 0");
  if (q < 0) return 0;
  if (q == 0) return 1;
  // binomial(p+q-1, q), exact; desk-scale results fit an int64
  BigInt result = 1;
  for (std::int64_t i = 1; i <= q; ++i) {
    result *= p + q - i;
    result /= i;
  }
  if (result > std::numeric_limits<std::int64_t>::max())
    throw Overflow("multichoose result exceeds int64");
  return static_cast<std::int64_t>(result);
}

namespace {

std::int64_t binomial(std::int64_t p, std::int64_t q) {
  if (q < 0 || q > p) return 0;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= q; ++i) {
    result *= p - q + i;
    result /= i;
  }
  if (result > std::numeric_limits<std::int64_t>::max())
    throw Overflow("binomial result exceeds int64");
  return static_cast<std::int64_t>(result);
}

}  // namespace

std::int64_t sdefect_closed(std::int64_t n, std::int64_t t) {
  if (n < 1 || t < 1) throw InvalidArgument("sdefect needs n >= 1, t >= 1");
  if (t > 2 * n + 1)
    throw OutOfScope("sdefect closed form stops at t = 2n+1");
  if (t <= n) return 0;
  if (t == n + 1) return 1;
  std::int64_t sum = 0;
  for (std::int64_t l = 1; l <= 2 * n + 1; ++l)
    sum += binomial(2 * n + 1, l) * multichoose(l, t - (n + 1) - l);
  return sum;
}

std::int64_t sdefect_bruteforce(const EdgeIdeal& ideal, std::int64_t t,
                                std::uint64_t budget) {
  if (t < 1) throw InvalidArgument("sdefect needs t >= 1");
  std::int64_t count = 0;
  for (const auto& g : symbolic_minimal_generators(ideal, t, budget).monomials)
    if (!in_ordinary_power(ideal, g, t)) ++count;
  return count;
}

std::string to_string(ContainmentMethod method) {
  return method == ContainmentMethod::GeneratorCheck ? "generator-check" : "alpha-comparison";
}

ContainmentReport containment_by_alpha(std::int64_t n, std::int64_t m, std::int64_t r) {
  ContainmentReport report;
  report.m = m;
  report.r = r;
  report.method = ContainmentMethod::AlphaComparison;
  report.contained = !in_T(n, m, r);  // alpha(I^(m)) < alpha(I^r) iff not contained
  return report;
}

ContainmentReport containment_check(const EdgeIdeal& ideal, std::int64_t m, std::int64_t r,
                                    std::uint64_t budget) {
  if (m < 1 || r < 1) throw InvalidArgument("containment check needs m, r >= 1");
  ContainmentReport report;
  report.m = m;
  report.r = r;
  report.method = ContainmentMethod::GeneratorCheck;
  report.contained = true;
  for (const auto& g : symbolic_minimal_generators(ideal, m, budget).monomials) {
    if (!in_ordinary_power(ideal, g, r)) {
      report.contained = false;
      break;
    }
  }
  if (ideal.graph().is_odd_cycle()) {
    const std::int64_t n = (ideal.graph().num_vertices() - 1) / 2;
    if (containment_by_alpha(n, m, r).contained != report.contained)
      throw std::logic_error("alpha comparison disagrees with the generator check");
  }
  return report;
}

}  // namespace sympow
