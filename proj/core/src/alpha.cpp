#include "sympow/alpha.hpp"

#include <algorithm>

#include "member_scan.hpp"
#include "sympow/errors.hpp"
#include "sympow/factorization.hpp"

namespace sympow {

namespace {

std::vector<std::vector<int>> cover_rows(const Graph& g) {
  CoverMatrix matrix = cover_matrix(g);
  return matrix.rows;
}

LinearProgram program_from_rows(const std::vector<std::vector<int>>& rows, int num_vars,
                                std::int64_t t) {
  LinearProgram p;
  p.objective.assign(num_vars, Rational{1});
  for (const auto& row : rows) {
    std::vector<Rational> coeffs(num_vars);
    for (int j = 0; j < num_vars; ++j) coeffs[j] = Rational{row[j]};
    p.constraints.push_back(std::move(coeffs));
    p.senses.push_back(RowSense::GreaterEqual);
    p.rhs.push_back(Rational{t});
  }
  return p;
}

}  // namespace

LinearProgram alpha_program(const Graph& g, std::int64_t t) {
  if (t < 0) throw InvalidArgument("power must be non-negative");
  return program_from_rows(cover_rows(g), g.num_vertices(), t);
}

LinearProgram alpha_subprogram(const Graph& g, std::int64_t t) {
  if (t < 0) throw InvalidArgument("power must be non-negative");
  if (!g.is_odd_cycle())
    throw InvalidArgument("the alpha subprogram is defined for odd cycles only");
  const int n2 = g.num_vertices();  // 2n+1
  auto rows = cover_rows(g);
  // the 2n+1 minimum covers of size n+1 come first in the matrix
  rows.resize(n2);
  const int expected = (n2 + 1) / 2;
  for (const auto& row : rows) {
    int sum = 0;
    for (int x : row) sum += x;
    if (sum != expected) throw std::logic_error("cover matrix rows out of order");
  }
  return program_from_rows(rows, n2, t);
}

std::int64_t alpha_symbolic_closed(std::int64_t n, std::int64_t t) {
  if (n < 1 || t < 1) throw InvalidArgument("alpha closed form needs n >= 1, t >= 1");
  return 2 * t - t / (n + 1);
}

std::int64_t alpha_bruteforce(const EdgeIdeal& ideal, std::int64_t t, bool symbolic,
                              std::uint64_t budget) {
  if (t < 1) throw InvalidArgument("alpha search needs t >= 1");
  const int n = ideal.graph().num_vertices();
  // (x_a x_b)^t lies in both I^t and I^(t), so the search stops by 2t
  for (std::int64_t d = 0; d <= 2 * t; ++d) {
    detail::check_level_budget(n, d, d, d, budget);
    bool found = false;
    if (symbolic) {
      detail::CoverIndex idx(ideal);
      detail::MemberScan scan(ideal, idx, t, d);
      scan.run_level(d, [&](const std::vector<std::int64_t>&, const detail::MemberScan&) {
        found = true;
        return false;  // one member settles the level
      });
    } else {
      if (d >= 2 * t) {  // b(m) >= t forces degree >= 2t
        detail::CoverIndex idx(ideal);
        detail::MemberScan scan(ideal, idx, 0, d);  // weight filter off
        scan.run_level(d, [&](const std::vector<std::int64_t>& exps, const detail::MemberScan&) {
          if (max_edge_count(ideal.graph(), Monomial(exps)) >= t) {
            found = true;
            return false;
          }
          return true;
        });
      }
    }
    if (found) return d;
  }
  throw std::logic_error("alpha search passed the guaranteed degree bound");
}

Monomial witness_monomial(std::int64_t n, std::int64_t t) {
  if (n < 1 || t < 1) throw InvalidArgument("witness monomial needs n >= 1, t >= 1");
  const std::int64_t s = t / (n + 1);
  const std::int64_t d = t % (n + 1);
  std::vector<std::int64_t> exps(2 * n + 1, s);
  exps[0] += d;
  exps[1] += d;
  return Monomial(std::move(exps));
}

std::vector<Rational> subprogram_dual_point(std::int64_t n) {
  if (n < 1) throw InvalidArgument("dual point needs n >= 1");
  return std::vector<Rational>(2 * n + 1, Rational(BigInt(1), BigInt(n + 1)));
}

Rational verify_subprogram_certificate(const Graph& g, std::int64_t t) {
  if (!g.is_odd_cycle())
    throw InvalidArgument("the alpha subprogram is defined for odd cycles only");
  const std::int64_t n = (g.num_vertices() - 1) / 2;
  LinearProgram sub = alpha_subprogram(g, t);

  const Rational expected(BigInt((2 * n + 1) * t), BigInt(n + 1));
  const Rational y_star(BigInt(t), BigInt(n + 1));

  // primal candidate y* = (t/(n+1), ..., t/(n+1))
  Rational primal_value;
  for (int i = 0; i < sub.num_rows(); ++i) {
    Rational lhs;
    for (int j = 0; j < sub.num_vars(); ++j) lhs += sub.constraints[i][j] * y_star;
    if (lhs < sub.rhs[i]) throw std::logic_error("stated primal point is infeasible");
  }
  for (int j = 0; j < sub.num_vars(); ++j) primal_value += y_star;
  if (primal_value != expected) throw std::logic_error("stated primal value is off");

  // dual candidate x* = (1/(n+1), ..., 1/(n+1)) for max t.x, A^T x <= 1
  const auto x_star = subprogram_dual_point(n);
  LinearProgram dual = dual_of(sub);
  Rational dual_value;
  for (int i = 0; i < dual.num_rows(); ++i) {
    Rational lhs;
    for (int j = 0; j < dual.num_vars(); ++j) lhs += dual.constraints[i][j] * x_star[j];
    if (lhs > dual.rhs[i]) throw std::logic_error("stated dual point is infeasible");
  }
  for (int j = 0; j < dual.num_vars(); ++j) dual_value += dual.objective[j] * x_star[j];
  if (dual_value != expected) throw std::logic_error("stated dual value is off");

  return expected;
}

}  // namespace sympow
