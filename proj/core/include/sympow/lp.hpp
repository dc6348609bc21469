#pragma once

#include <string>
#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

enum class RowSense { GreaterEqual, LessEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// minimize (or maximize) objective . y  subject to the rows and y >= 0,
/// all data exact rationals.
struct LinearProgram {
  std::vector<std::vector<Rational>> constraints;  // rows x num_vars
  std::vector<RowSense> senses;                    // one per row
  std::vector<Rational> rhs;                       // one per row
  std::vector<Rational> objective;                 // one per variable
  bool maximize = false;

  int num_rows() const { return static_cast<int>(constraints.size()); }
  int num_vars() const { return static_cast<int>(objective.size()); }
  void validate() const;

  std::string tableau_text() const;  // plain-text dump
};

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational value;                // meaningful only when Optimal
  std::vector<Rational> point;   // ditto
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// pivot rule. Infeasible and unbounded programs are reported distinctly.
LpSolution lp_solve(const LinearProgram& program);

// The dual of a minimization program whose rows are all GreaterEqual:
// maximize rhs . x subject to A^T x <= objective, x >= 0.
LinearProgram dual_of(const LinearProgram& program);

/// Primal solution plus an independently solved dual whose optimum was
/// checked, exactly, to coincide (strong duality certificate). Both points
/// are verified feasible.
struct CertifiedSolution {
  LpSolution primal;
  LpSolution dual;
};

CertifiedSolution lp_solve_certified(const LinearProgram& program);

}  // namespace sympow
