#include "sympow/lp.hpp"

#include <algorithm>
#include <sstream>

#include "sympow/errors.hpp"

namespace sympow {

void LinearProgram::validate() const {
  if (static_cast<int>(senses.size()) != num_rows() ||
      static_cast<int>(rhs.size()) != num_rows())
    throw InvalidArgument("inconsistent linear program row data");
  for (const auto& row : constraints)
    if (static_cast<int>(row.size()) != num_vars())
      throw InvalidArgument("constraint row length does not match objective");
}

std::string LinearProgram::tableau_text() const {
  std::ostringstream os;
  os << (maximize ? "maximize" : "minimize");
  for (const auto& c : objective) os << ' ' << c.str();
  os << "\nsubject to\n";
  for (int i = 0; i < num_rows(); ++i) {
    for (const auto& a : constraints[i]) os << a.str() << ' ';
    os << (senses[i] == RowSense::GreaterEqual ? ">="
           : senses[i] == RowSense::LessEqual  ? "<="
                                               : "=")
       << ' ' << rhs[i].str() << '\n';
  }
  os << "vars >= 0\n";
  return os.str();
}

namespace {

// Dense tableau simplex. Costs live outside the tableau; reduced costs are
// recomputed per pivot, which is cheap at the sizes the alpha programs have.
class Simplex {
 public:
  Simplex(const LinearProgram& p) : prog_(p) { build(); }

  LpSolution solve() {
    if (!phase1()) return {LpStatus::Infeasible, Rational{}, {}};
    std::vector<Rational> costs(num_cols_, Rational{});
    for (int j = 0; j < prog_.num_vars(); ++j)
      costs[j] = prog_.maximize ? -prog_.objective[j] : prog_.objective[j];
    if (!optimize(costs)) return {LpStatus::Unbounded, Rational{}, {}};

    std::vector<Rational> point(prog_.num_vars(), Rational{});
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] < prog_.num_vars()) point[basis_[i]] = rhs_[i];
    Rational value;
    for (int j = 0; j < prog_.num_vars(); ++j) value += prog_.objective[j] * point[j];
    return {LpStatus::Optimal, value, std::move(point)};
  }

 private:
  void build() {
    prog_.validate();
    rows_ = prog_.num_rows();
    tab_.assign(rows_, {});
    rhs_.resize(rows_);
    basis_.assign(rows_, -1);

    const int n = prog_.num_vars();
    int extra = 0;  // slack/surplus columns
    for (auto s : prog_.senses) extra += (s != RowSense::Equal);
    num_cols_ = n + extra;
    artificial_start_ = num_cols_;

    int next_extra = n;
    std::vector<int> needs_artificial;
    for (int i = 0; i < rows_; ++i) {
      tab_[i].assign(num_cols_, Rational{});
      bool flip = prog_.rhs[i] < Rational{0};
      RowSense sense = prog_.senses[i];
      if (flip && sense != RowSense::Equal)
        sense = sense == RowSense::LessEqual ? RowSense::GreaterEqual : RowSense::LessEqual;
      for (int j = 0; j < n; ++j)
        tab_[i][j] = flip ? -prog_.constraints[i][j] : prog_.constraints[i][j];
      rhs_[i] = flip ? -prog_.rhs[i] : prog_.rhs[i];
      if (sense == RowSense::LessEqual) {
        tab_[i][next_extra] = Rational{1};
        basis_[i] = next_extra++;  // slack starts basic
      } else if (sense == RowSense::GreaterEqual) {
        tab_[i][next_extra] = Rational{-1};
        ++next_extra;
        needs_artificial.push_back(i);
      } else {
        needs_artificial.push_back(i);
      }
    }
    for (int i : needs_artificial) {
      for (auto& row : tab_) row.push_back(Rational{});
      tab_[i][num_cols_] = Rational{1};
      basis_[i] = num_cols_;
      ++num_cols_;
    }
  }

  bool phase1() {
    if (artificial_start_ == num_cols_) return true;  // all-slack start is feasible
    std::vector<Rational> costs(num_cols_, Rational{});
    for (int j = artificial_start_; j < num_cols_; ++j) costs[j] = Rational{1};
    if (!optimize(costs)) throw std::logic_error("phase 1 cannot be unbounded");
    Rational infeasibility;
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] >= artificial_start_) infeasibility += rhs_[i];
    if (!infeasibility.is_zero()) return false;
    // pivot leftover artificials out of the basis (their value is zero)
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < artificial_start_) continue;
      int enter = -1;
      for (int j = 0; j < artificial_start_; ++j)
        if (!tab_[i][j].is_zero()) {
          enter = j;
          break;
        }
      if (enter >= 0) pivot(i, enter);
      // otherwise the row is redundant; the zero-valued artificial stays
      // basic and never re-enters because its column is dropped below
    }
    num_cols_ = artificial_start_;
    for (auto& row : tab_) row.resize(num_cols_);
    return true;
  }

  bool optimize(const std::vector<Rational>& costs) {
    for (;;) {
      // reduced cost c_j - c_B B^-1 A_j, computed against the current tableau
      int enter = -1;
      for (int j = 0; j < num_cols_ && enter < 0; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = costs.size() > static_cast<std::size_t>(j) ? costs[j] : Rational{};
        for (int i = 0; i < rows_; ++i) {
          int b = basis_[i];
          const Rational& cb =
              costs.size() > static_cast<std::size_t>(b) ? costs[b] : Rational{};
          if (!cb.is_zero() && !tab_[i][j].is_zero()) reduced -= cb * tab_[i][j];
        }
        if (reduced < Rational{0}) enter = j;  // Bland: first improving index
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (!(tab_[i][enter] > Rational{0})) continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {  // Bland tie-break
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded direction
      pivot(leave, enter);
    }
  }

  bool is_basic(int col) const {
    return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
  }

  void pivot(int row, int col) {
    const Rational p = tab_[row][col];
    for (auto& x : tab_[row]) x /= p;
    rhs_[row] /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || tab_[i][col].is_zero()) continue;
      const Rational f = tab_[i][col];
      for (int j = 0; j < num_cols_; ++j) tab_[i][j] -= f * tab_[row][j];
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  const LinearProgram& prog_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  int rows_ = 0;
  int num_cols_ = 0;
  int artificial_start_ = 0;
};

void check_feasible(const LinearProgram& p, const std::vector<Rational>& point) {
  for (const auto& x : point)
    if (x < Rational{0}) throw std::logic_error("simplex returned a negative coordinate");
  for (int i = 0; i < p.num_rows(); ++i) {
    Rational lhs;
    for (int j = 0; j < p.num_vars(); ++j) lhs += p.constraints[i][j] * point[j];
    bool ok = p.senses[i] == RowSense::GreaterEqual ? lhs >= p.rhs[i]
              : p.senses[i] == RowSense::LessEqual  ? lhs <= p.rhs[i]
                                                    : lhs == p.rhs[i];
    if (!ok) throw std::logic_error("simplex returned an infeasible point");
  }
}

}  // namespace

LpSolution lp_solve(const LinearProgram& program) {
  Simplex s(program);
  LpSolution sol = s.solve();
  if (sol.status == LpStatus::Optimal) check_feasible(program, sol.point);
  return sol;
}

LinearProgram dual_of(const LinearProgram& program) {
  program.validate();
  if (program.maximize) throw InvalidArgument("dual_of expects a minimization program");
  for (auto s : program.senses)
    if (s != RowSense::GreaterEqual)
      throw InvalidArgument("dual_of expects all-GreaterEqual rows");
  LinearProgram dual;
  dual.maximize = true;
  dual.objective = program.rhs;
  dual.rhs = program.objective;
  dual.senses.assign(program.num_vars(), RowSense::LessEqual);
  dual.constraints.assign(program.num_vars(),
                          std::vector<Rational>(program.num_rows(), Rational{}));
  for (int i = 0; i < program.num_rows(); ++i)
    for (int j = 0; j < program.num_vars(); ++j)
      dual.constraints[j][i] = program.constraints[i][j];
  return dual;
}

CertifiedSolution lp_solve_certified(const LinearProgram& program) {
  CertifiedSolution cs;
  cs.primal = lp_solve(program);
  if (cs.primal.status != LpStatus::Optimal) return cs;
  cs.dual = lp_solve(dual_of(program));
  if (cs.dual.status != LpStatus::Optimal || cs.dual.value != cs.primal.value)
    throw std::logic_error("strong duality certificate failed");
  return cs;
}

}  // namespace sympow
