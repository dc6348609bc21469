#include "sympow/ideals.hpp"

#include <algorithm>

#include "member_scan.hpp"
#include "sympow/errors.hpp"
#include "sympow/factorization.hpp"

namespace sympow {

using detail::CoverIndex;
using detail::MemberScan;

EdgeIdeal::EdgeIdeal(Graph g) : graph_(std::move(g)), covers_(minimal_vertex_covers(graph_)) {}

GeneratorSet EdgeIdeal::generators() const {
  std::vector<Monomial> gens;
  for (const auto& [a, b] : graph_.edges()) {
    std::vector<std::int64_t> exps(graph_.num_vertices(), 0);
    exps[a - 1] = 1;
    exps[b - 1] = 1;
    gens.emplace_back(std::move(exps));
  }
  std::sort(gens.begin(), gens.end(), deg_lex_less);
  return GeneratorSet{std::move(gens)};
}

bool in_ordinary_power(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t) {
  if (m.num_vars() != ideal.graph().num_vertices())
    throw InvalidArgument("monomial length does not match graph");
  if (t <= 0) return true;
  return max_edge_count(ideal.graph(), m) >= t;
}

bool in_symbolic_power(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t) {
  if (m.num_vars() != ideal.graph().num_vertices())
    throw InvalidArgument("monomial length does not match graph");
  if (t <= 0) return true;
  for (const auto& cover : ideal.covers())
    if (vertex_weight(m, cover.vertices) < t) return false;
  return true;
}

bool l_membership(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t) {
  return m.degree() >= 2 * t && in_symbolic_power(ideal, m, t);
}

bool d_membership(const EdgeIdeal& ideal, const Monomial& m, std::int64_t t) {
  return m.degree() < 2 * t && in_symbolic_power(ideal, m, t);
}

GeneratorSet d_generators(const EdgeIdeal& ideal, std::int64_t t, std::uint64_t budget) {
  if (t < 1) return GeneratorSet{};
  return GeneratorSet{detail::minimal_generator_scan(ideal, t, 0, 2 * t - 1, budget)};
}

GeneratorSet l_generators(const EdgeIdeal& ideal, std::int64_t t, std::uint64_t budget) {
  if (t < 1) return GeneratorSet{{Monomial::one(ideal.graph().num_vertices())}};
  const int n = ideal.graph().num_vertices();
  detail::check_level_budget(n, 2 * t, 2 * t, t, budget);
  CoverIndex idx(ideal);
  MemberScan scan(ideal, idx, t, t);
  std::vector<Monomial> out;
  // every degree-2t member is divisibility-minimal inside L(t)
  scan.run_level(2 * t, [&](const std::vector<std::int64_t>& exps, const MemberScan&) {
    out.emplace_back(exps);
    return true;
  });
  detail::assert_boundary_clear(ideal, t, budget);
  return GeneratorSet{std::move(out)};
}

GeneratorSet symbolic_minimal_generators(const EdgeIdeal& ideal, std::int64_t t,
                                         std::uint64_t budget) {
  if (t < 1) return GeneratorSet{{Monomial::one(ideal.graph().num_vertices())}};
  auto gens = detail::minimal_generator_scan(ideal, t, 0, 2 * t, budget);
  detail::assert_boundary_clear(ideal, t, budget);
  return GeneratorSet{std::move(gens)};
}

GeneratorSet ordinary_power_generators(const EdgeIdeal& ideal, std::int64_t t,
                                       std::uint64_t budget) {
  const Graph& g = ideal.graph();
  if (t < 1) return GeneratorSet{{Monomial::one(g.num_vertices())}};
  const auto& edges = g.edges();
  // multisets of t edges: C(E+t-1, t) candidates
  unsigned __int128 count = 1;
  for (std::int64_t i = 1; i <= t; ++i) {
    count = count * static_cast<unsigned __int128>(edges.size() + t - i) /
            static_cast<unsigned __int128>(i);
    if (count > budget) throw ResourceLimit("edge multiset enumeration exceeds budget");
  }
  std::vector<Monomial> products;
  std::vector<std::int64_t> exps(g.num_vertices(), 0);
  auto rec = [&](auto&& self, std::size_t first_edge, std::int64_t remaining) -> void {
    if (remaining == 0) {
      products.emplace_back(exps);
      return;
    }
    for (std::size_t k = first_edge; k < edges.size(); ++k) {
      exps[edges[k].first - 1] += 1;
      exps[edges[k].second - 1] += 1;
      self(self, k, remaining - 1);
      exps[edges[k].first - 1] -= 1;
      exps[edges[k].second - 1] -= 1;
    }
  };
  rec(rec, 0, t);
  std::sort(products.begin(), products.end(), deg_lex_less);
  products.erase(std::unique(products.begin(), products.end()), products.end());
  // all candidates share degree 2t, so none divides another
  return GeneratorSet{std::move(products)};
}

DecompositionReport check_decomposition(const EdgeIdeal& ideal, std::int64_t t,
                                        std::uint64_t budget) {
  DecompositionReport report;
  if (t < 1) return report;

  // I^t = (L(t))? Failing generators are the minimal generators of (L(t))
  // outside I^t.
  for (const auto& g : l_generators(ideal, t, budget).monomials)
    if (!in_ordinary_power(ideal, g, t)) report.witnesses.push_back(g);

  report.holds = report.witnesses.empty();
  if (!report.holds) report.witness = report.witnesses.front();

  // reverse containment I^t subset of I^(t): a pure consistency check
  for (const auto& g : ordinary_power_generators(ideal, t, budget).monomials)
    if (!in_symbolic_power(ideal, g, t))
      throw std::logic_error("ordinary power generator escaped the symbolic power");

  // The ideal-level equality I^(t) = I^t + (D(t)) can hold even when the
  // L-form fails: a failing generator may be a multiple of a D(t) element.
  if (!report.holds) {
    GeneratorSet d = d_generators(ideal, t, budget);
    report.sum_holds =
        std::all_of(report.witnesses.begin(), report.witnesses.end(),
                    [&](const Monomial& w) { return d.divides_some(w); });
  }
  return report;
}

}  // namespace sympow
