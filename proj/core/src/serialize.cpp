#include "sympow/serialize.hpp"

namespace sympow {

void to_json(nlohmann::json& j, const Monomial& m) { j = m.exponents(); }

void to_json(nlohmann::json& j, const VertexCover& c) { j = c.vertices; }

void to_json(nlohmann::json& j, const CoverMatrix& a) {
  j = nlohmann::json{{"rows", a.rows}};
}

void to_json(nlohmann::json& j, const Rational& q) { j = q.str(); }

void to_json(nlohmann::json& j, const GeneratorSet& g) {
  j = nlohmann::json::array();
  for (const auto& m : g.monomials) j.push_back(m.exponents());
}

void to_json(nlohmann::json& j, const Factorization& f) {
  nlohmann::json edges = nlohmann::json::object();
  for (std::size_t k = 0; k < f.edge_exponents.size(); ++k) {
    if (f.edge_exponents[k] == 0) continue;
    const auto& [a, b] = f.graph.edges()[k];
    edges["(" + std::to_string(a) + "," + std::to_string(b) + ")"] = f.edge_exponents[k];
  }
  j = nlohmann::json{{"ancillary", f.ancillary}, {"edges", std::move(edges)}};
}

void to_json(nlohmann::json& j, const DecompositionReport& r) {
  j = nlohmann::json{{"holds", r.holds}, {"sum_holds", r.sum_holds}};
  if (r.witness) {
    j["witness"] = r.witness->exponents();
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back(w.exponents());
  }
}

void to_json(nlohmann::json& j, const WitnessTerm& w) {
  j = nlohmann::json{{"m", w.m}, {"r", w.r}, {"ratio", w.ratio.str()}};
}

void to_json(nlohmann::json& j, const ContainmentReport& r) {
  j = nlohmann::json{{"m", r.m},
                     {"r", r.r},
                     {"contained", r.contained},
                     {"method", to_string(r.method)}};
}

void to_json(nlohmann::json& j, const LinearProgram& p) {
  auto rationals = [](const std::vector<Rational>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(x.str());
    return arr;
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : p.constraints) rows.push_back(rationals(row));
  nlohmann::json senses = nlohmann::json::array();
  for (auto s : p.senses)
    senses.push_back(s == RowSense::GreaterEqual ? ">=" : s == RowSense::LessEqual ? "<=" : "=");
  j = nlohmann::json{{"sense", p.maximize ? "maximize" : "minimize"},
                     {"objective", rationals(p.objective)},
                     {"constraints", std::move(rows)},
                     {"row_senses", std::move(senses)},
                     {"rhs", rationals(p.rhs)}};
}

void to_json(nlohmann::json& j, const LpSolution& s) {
  switch (s.status) {
    case LpStatus::Infeasible:
      j = nlohmann::json{{"status", "infeasible"}};
      return;
    case LpStatus::Unbounded:
      j = nlohmann::json{{"status", "unbounded"}};
      return;
    case LpStatus::Optimal:
      break;
  }
  nlohmann::json point = nlohmann::json::array();
  for (const auto& x : s.point) point.push_back(x.str());
  j = nlohmann::json{{"status", "optimal"}, {"value", s.value.str()}, {"point", std::move(point)}};
}

}  // namespace sympow
