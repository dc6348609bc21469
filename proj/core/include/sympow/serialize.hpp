#pragma once

#include <nlohmann/json.hpp>

#include "sympow/factorization.hpp"
#include "sympow/generator_set.hpp"
#include "sympow/graph.hpp"
#include "sympow/ideals.hpp"
#include "sympow/invariants.hpp"
#include "sympow/lp.hpp"
#include "sympow/monomial.hpp"
#include "sympow/rational.hpp"

// JSON wire formats. Keys are emitted in nlohmann's sorted order and
// rationals as exact "p/q" strings, so identical inputs serialize to
// identical bytes and every dump parses back losslessly.

namespace sympow {

void to_json(nlohmann::json& j, const Monomial& m);          // [2,2,1,1,1]
void to_json(nlohmann::json& j, const VertexCover& c);       // [1,2,4]
void to_json(nlohmann::json& j, const CoverMatrix& a);       // {"rows": [[0,1,...],...]}
void to_json(nlohmann::json& j, const Rational& q);          // "35/4"
void to_json(nlohmann::json& j, const GeneratorSet& g);      // [[...],...], deg-lex
void to_json(nlohmann::json& j, const Factorization& f);     // {"ancillary":[...],"edges":{"(i,j)":b}}
void to_json(nlohmann::json& j, const DecompositionReport& r);
void to_json(nlohmann::json& j, const WitnessTerm& w);
void to_json(nlohmann::json& j, const ContainmentReport& r);
void to_json(nlohmann::json& j, const LinearProgram& p);
void to_json(nlohmann::json& j, const LpSolution& s);

}  // namespace sympow
