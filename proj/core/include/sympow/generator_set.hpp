#pragma once

#include <vector>

#include "sympow/monomial.hpp"

namespace sympow {

/// A minimal generating set of a monomial ideal: pairwise incomparable
/// monomials, sorted degree-then-lex.
struct GeneratorSet {
  std::vector<Monomial> monomials;

  int size() const { return static_cast<int>(monomials.size()); }
  bool empty() const { return monomials.empty(); }
  bool contains(const Monomial& m) const;

  // Some element divides m (i.e. m lies in the generated ideal).
  bool divides_some(const Monomial& m) const;

  bool operator==(const GeneratorSet&) const = default;
};

}  // namespace sympow
