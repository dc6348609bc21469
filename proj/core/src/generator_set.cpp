#include "sympow/generator_set.hpp"

#include <algorithm>

namespace sympow {

bool GeneratorSet::contains(const Monomial& m) const {
  return std::find(monomials.begin(), monomials.end(), m) != monomials.end();
}

bool GeneratorSet::divides_some(const Monomial& m) const {
  for (const auto& g : monomials)
    if (divides(g, m)) return true;
  return false;
}

}  // namespace sympow
