#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sympow {

/// A monomial as an exponent vector over the variables x_1..x_N.
/// Exponents are non-negative machine integers; products are overflow-checked.
/// Immutable value type, safe to share across threads.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> exponents);
  Monomial(std::initializer_list<std::int64_t> exponents);

  static Monomial one(int num_vars);

  // Accepts either "x1^2*x2^2*x3" product notation or a bare exponent
  // vector "2,2,1,1,1". Product notation may omit variables.
  static Monomial parse(const std::string& text, int num_vars);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  std::int64_t exponent(int var) const;  // var is 1-based
  const std::vector<std::int64_t>& exponents() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;

  Monomial times(const Monomial& other) const;
  Monomial divided_by_var(int var) const;

  std::string str() const;  // "x1^2*x2^2*x3"; "1" for the constant monomial

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::int64_t> exps_;
};

std::int64_t degree(const Monomial& m);

// Sum of m's exponents over the given 1-based vertex indices.
std::int64_t vertex_weight(const Monomial& m, const std::vector<int>& vertices);

// True iff p divides m, i.e. p_i <= m_i for every i.
bool divides(const Monomial& p, const Monomial& m);

// Degree-then-lexicographic order on exponent vectors; the canonical sort
// order for generator sets and enumeration streams.
bool deg_lex_less(const Monomial& a, const Monomial& b);

}  // namespace sympow
