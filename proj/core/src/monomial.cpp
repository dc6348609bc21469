#include "sympow/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "sympow/errors.hpp"

namespace sympow {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("bad integer '" + std::string(s) + "' in " + what);
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial::Monomial(std::vector<std::int64_t> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_)
    if (e < 0) throw InvalidArgument("monomial exponents must be non-negative");
}

Monomial::Monomial(std::initializer_list<std::int64_t> exponents)
    : Monomial(std::vector<std::int64_t>(exponents)) {}

Monomial Monomial::one(int num_vars) {
  if (num_vars < 0) throw InvalidArgument("negative variable count");
  return Monomial(std::vector<std::int64_t>(num_vars, 0));
}

std::int64_t Monomial::exponent(int var) const {
  if (var < 1 || var > num_vars()) throw InvalidArgument("variable index out of range");
  return exps_[var - 1];
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
  if (num_vars() != other.num_vars())
    throw InvalidArgument("monomial length mismatch in product");
  std::vector<std::int64_t> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > std::numeric_limits<std::int64_t>::max() - other.exps_[i])
      throw Overflow("monomial product overflows");
    out[i] = exps_[i] + other.exps_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::divided_by_var(int var) const {
  if (var < 1 || var > num_vars()) throw InvalidArgument("variable index out of range");
  if (exps_[var - 1] == 0) throw InvalidArgument("quotient exponent would be negative");
  std::vector<std::int64_t> out = exps_;
  --out[var - 1];
  return Monomial(std::move(out));
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < num_vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (exps_[i] > 1) os << '^' << exps_[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

Monomial Monomial::parse(const std::string& text, int num_vars) {
  std::string_view body = trim(text);
  if (body.empty()) throw InvalidArgument("empty monomial");
  if (body == "1" && num_vars != 1) return one(num_vars);  // the constant monomial
  if (body.find('x') != std::string_view::npos) {
    std::vector<std::int64_t> exps(num_vars, 0);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t end = body.find('*', pos);
      std::string_view factor =
          trim(body.substr(pos, end == std::string_view::npos ? end : end - pos));
      if (factor.empty() || factor.front() != 'x')
        throw InvalidArgument("bad monomial factor '" + std::string(factor) + "'");
      factor.remove_prefix(1);
      std::int64_t exp = 1;
      if (auto caret = factor.find('^'); caret != std::string_view::npos) {
        exp = parse_int(factor.substr(caret + 1), "monomial exponent");
        factor = factor.substr(0, caret);
      }
      std::int64_t var = parse_int(factor, "monomial variable index");
      if (var < 1 || var > num_vars)
        throw InvalidArgument("variable x" + std::to_string(var) + " out of range");
      if (exp < 0) throw InvalidArgument("monomial exponents must be non-negative");
      exps[var - 1] += exp;
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    return Monomial(std::move(exps));
  }
  // bare exponent vector "2,2,1,1,1"
  std::vector<std::int64_t> exps;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(',', pos);
    std::string_view item =
        trim(body.substr(pos, end == std::string_view::npos ? end : end - pos));
    exps.push_back(parse_int(item, "exponent vector"));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (static_cast<int>(exps.size()) != num_vars)
    throw InvalidArgument("exponent vector has " + std::to_string(exps.size()) +
                          " entries, expected " + std::to_string(num_vars));
  return Monomial(std::move(exps));
}

std::int64_t degree(const Monomial& m) { return m.degree(); }

std::int64_t vertex_weight(const Monomial& m, const std::vector<int>& vertices) {
  std::int64_t sum = 0;
  for (int v : vertices) sum += m.exponent(v);
  return sum;
}

bool divides(const Monomial& p, const Monomial& m) {
  if (p.num_vars() != m.num_vars())
    throw InvalidArgument("monomial length mismatch in divisibility test");
  for (int i = 0; i < p.num_vars(); ++i)
    if (p.exponents()[i] > m.exponents()[i]) return false;
  return true;
}

bool deg_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() < b.exponents();
}

}  // namespace sympow
