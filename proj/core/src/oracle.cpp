#include "sympow/oracle.hpp"

#include <algorithm>

#include "sympow/errors.hpp"

namespace sympow {

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

void check_box(const EnumerationBox& box) {
  if (box.num_vars < 0 || box.max_degree < 0 || box.exponent_cap < 0)
    throw InvalidArgument("enumeration bounds must be non-negative");
}

}  // namespace

std::uint64_t box_size(const EnumerationBox& box) {
  check_box(box);
  // ways[d] = number of vectors over the vars seen so far with degree d
  std::vector<std::uint64_t> ways(box.max_degree + 1, 0);
  ways[0] = 1;
  for (int v = 0; v < box.num_vars; ++v) {
    std::vector<std::uint64_t> next(box.max_degree + 1, 0);
    for (std::int64_t d = 0; d <= box.max_degree; ++d) {
      if (ways[d] == 0) continue;
      for (std::int64_t e = 0; e <= box.exponent_cap && d + e <= box.max_degree; ++e)
        next[d + e] = saturating_add(next[d + e], ways[d]);
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = saturating_add(total, w);
  return total;
}

void enumerate_monomials(const EnumerationBox& box,
                         const std::function<bool(const Monomial&)>& visit,
                         std::uint64_t budget) {
  check_box(box);
  if (box_size(box) > budget) throw ResourceLimit("enumeration box exceeds budget");
  if (box.num_vars == 0) {
    if (box.max_degree >= 0) visit(Monomial::one(0));
    return;
  }
  std::vector<std::int64_t> exps(box.num_vars, 0);
  bool stop = false;
  // within one degree level, fill positions left to right with ascending
  // exponents; this realizes lexicographic order
  auto level = [&](auto&& self, int pos, std::int64_t remaining) -> void {
    if (stop) return;
    if (pos == box.num_vars - 1) {
      if (remaining <= box.exponent_cap) {
        exps[pos] = remaining;
        if (!visit(Monomial(exps))) stop = true;
        exps[pos] = 0;
      }
      return;
    }
    for (std::int64_t e = 0; e <= std::min(box.exponent_cap, remaining) && !stop; ++e) {
      exps[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    exps[pos] = 0;
  };
  for (std::int64_t d = 0; d <= box.max_degree && !stop; ++d) level(level, 0, d);
}

std::vector<Monomial> collect_monomials(const EnumerationBox& box, std::uint64_t budget) {
  std::vector<Monomial> out;
  enumerate_monomials(
      box,
      [&](const Monomial& m) {
        out.push_back(m);
        return true;
      },
      budget);
  return out;
}

std::int64_t bmax_naive(const Graph& g, const Monomial& m) {
  if (m.num_vars() != g.num_vertices())
    throw InvalidArgument("monomial length does not match graph");
  if (m.degree() > 20) throw ResourceLimit("bmax_naive is limited to degree <= 20");
  std::vector<std::int64_t> caps = m.exponents();
  const auto& edges = g.edges();
  auto rec = [&](auto&& self, std::size_t i) -> std::int64_t {
    if (i == edges.size()) return 0;
    std::int64_t best = self(self, i + 1);
    auto [a, b] = edges[i];
    if (caps[a - 1] >= 1 && caps[b - 1] >= 1) {
      --caps[a - 1];
      --caps[b - 1];
      best = std::max(best, 1 + self(self, i));
      ++caps[a - 1];
      ++caps[b - 1];
    }
    return best;
  };
  return rec(rec, 0);
}

std::vector<VertexCover> naive_minimal_covers(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxCoverVertices) throw ResourceLimit("graph too large for naive cover scan");
  std::vector<VertexCover> covers;
  const std::uint32_t limit = (1u << n) - 1;
  for (std::uint32_t s = 0; s <= limit; ++s) {
    // s as an independent set
    bool independent = true;
    for (const auto& [a, b] : g.edges())
      if ((s >> (a - 1) & 1) && (s >> (b - 1) & 1)) {
        independent = false;
        break;
      }
    if (!independent) continue;
    // maximal: every outside vertex sees a neighbor inside
    bool maximal = true;
    for (int v = 1; v <= n && maximal; ++v) {
      if (s >> (v - 1) & 1) continue;
      bool neighbor_inside = false;
      for (const auto& [a, b] : g.edges()) {
        int other = a == v ? b : (b == v ? a : 0);
        if (other != 0 && (s >> (other - 1) & 1)) {
          neighbor_inside = true;
          break;
        }
      }
      if (!neighbor_inside) maximal = false;
    }
    if (!maximal) continue;
    VertexCover c;
    for (int v = 1; v <= n; ++v)
      if (!(s >> (v - 1) & 1)) c.vertices.push_back(v);
    covers.push_back(std::move(c));
  }
  std::sort(covers.begin(), covers.end(), [](const VertexCover& a, const VertexCover& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return covers;
}

GeneratorSet minimize_generators(const std::vector<Monomial>& monomials) {
  std::vector<Monomial> sorted = monomials;
  std::sort(sorted.begin(), sorted.end(), deg_lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> kept;
  for (const auto& m : sorted) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, m)) {  // kept elements have degree <= deg(m)
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  return GeneratorSet{std::move(kept)};
}

}  // namespace sympow
