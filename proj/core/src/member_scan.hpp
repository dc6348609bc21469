#pragma once

// Internal enumeration engine for the main computation paths: walks one
// degree level at a time in lexicographic order while maintaining the weight
// of every minimal vertex cover incrementally. Not installed; the separately
// coded brute-force engines live in oracle.cpp.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/ideals.hpp"

namespace sympow::detail {

struct CoverIndex {
  int num_covers = 0;
  std::vector<std::vector<int>> covers_of_vertex;  // 0-based vertex -> cover ids

  explicit CoverIndex(const EdgeIdeal& ideal) {
    num_covers = static_cast<int>(ideal.covers().size());
    covers_of_vertex.assign(ideal.graph().num_vertices(), {});
    for (int c = 0; c < num_covers; ++c)
      for (int v : ideal.covers()[c].vertices) covers_of_vertex[v - 1].push_back(c);
  }
};

inline std::uint64_t level_count(int num_vars, std::int64_t deg, std::int64_t cap) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  std::vector<std::uint64_t> ways(deg + 1, 0);
  ways[0] = 1;
  for (int v = 0; v < num_vars; ++v) {
    std::vector<std::uint64_t> next(deg + 1, 0);
    for (std::int64_t d = 0; d <= deg; ++d) {
      if (ways[d] == 0) continue;
      for (std::int64_t e = 0; e <= cap && d + e <= deg; ++e) {
        std::uint64_t& slot = next[d + e];
        slot = slot > kMax - ways[d] ? kMax : slot + ways[d];
      }
    }
    ways = std::move(next);
  }
  return ways[deg];
}

inline void check_level_budget(int num_vars, std::int64_t lo, std::int64_t hi,
                               std::int64_t cap, std::uint64_t budget) {
  std::uint64_t total = 0;
  for (std::int64_t d = lo; d <= hi; ++d) {
    std::uint64_t c = level_count(num_vars, d, cap);
    total = total > ~std::uint64_t{0} - c ? ~std::uint64_t{0} : total + c;
  }
  if (total > budget) throw ResourceLimit("enumeration box exceeds budget");
}

// Scans the monomials of one exact degree level in lexicographic order. The
// sink sees every monomial whose cover weights are all >= t; it returns
// false to stop the scan.
class MemberScan {
 public:
  MemberScan(const EdgeIdeal& ideal, const CoverIndex& idx, std::int64_t t,
             std::int64_t cap)
      : idx_(idx),
        t_(t),
        cap_(cap),
        n_(ideal.graph().num_vertices()),
        exps_(n_, 0),
        weights_(idx.num_covers, 0) {}

  template <typename Sink>
  bool run_level(std::int64_t degree, Sink&& sink) {
    stop_ = false;
    rec(0, degree, sink);
    return !stop_;
  }

  // A vertex is "free" if no cover of weight exactly t contains it; the
  // quotient by a free vertex stays in I^(t). A member is a minimal
  // generator iff its support has no free vertex.
  bool quotient_is_member(int vertex0) const {
    for (int c : idx_.covers_of_vertex[vertex0])
      if (weights_[c] == t_) return false;
    return true;
  }

 private:
  template <typename Sink>
  void rec(int pos, std::int64_t remaining, Sink& sink) {
    if (stop_) return;
    if (remaining > cap_ * (n_ - pos)) return;
    // a cover that cannot reach weight t even absorbing all remaining degree
    for (std::int64_t w : weights_)
      if (w + remaining < t_) return;
    if (pos == n_ - 1) {
      exps_[pos] = remaining;
      bump(pos, remaining);
      bool member = true;
      for (std::int64_t w : weights_)
        if (w < t_) {
          member = false;
          break;
        }
      if (member && !sink(exps_, *this)) stop_ = true;
      bump(pos, -remaining);
      exps_[pos] = 0;
      return;
    }
    for (std::int64_t e = 0; e <= std::min(cap_, remaining) && !stop_; ++e) {
      exps_[pos] = e;
      bump(pos, e);
      rec(pos + 1, remaining - e, sink);
      bump(pos, -e);
      exps_[pos] = 0;
    }
  }

  void bump(int pos, std::int64_t delta) {
    for (int c : idx_.covers_of_vertex[pos]) weights_[c] += delta;
  }

  const CoverIndex& idx_;
  std::int64_t t_;
  std::int64_t cap_;
  int n_;
  std::vector<std::int64_t> exps_;
  std::vector<std::int64_t> weights_;
  bool stop_ = false;
};

// Minimal generators of I^(t) with degree in [lo, hi], deg-lex order.
// Exponents above t never occur in minimal generators (quotienting a
// variable with exponent > t keeps every cover weight >= t).
inline std::vector<Monomial> minimal_generator_scan(const EdgeIdeal& ideal, std::int64_t t,
                                                    std::int64_t lo, std::int64_t hi,
                                                    std::uint64_t budget) {
  const int n = ideal.graph().num_vertices();
  check_level_budget(n, lo, hi, t, budget);
  CoverIndex idx(ideal);
  MemberScan scan(ideal, idx, t, t);
  std::vector<Monomial> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    scan.run_level(d, [&](const std::vector<std::int64_t>& exps, const MemberScan& s) {
      for (int i = 0; i < n; ++i)
        if (exps[i] > 0 && s.quotient_is_member(i)) return true;  // not minimal
      out.emplace_back(exps);
      return true;
    });
  }
  return out;
}

// Checked box assumption: the level just above degree 2t contains no minimal
// generator, so the deg <= 2t enumeration box is complete.
inline void assert_boundary_clear(const EdgeIdeal& ideal, std::int64_t t,
                                  std::uint64_t budget) {
  if (!minimal_generator_scan(ideal, t, 2 * t + 1, 2 * t + 1, budget).empty())
    throw std::logic_error(
        "enumeration box assumption violated: minimal generator of degree 2t+1");
}

}  // namespace sympow::detail
