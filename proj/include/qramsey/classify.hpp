#pragma once

// Closed-form classifiers for small clique unions and the explicit coloring
// constructions used to certify their negative cases.

#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

#include "qramsey/core.hpp"

namespace qramsey {

// Two vertex-disjoint cliques, two colors.  With a_i = p_i 2^{r_i} (p_i odd)
// and the pair ordered so r_1 <= r_2, the union is Ramsey exactly when
//   (1) r_1 == r_2, or
//   (2) some slack is 0 and both weights are even, or
//   (3) some slack is 1 and 2 <= r_1 < r_2.
inline bool classify_two_cliques(int a1, int t1, int a2, int t2) {
  TwoCliqueAnalysis x = TwoCliqueAnalysis::of(a1, t1, a2, t2);
  if (x.r1 > x.r2) {
    std::swap(x.a1, x.a2);
    std::swap(x.t1, x.t2);
    std::swap(x.r1, x.r2);
    std::swap(x.p1, x.p2);
  }
  if (x.r1 == x.r2) return true;
  if ((x.t1 == 0 || x.t2 == 0) && x.a1 % 2 == 0 && x.a2 % 2 == 0) return true;
  if ((x.t1 == 1 || x.t2 == 1) && x.r1 >= 2) return true;
  return false;
}

// Two cliques sharing c vertices, two colors.  Stated only for a_1 > a_2 and
// both slacks at least 2; m = (a_1 - a_2)/4 when integral.
inline bool classify_two_cliques_overlap(int a1, int t1, int a2, int t2, int c) {
  if (a1 < 1 || a2 < 1) throw std::invalid_argument("weights must be positive");
  if (a1 <= a2 || t1 < 2 || t2 < 2 || c < 1)
    throw std::invalid_argument("outside theorem hypotheses");
  if (c > std::min(a1 + t1, a2 + t2))
    throw std::invalid_argument("overlap exceeds a clique order");
  if (c >= 3) return false;
  if ((a1 - a2) % 4 != 0) return false;
  int m = (a1 - a2) / 4;
  int r = (a1 + a2) % (8 * m);
  if (c == 2) return r == 2;
  if (r == 0 || r == 2 || r == (4 * m - 2) % (8 * m) || r == (4 * m + 4) % (8 * m))
    return true;
  return m % 2 == 0 && (r == 6 % (8 * m) || r == (8 * m - 4) % (8 * m));
}

// Three vertex-disjoint cliques with pairwise distinct weights: Ramsey
// exactly when each pair is.
inline bool classify_three_cliques(int a1, int t1, int a2, int t2, int a3, int t3) {
  if (a1 == a2 || a1 == a3 || a2 == a3)
    throw std::invalid_argument("theorem requires pairwise distinct weights");
  return classify_two_cliques(a1, t1, a2, t2) &&
         classify_two_cliques(a1, t1, a3, t3) &&
         classify_two_cliques(a2, t2, a3, t3);
}

// The two-set core family for a pair of slack-free cliques: distance and sum
// of the weights (one set when the weights coincide).
inline SetFamily p_prime_two_cliques(int a1, int a2) {
  if (a1 < 1 || a2 < 1) throw std::invalid_argument("weights must be positive");
  if (a1 == a2) return {make_layer_set({0, 2 * a1})};
  SetFamily fam = {make_layer_set({0, std::abs(a1 - a2)}),
                   make_layer_set({0, a1 + a2})};
  return canonical_family(std::move(fam));
}

// Period-2m coloring RRBB...RRBB followed by its complement; avoids pairs at
// distance 2m along with the sum-distance pairs it is paired with.
inline PeriodicColoring build_rrbb_coloring(int m) {
  if (m < 4 || m % 4 != 0)
    throw std::invalid_argument("m must be a positive multiple of 4");
  PeriodicColoring c;
  c.palette = 2;
  c.colors.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    int base = (i % 4 < 2) ? 0 : 1;
    c.colors[i] = static_cast<std::uint8_t>(base);
    c.colors[i + m] = static_cast<std::uint8_t>(1 - base);
  }
  return c;
}

// Multiply every weight by m and install fresh slacks.
inline CliqueUnion scale_union(const CliqueUnion& u, int m,
                               const std::vector<int>& slacks) {
  u.validate();
  if (!u.vertex_disjoint())
    throw std::invalid_argument("scaling defined for disjoint unions");
  if (m < 1) throw std::invalid_argument("scale factor must be positive");
  if (slacks.size() != u.cliques.size())
    throw std::invalid_argument("one slack per clique required");
  CliqueUnion out;
  for (std::size_t i = 0; i < u.cliques.size(); ++i) {
    if (slacks[i] < 0) throw std::invalid_argument("negative weight or slack");
    out.cliques.push_back({u.cliques[i].weight * m, slacks[i]});
  }
  out.validate();
  return out;
}

// Stretch a two-coloring to scale m: position 2mn + j copies c(2n) when
// j = 0, 1 (mod 4) and its complement otherwise.
inline PeriodicColoring lift_coloring(const PeriodicColoring& c, int m) {
  if (c.palette != 2) throw std::invalid_argument("lift needs a two-color palette");
  if (m < 1) throw std::invalid_argument("scale factor must be positive");
  int p = c.period();
  int q = (p % 2 == 0) ? p / 2 : p;  // period of n -> c(2n)
  PeriodicColoring out;
  out.palette = 2;
  out.colors.resize(static_cast<std::size_t>(2 * m) * q);
  for (int n = 0; n < q; ++n) {
    int base = c.color(2LL * n);
    for (int j = 0; j < 2 * m; ++j)
      out.colors[static_cast<std::size_t>(2 * m) * n + j] =
          static_cast<std::uint8_t>(j % 4 < 2 ? base : 1 - base);
  }
  return out;
}

// Restrict a coloring to the multiples of m.
inline PeriodicColoring subsample_coloring(const PeriodicColoring& c, int m) {
  if (m < 1) throw std::invalid_argument("scale factor must be positive");
  int p = c.period();
  int q = p / std::gcd(p, m);
  PeriodicColoring out;
  out.palette = c.palette;
  for (int i = 0; i < q; ++i)
    out.colors.push_back(static_cast<std::uint8_t>(c.color(static_cast<long long>(m) * i)));
  return out;
}

// Exact test of 2(6s^2+1) e (3/4)^(s-1) < 1, with e bracketed by the
// rational enclosure [2718281828, 2718281829]/10^9.
inline bool lll_threshold_check(int s) {
  if (s < 1) throw std::invalid_argument("block count must be positive");
  using Rat = boost::multiprecision::cpp_rational;
  Rat e_lo(2718281828LL, 1000000000LL);
  Rat e_hi(2718281829LL, 1000000000LL);
  Rat coeff = 2 * (Rat(6) * s * s + 1);
  Rat pow(1);
  for (int i = 0; i + 1 < s; ++i) pow *= Rat(3, 4);
  if (coeff * e_hi * pow < 1) return true;
  if (coeff * e_lo * pow >= 1) return false;
  throw std::logic_error("e enclosure too coarse");
}

namespace detail {

// SplitMix64 finalizer: the standard 64-bit avalanche used to derive
// independent block bits from (seed, block index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Random two-coloring on [lo, hi) with both colors in every pair {x, x + 2}:
// within the aligned block {4k,...,4k+3} the pairs {4k, 4k+2} and
// {4k+1, 4k+3} each independently draw (R,B) or (B,R).  The draw for a pair
// is splitmix64(splitmix64(seed) ^ pair_base), so any subrange reproduces
// the colors of the full range.
inline FiniteColoring sample_block_coloring(long long lo, long long hi,
                                            std::uint64_t seed) {
  auto mod4 = [](long long v) { return ((v % 4) + 4) % 4; };
  if (mod4(lo) != 0 || mod4(hi) != 0)
    throw std::invalid_argument("range must align to blocks of four");
  if (lo >= hi) throw std::invalid_argument("empty sample range");
  std::uint64_t mixed_seed = detail::splitmix64(seed);
  FiniteColoring c;
  c.palette = 2;
  c.offset = lo;
  c.colors.reserve(static_cast<std::size_t>(hi - lo));
  for (long long n = lo; n < hi; ++n) {
    long long k = n >> 2;  // lo is 4-aligned, so >> floors correctly
    int r = static_cast<int>(n - 4 * k);
    long long pair_base = 4 * k + (r & 1);
    std::uint64_t h = detail::splitmix64(mixed_seed ^ static_cast<std::uint64_t>(pair_base));
    int bit = static_cast<int>(h & 1);
    c.colors.push_back(static_cast<std::uint8_t>(r < 2 ? bit : 1 - bit));
  }
  return c;
}

// Per-clique sign choice for odd weights: +1 when a_i = 1 (mod 4), else -1.
inline SignVector odd_small_slack_sign_choice(const std::vector<int>& weights) {
  SignVector v;
  for (int a : weights) {
    if (a < 1) throw std::invalid_argument("weights must be positive");
    if (a % 2 == 0) throw std::invalid_argument("even weight");
    v.signs.push_back(a % 4 == 1 ? 1 : -1);
  }
  return v;
}

}  // namespace qramsey
