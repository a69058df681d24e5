#pragma once

// Core value types for translate-Ramsey problems on the integer line and
// for clique unions in the hypercube: layer sets, set families, clique
// unions, colorings, and decision certificates.  All values are immutable
// after construction and safe to share across threads.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qramsey {

using BigInt = boost::multiprecision::cpp_int;

// -------------------- errors --------------------

// Grammar errors carry the byte offset of the offending character.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t pos_)
      : std::runtime_error(msg + " at position " + std::to_string(pos_)),
        pos(pos_) {}
};

// Raised when a computation would exceed an explicit budget (state count,
// cube dimension, walk enumeration).  Never a silent truncation.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -------------------- layer sets --------------------

// A LayerSet is a nonempty finite set of integers, kept strictly increasing.
// Normalized form has minimum element 0.
using LayerSet = std::vector<int>;

inline LayerSet make_layer_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline void require_nonempty(const LayerSet& ls) {
  if (ls.empty()) throw std::invalid_argument("empty layer set");
}

inline int diameter(const LayerSet& ls) {
  require_nonempty(ls);
  return ls.back() - ls.front();
}

inline LayerSet translate_set(const LayerSet& ls, int j) {
  LayerSet out(ls);
  for (int& x : out) x += j;
  return out;
}

inline LayerSet normalize(const LayerSet& ls) {
  require_nonempty(ls);
  return translate_set(ls, -ls.front());
}

// True iff pat + j is a subset of host for some integer j.
inline bool contains_translate_of(const LayerSet& host, const LayerSet& pat) {
  require_nonempty(host);
  require_nonempty(pat);
  for (int anchor : host) {
    int j = anchor - pat.front();
    bool all = true;
    for (int e : pat) {
      if (!std::binary_search(host.begin(), host.end(), e + j)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// -------------------- families --------------------

// A SetFamily is a duplicate-free collection of LayerSets in canonical
// order: by cardinality, then lexicographically on elements.
using SetFamily = std::vector<LayerSet>;

inline bool family_order(const LayerSet& a, const LayerSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline SetFamily canonical_family(SetFamily fam) {
  std::sort(fam.begin(), fam.end(), family_order);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

// Normalizes every set, then drops any set that properly contains a
// translate of another member.  The survivors form an antichain under
// "contains a translate of"; every input set contains a translate of some
// output set.  Idempotent.
//
// Scanning in canonical (size-then-lex) order lets each set be sieved
// against the kept members only: a dropped set covers a kept one, and
// covering is transitive.  Distinct normalized sets of equal size never
// cover each other, so only strictly smaller kept sets are consulted.
// Sets spanning at most 63 positions compare as single-word bitmasks.
inline SetFamily reduce_family(const SetFamily& fam) {
  SetFamily norm;
  norm.reserve(fam.size());
  int span = 0;
  for (const LayerSet& ls : fam) {
    require_nonempty(ls);
    norm.push_back(normalize(ls));
    span = std::max(span, norm.back().back());
  }
  norm = canonical_family(std::move(norm));
  SetFamily out;
  if (span < 64) {
    std::vector<std::uint64_t> kept;   // masks of kept sets
    std::vector<int> kept_span;        // their diameters
    std::vector<std::size_t> kept_size;
    for (const LayerSet& t : norm) {
      std::uint64_t m = 0;
      for (int x : t) m |= std::uint64_t{1} << x;
      int mspan = t.back();
      bool dominated = false;
      for (std::size_t i = 0; i < kept.size() && !dominated; ++i) {
        if (kept_size[i] >= t.size()) continue;
        for (int j = 0; j <= mspan - kept_span[i]; ++j)
          if (((kept[i] << j) & ~m) == 0) {
            dominated = true;
            break;
          }
      }
      if (!dominated) {
        kept.push_back(m);
        kept_span.push_back(mspan);
        kept_size.push_back(t.size());
        out.push_back(t);
      }
    }
    return out;
  }
  for (const LayerSet& t : norm) {
    bool dominated = false;
    for (const LayerSet& s : out)
      if (s.size() < t.size() && contains_translate_of(t, s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(t);
  }
  return out;  // already canonical: filtered from a canonical list
}

// -------------------- clique unions --------------------

// One clique K_{a+t}^{(a)}: all weight-a subsets of a fixed (a+t)-set.
struct CliqueSpec {
  int weight = 0;  // a
  int slack = 0;   // t
  int order() const { return weight + slack; }
};

// An ordered union of cliques.  `overlap` is |V(K_1) ∩ V(K_2)| for two-clique
// unions; anything beyond pairwise overlap of two cliques is rejected.
struct CliqueUnion {
  std::vector<CliqueSpec> cliques;
  int overlap = 0;

  bool vertex_disjoint() const { return overlap == 0; }

  // Minimal d with the union realizable inside V_d.
  int dimension() const {
    int d = -overlap;
    for (const CliqueSpec& k : cliques) d += k.order();
    return d;
  }

  void validate() const {
    if (cliques.empty()) throw std::invalid_argument("union needs at least one clique");
    for (const CliqueSpec& k : cliques)
      if (k.weight < 0 || k.slack < 0)
        throw std::invalid_argument("negative weight or slack");
    if (overlap < 0) throw std::invalid_argument("negative overlap");
    if (overlap > 0) {
      if (cliques.size() != 2)
        throw std::invalid_argument("only pairwise overlap supported");
      if (overlap > std::min(cliques[0].order(), cliques[1].order()))
        throw std::invalid_argument("overlap exceeds a clique order");
    }
  }
};

// -------------------- colorings --------------------

// Periodic coloring of the integers: color(n) = colors[n mod period].
struct PeriodicColoring {
  int palette = 2;
  std::vector<std::uint8_t> colors;  // length = period, entries < palette

  int period() const { return static_cast<int>(colors.size()); }

  int color(long long n) const {
    long long p = period();
    long long r = n % p;
    if (r < 0) r += p;
    return colors[static_cast<std::size_t>(r)];
  }

  // Smallest divisor of period() that is itself a period.
  int minimal_period() const {
    int p = period();
    for (int q = 1; q <= p; ++q) {
      if (p % q != 0) continue;
      bool ok = true;
      for (int i = q; i < p && ok; ++i) ok = colors[i] == colors[i - q];
      if (ok) return q;
    }
    return p;
  }
};

// Coloring of the integer interval [offset, offset + size).
struct FiniteColoring {
  int palette = 2;
  long long offset = 0;
  std::vector<std::uint8_t> colors;

  long long size() const { return static_cast<long long>(colors.size()); }
  bool contains(long long n) const { return n >= offset && n < offset + size(); }
  int color(long long n) const { return colors[static_cast<std::size_t>(n - offset)]; }
};

// -------------------- decision certificates --------------------

// Outcome of the translate-Ramsey decision for a family.
//   is_ramsey = false: `witness` holds a verified periodic avoiding coloring.
//   is_ramsey = true:  `n_min` is the exact minimal interval length forcing a
//     monochromatic translate (absent when the window width exceeds 24).
// `n_upper` is the d(t^d+1) forcing-length bound at the unreduced diameter,
// clamped to at least 1 for families of singletons.  `gcd_modulus` records
// the gcd reduction applied.
struct Decision {
  bool is_ramsey = false;
  std::optional<PeriodicColoring> witness;
  std::optional<long long> n_min;
  BigInt n_upper = 0;
  int gcd_modulus = 1;
};

// -------------------- arithmetic helpers --------------------

inline int val2(int a) {
  if (a == 0) throw std::invalid_argument("valuation of zero");
  int r = 0;
  while (a % 2 == 0) {
    a /= 2;
    ++r;
  }
  return r;
}

inline int odd_part(int a) { return a >> val2(a); }

// Sign pattern x_1,...,x_s over {-1,+1}, one entry per clique.
struct SignVector {
  std::vector<int> signs;
};

// 2-adic data for a pair of clique weights: a_i = p_i * 2^{r_i}, p_i odd,
// g = gcd(p_1, p_2).
struct TwoCliqueAnalysis {
  int a1 = 0, t1 = 0, a2 = 0, t2 = 0;
  int r1 = 0, r2 = 0;
  int p1 = 0, p2 = 0;
  int g = 0;

  static TwoCliqueAnalysis of(int a1, int t1, int a2, int t2) {
    if (a1 < 1 || a2 < 1) throw std::invalid_argument("weights must be positive");
    if (t1 < 0 || t2 < 0) throw std::invalid_argument("negative slack");
    TwoCliqueAnalysis x;
    x.a1 = a1;
    x.t1 = t1;
    x.a2 = a2;
    x.t2 = t2;
    x.r1 = val2(a1);
    x.r2 = val2(a2);
    x.p1 = odd_part(a1);
    x.p2 = odd_part(a2);
    x.g = std::gcd(x.p1, x.p2);
    return x;
  }
};

}  // namespace qramsey
