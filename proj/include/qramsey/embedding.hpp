#pragma once

// Layer-set families reachable by coordinate flips of a clique union.
//
// A flip mask B with b_i = |B ∩ V(K_i)| and |B| = b sends clique K_i into
// the step-2 layer interval
//     D_i = [max(a_i - 2 b_i, -a_i), min(a_i, a_i + 2 (t_i - b_i))]_2 + b
// and the union into E(b; b_1..b_s) = ∪_i D_i.  W*(S) collects the E sets
// over all masks at the minimal dimension; W'(S) is its normalized
// inclusion-minimal reduction; P*/P' restrict to principal flips
// (b_i ∈ {0, order_i}, every clique lands in one layer).

#include <vector>

#include "qramsey/core.hpp"

namespace qramsey {

// Flip counts of one mask: total b, per-clique b_i, and the number of
// flipped coordinates outside every clique.
struct FlipProfile {
  int b = 0;
  std::vector<int> per_clique;
  int outside = 0;
};

inline LayerSet clique_layer_interval(int a, int t, int b_i, int b) {
  if (a < 0 || t < 0) throw std::invalid_argument("negative weight or slack");
  if (b_i < 0 || b_i > a + t) throw std::invalid_argument("flip count outside [0, order]");
  if (b < b_i) throw std::invalid_argument("total flips below clique flips");
  int lo = std::max(a - 2 * b_i, -a);
  int hi = std::min(a, a + 2 * (t - b_i));
  LayerSet out;
  for (int x = lo; x <= hi; x += 2) out.push_back(x + b);
  return out;  // nonempty: lo <= hi whenever 0 <= b_i <= a + t
}

namespace detail {

// Validates that fp can arise from an actual mask on u and returns nothing.
inline void check_profile(const CliqueUnion& u, const FlipProfile& fp) {
  u.validate();
  if (fp.per_clique.size() != u.cliques.size())
    throw std::invalid_argument("profile arity mismatch");
  if (fp.outside < 0) throw std::invalid_argument("negative outside flips");
  for (std::size_t i = 0; i < u.cliques.size(); ++i) {
    int bi = fp.per_clique[i];
    if (bi < 0 || bi > u.cliques[i].order())
      throw std::invalid_argument("flip count outside [0, order]");
  }
  if (u.vertex_disjoint()) {
    long long sum = fp.outside;
    for (int bi : fp.per_clique) sum += bi;
    if (sum != fp.b) throw std::invalid_argument("inconsistent total flip count");
  } else {
    // Two overlapping cliques: b_i = x_i + o with o flips among the c shared
    // coordinates; o is determined by b = x_1 + x_2 + o + outside.
    int c = u.overlap;
    int b1 = fp.per_clique[0], b2 = fp.per_clique[1];
    long long o = static_cast<long long>(b1) + b2 + fp.outside - fp.b;
    int x1max = u.cliques[0].order() - c;
    int x2max = u.cliques[1].order() - c;
    if (o < 0 || o > c || b1 - o < 0 || b1 - o > x1max || b2 - o < 0 ||
        b2 - o > x2max)
      throw std::invalid_argument("inconsistent overlap profile");
  }
}

}  // namespace detail

inline LayerSet embedding_layers(const CliqueUnion& u, const FlipProfile& fp) {
  detail::check_profile(u, fp);
  std::vector<int> layers;
  for (std::size_t i = 0; i < u.cliques.size(); ++i) {
    LayerSet d = clique_layer_interval(u.cliques[i].weight, u.cliques[i].slack,
                                       fp.per_clique[i], fp.b);
    layers.insert(layers.end(), d.begin(), d.end());
  }
  return make_layer_set(std::move(layers));
}

// All profiles of vertex-disjoint masks with up to `extra` flips outside the
// cliques, in lexicographic (b_1..b_s, outside) order.
inline std::vector<FlipProfile> enumerate_disjoint_profiles(const CliqueUnion& u,
                                                            int extra) {
  std::vector<FlipProfile> out;
  std::vector<int> bi(u.cliques.size(), 0);
  for (;;) {
    for (int outside = 0; outside <= extra; ++outside) {
      FlipProfile fp;
      fp.per_clique = bi;
      fp.outside = outside;
      fp.b = outside;
      for (int x : bi) fp.b += x;
      out.push_back(std::move(fp));
    }
    std::size_t i = bi.size();
    while (i > 0 && bi[i - 1] == u.cliques[i - 1].order()) bi[--i] = 0;
    if (i == 0) break;
    ++bi[i - 1];
  }
  return out;
}

// Profiles of masks on a two-clique overlapping union: o flips among the c
// shared coordinates, x_i flips exclusive to clique i, so b_i = x_i + o and
// b = x_1 + x_2 + o + outside.  Deduplicated on (b_1, b_2, b).
inline std::vector<FlipProfile> enumerate_overlap_profiles(const CliqueUnion& u,
                                                           int extra = 0) {
  u.validate();
  if (u.cliques.size() != 2 || u.overlap < 1)
    throw std::invalid_argument("only pairwise overlap supported");
  int c = u.overlap;
  int x1max = u.cliques[0].order() - c;
  int x2max = u.cliques[1].order() - c;
  std::vector<FlipProfile> out;
  std::vector<std::vector<int>> seen;  // (b1, b2, b) triples
  for (int b1 = 0; b1 <= u.cliques[0].order(); ++b1)
    for (int b2 = 0; b2 <= u.cliques[1].order(); ++b2)
      for (int o = 0; o <= c; ++o) {
        int x1 = b1 - o, x2 = b2 - o;
        if (x1 < 0 || x1 > x1max || x2 < 0 || x2 > x2max) continue;
        for (int outside = 0; outside <= extra; ++outside) {
          FlipProfile fp;
          fp.per_clique = {b1, b2};
          fp.outside = outside;
          fp.b = x1 + x2 + o + outside;
          std::vector<int> key = {b1, b2, fp.b};
          bool dup = false;
          for (const auto& k : seen) dup = dup || k == key;
          if (dup) continue;
          seen.push_back(key);
          out.push_back(std::move(fp));
        }
      }
  return out;
}

inline std::vector<FlipProfile> enumerate_profiles(const CliqueUnion& u, int extra) {
  u.validate();
  if (extra < 0) throw std::invalid_argument("dimension below minimal");
  return u.vertex_disjoint() ? enumerate_disjoint_profiles(u, extra)
                             : enumerate_overlap_profiles(u, extra);
}

// A layer set together with the first profile achieving it.
struct ProfiledSet {
  LayerSet layers;
  FlipProfile profile;
};

inline std::vector<ProfiledSet> w_star_profiled(const CliqueUnion& u, int dim) {
  u.validate();
  int extra = dim - u.dimension();
  if (extra < 0) throw std::invalid_argument("dimension below minimal");
  std::vector<ProfiledSet> out;
  for (const FlipProfile& fp : enumerate_profiles(u, extra)) {
    LayerSet e = embedding_layers(u, fp);
    bool dup = false;
    for (const ProfiledSet& ps : out) dup = dup || ps.layers == e;
    if (!dup) out.push_back({std::move(e), fp});
  }
  std::sort(out.begin(), out.end(), [](const ProfiledSet& a, const ProfiledSet& b) {
    return family_order(a.layers, b.layers);
  });
  return out;
}

inline SetFamily w_star_at(const CliqueUnion& u, int dim) {
  SetFamily fam;
  for (const ProfiledSet& ps : w_star_profiled(u, dim)) fam.push_back(ps.layers);
  return fam;  // already canonical
}

inline SetFamily w_star(const CliqueUnion& u) { return w_star_at(u, u.dimension()); }

inline SetFamily w_prime(const CliqueUnion& u) { return reduce_family(w_star(u)); }

// Principal masks only (each b_i ∈ {0, order_i}), no outside flips.
inline SetFamily p_star(const CliqueUnion& u) {
  u.validate();
  SetFamily fam;
  for (const FlipProfile& fp : enumerate_profiles(u, 0)) {
    bool principal = true;
    for (std::size_t i = 0; i < u.cliques.size(); ++i)
      principal = principal && (fp.per_clique[i] == 0 ||
                                fp.per_clique[i] == u.cliques[i].order());
    if (principal) fam.push_back(embedding_layers(u, fp));
  }
  return canonical_family(std::move(fam));
}

// Members of W'(S) that are translates of P*(S) members.
inline SetFamily p_prime(const CliqueUnion& u) {
  SetFamily wp = w_prime(u);
  SetFamily pn;
  for (const LayerSet& t : p_star(u)) pn.push_back(normalize(t));
  pn = canonical_family(std::move(pn));
  SetFamily out;
  for (const LayerSet& x : wp)
    if (std::binary_search(pn.begin(), pn.end(), x,
                           [](const LayerSet& a, const LayerSet& b) {
                             return family_order(a, b);
                           }))
      out.push_back(x);
  return out;
}

// Minimum number of layers an embedded copy of the union can occupy.
inline int min_layers(const CliqueUnion& u) {
  SetFamily wp = w_prime(u);
  std::size_t best = wp.front().size();
  for (const LayerSet& x : wp) best = std::min(best, x.size());
  return static_cast<int>(best);
}

}  // namespace qramsey
