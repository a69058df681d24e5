#pragma once

// Vertex-level oracle for the cube: explicit realizations of clique unions,
// brute-force weight families over all simple automorphisms, and direct
// searches for monochromatic copies and layered subcubes.  Everything here
// is independent of the layer-interval machinery so the two sides can be
// cross-checked against each other.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>

#include "qramsey/core.hpp"
#include "qramsey/text.hpp"

namespace qramsey {

// Subset of V_n, vertices as coordinate bitmasks, sorted.
struct VertexSet {
  int n = 0;
  std::vector<std::uint32_t> vertices;
};

inline VertexSet make_vertex_set(int n, std::vector<std::uint32_t> vs) {
  if (n < 0 || n > 31) throw std::invalid_argument("cube dimension out of range");
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (!vs.empty() && vs.back() >= (std::uint32_t{1} << n))
    throw std::invalid_argument("vertex outside cube");
  return VertexSet{n, std::move(vs)};
}

// Canonical realization: clique i owns a block of consecutive coordinates
// (overlapping pairs share the last c coordinates of the first block) and
// contributes all masks with exactly weight_i bits inside its block.
inline VertexSet realize_union(const CliqueUnion& u) {
  u.validate();
  int n = u.dimension();
  if (n > 31) throw resource_error("cube dimension budget exceeded");
  std::vector<std::uint32_t> verts;
  int start = 0;
  for (std::size_t i = 0; i < u.cliques.size(); ++i) {
    if (i == 1 && u.overlap > 0) start -= u.overlap;
    int order = u.cliques[i].order();
    int a = u.cliques[i].weight;
    if (a == 0) {
      verts.push_back(0);
    } else {
      // Gosper's hack walks the weight-a masks of the block in ascending order.
      std::uint32_t m = (std::uint32_t{1} << a) - 1;
      std::uint32_t limit = std::uint32_t{1} << order;
      while (m < limit) {
        verts.push_back(m << start);
        std::uint32_t c = m & -m;
        std::uint32_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
      }
    }
    start += order;
  }
  return make_vertex_set(n, std::move(verts));
}

inline VertexSet embed_in_dimension(const VertexSet& s, int n) {
  if (n < s.n) throw std::invalid_argument("dimension too small");
  return make_vertex_set(n, s.vertices);
}

// ψ_B: XOR every vertex with the flip mask B.
inline VertexSet simple_automorphism_image(const VertexSet& s, std::uint32_t b) {
  if (s.n < 31 && b >= (std::uint32_t{1} << s.n))
    throw std::invalid_argument("flip outside cube");
  std::vector<std::uint32_t> out;
  for (std::uint32_t v : s.vertices) out.push_back(v ^ b);
  return make_vertex_set(s.n, std::move(out));
}

inline LayerSet weight_set(const VertexSet& s) {
  std::vector<int> w;
  for (std::uint32_t v : s.vertices) w.push_back(std::popcount(v));
  return make_layer_set(std::move(w));
}

// W(S) by enumerating every simple automorphism directly.
inline SetFamily brute_force_w_star(const VertexSet& s) {
  if (s.vertices.empty()) throw std::invalid_argument("empty vertex set");
  if (s.n > 20) throw resource_error("cube dimension budget exceeded");
  SetFamily fam;
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << s.n); ++b) {
    std::vector<int> w;
    for (std::uint32_t v : s.vertices) w.push_back(std::popcount(v ^ b));
    fam.push_back(make_layer_set(std::move(w)));
  }
  return canonical_family(std::move(fam));
}

// -------------------- colored cubes --------------------

// Coloring of all of V_n; colors indexed by vertex mask.
struct CubeColoring {
  int n = 0;
  int palette = 2;
  std::vector<std::uint8_t> colors;  // size 2^n

  int color(std::uint32_t v) const { return colors[v]; }
};

inline CubeColoring layered_coloring(const std::vector<std::uint8_t>& layer_colors,
                                     int n, int palette) {
  if (n < 0 || n > 20) throw std::invalid_argument("cube dimension out of range");
  if (layer_colors.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("need one color per layer");
  CubeColoring c;
  c.n = n;
  c.palette = palette;
  c.colors.resize(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
    c.colors[v] = layer_colors[std::popcount(v)];
  return c;
}

inline std::string format_cube_coloring(const CubeColoring& c) {
  std::string out;
  for (std::uint8_t col : c.colors) out.push_back(color_char(col, c.palette));
  return out;
}

inline CubeColoring parse_cube_coloring(const std::string& text) {
  if (text.empty()) throw parse_error("empty cube coloring", 0);
  if ((text.size() & (text.size() - 1)) != 0)
    throw parse_error("coloring length must be a power of two", 0);
  CubeColoring c;
  c.n = std::countr_zero(text.size());
  bool digits = false;
  int maxc = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    int col = color_of_char(text[i], i);
    digits = digits || (text[i] != 'R' && text[i] != 'B');
    maxc = std::max(maxc, col);
    c.colors.push_back(static_cast<std::uint8_t>(col));
  }
  c.palette = digits ? std::max(2, maxc + 1) : 2;
  return c;
}

// -------------------- monochromatic copy search --------------------

// An embedded copy: v in V_d maps to base | scatter(perm(v) ^ flip), where
// bit i of perm(v) is bit perm[i] of v and scatter routes bit i to
// coordinate free_coords[i].
struct CopyWitness {
  std::vector<int> free_coords;
  std::uint32_t base = 0;
  std::uint32_t flip = 0;
  std::vector<int> perm;
  int color = 0;
};

inline std::uint32_t apply_copy_map(const CopyWitness& w, std::uint32_t v) {
  std::uint32_t p = 0;
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    if (v & (std::uint32_t{1} << w.perm[i])) p |= std::uint32_t{1} << i;
  p ^= w.flip;
  std::uint32_t out = w.base;
  for (std::size_t i = 0; i < w.free_coords.size(); ++i)
    if (p & (std::uint32_t{1} << i)) out |= std::uint32_t{1} << w.free_coords[i];
  return out;
}

// First monochromatic embedded copy of the union, scanning free-coordinate
// sets lexicographically, then bases, colors, flips, and permutations.
inline std::optional<CopyWitness> find_monochromatic_copy(const CubeColoring& col,
                                                          const CliqueUnion& u) {
  u.validate();
  int d = u.dimension();
  int n = col.n;
  if (col.colors.size() != (std::size_t{1} << n))
    throw std::invalid_argument("coloring size mismatch");
  if (d > 6) throw resource_error("embedding dimension budget exceeded");
  if (n > 10) throw resource_error("cube dimension budget exceeded");
  if (col.palette > 16) throw std::invalid_argument("palette too large for copy search");
  if (d > n) return std::nullopt;

  VertexSet s = realize_union(u);

  // All coordinate permutations of V_d, tabulated.
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<std::uint32_t>> ptab;
  do {
    std::vector<std::uint32_t> tab(std::size_t{1} << d, 0);
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << d); ++v)
      for (int i = 0; i < d; ++i)
        if (v & (std::uint32_t{1} << idx[i])) tab[v] |= std::uint32_t{1} << i;
    perms.push_back(idx);
    ptab.push_back(std::move(tab));
  } while (std::next_permutation(idx.begin(), idx.end()));

  // Flips factor through permutations as perm(v) ^ flip = perm(v ^ pre) with
  // flip = perm(pre), so iterating (pre, perm) covers every (flip, perm)
  // pair while exposing a permutation-independent weight profile per pre.
  std::size_t cube = std::size_t{1} << d;
  std::vector<std::vector<std::uint32_t>> pre_images(cube);
  std::vector<std::array<std::uint8_t, 7>> pre_hist(cube);
  for (std::uint32_t pre = 0; pre < cube; ++pre) {
    pre_hist[pre].fill(0);
    for (std::uint32_t v : s.vertices) {
      std::uint32_t u = v ^ pre;
      pre_images[pre].push_back(u);
      ++pre_hist[pre][std::popcount(u)];
    }
  }

  std::vector<int> free_coords(d);
  for (int i = 0; i < d; ++i) free_coords[i] = i;
  std::vector<std::uint32_t> scatter(cube);
  std::vector<std::uint8_t> sub(cube);
  for (;;) {
    for (std::uint32_t v = 0; v < cube; ++v) {
      std::uint32_t m = 0;
      for (int i = 0; i < d; ++i)
        if (v & (std::uint32_t{1} << i)) m |= std::uint32_t{1} << free_coords[i];
      scatter[v] = m;
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (std::find(free_coords.begin(), free_coords.end(), i) == free_coords.end())
        rest.push_back(i);
    for (std::uint32_t bc = 0; bc < (std::uint32_t{1} << rest.size()); ++bc) {
      std::uint32_t base = 0;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (bc & (std::uint32_t{1} << i)) base |= std::uint32_t{1} << rest[i];
      // Color counts of this subcube, split by weight: a permutation can
      // only match a pre-image profile the subcube has room for.
      std::array<std::array<std::uint8_t, 7>, 16> cnt{};
      for (std::uint32_t v = 0; v < cube; ++v) {
        sub[v] = col.colors[base | scatter[v]];
        ++cnt[sub[v]][std::popcount(v)];
      }
      for (int c = 0; c < col.palette; ++c)
        for (std::uint32_t pre = 0; pre < cube; ++pre) {
          bool feasible = true;
          for (int k = 0; k <= d; ++k)
            feasible = feasible && cnt[c][k] >= pre_hist[pre][k];
          if (!feasible) continue;
          for (std::size_t pi = 0; pi < perms.size(); ++pi) {
            bool mono = true;
            for (std::uint32_t u : pre_images[pre]) {
              if (sub[ptab[pi][u]] != c) {
                mono = false;
                break;
              }
            }
            if (mono)
              return CopyWitness{free_coords, base, ptab[pi][pre], perms[pi], c};
          }
        }
    }
    // next lexicographic d-combination of [0, n)
    int i = d - 1;
    while (i >= 0 && free_coords[i] == n - d + i) --i;
    if (i < 0) break;
    ++free_coords[i];
    for (int j = i + 1; j < d; ++j) free_coords[j] = free_coords[j - 1] + 1;
  }
  return std::nullopt;
}

inline bool contains_monochromatic_copy(const CubeColoring& col, const CliqueUnion& u) {
  return find_monochromatic_copy(col, u).has_value();
}

// -------------------- layered subcubes --------------------

// Axis subcube base | span(free_coords) whose colors depend only on the
// Hamming distance from the corner base ^ scatter(flip).
struct SubcubeWitness {
  std::vector<int> free_coords;
  std::uint32_t base = 0;
  std::uint32_t flip = 0;
};

inline std::optional<SubcubeWitness> find_layered_subcube(const CubeColoring& col,
                                                          int s) {
  int n = col.n;
  if (col.colors.size() != (std::size_t{1} << n))
    throw std::invalid_argument("coloring size mismatch");
  if (s < 0 || s > 3) throw resource_error("subcube dimension budget exceeded");
  if (n > 10) throw resource_error("cube dimension budget exceeded");
  if (s > n) return std::nullopt;

  std::vector<int> free_coords(s);
  for (int i = 0; i < s; ++i) free_coords[i] = i;
  for (;;) {
    std::vector<std::uint32_t> scatter(std::size_t{1} << s);
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << s); ++v) {
      std::uint32_t m = 0;
      for (int i = 0; i < s; ++i)
        if (v & (std::uint32_t{1} << i)) m |= std::uint32_t{1} << free_coords[i];
      scatter[v] = m;
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (std::find(free_coords.begin(), free_coords.end(), i) == free_coords.end())
        rest.push_back(i);
    for (std::uint32_t bc = 0; bc < (std::uint32_t{1} << rest.size()); ++bc) {
      std::uint32_t base = 0;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (bc & (std::uint32_t{1} << i)) base |= std::uint32_t{1} << rest[i];
      for (std::uint32_t flip = 0; flip < (std::uint32_t{1} << s); ++flip) {
        int layer_color[4] = {-1, -1, -1, -1};
        bool ok = true;
        for (std::uint32_t v = 0; ok && v < (std::uint32_t{1} << s); ++v) {
          int k = std::popcount(v ^ flip);
          int c = col.colors[base | scatter[v]];
          if (layer_color[k] < 0)
            layer_color[k] = c;
          else
            ok = layer_color[k] == c;
        }
        if (ok) return SubcubeWitness{free_coords, base, flip};
      }
    }
    int i = s - 1;
    while (i >= 0 && free_coords[i] == n - s + i) --i;
    if (i < 0) break;
    ++free_coords[i];
    for (int j = i + 1; j < s; ++j) free_coords[j] = free_coords[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace qramsey
