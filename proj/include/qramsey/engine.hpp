#pragma once

// Translate-avoidance decision engine.
//
// A family F of layer sets is t-Ramsey when every t-coloring of ℕ contains a
// monochromatic translate E + k of some E ∈ F.  The engine works on a window
// automaton: a state is a t-coloring of the last d positions (d = largest
// normalized element), encoded base t with digit k holding the color of the
// k-th most recent position.  An edge appends one color and is valid when no
// translate ending at the new position is monochromatic.  After pruning
// states without valid continuations to a fixpoint, survivors exist iff an
// infinite valid coloring exists; a cycle yields a periodic witness, an empty
// graph certifies Ramsey.  Finite colorings are measured on the unpruned
// graph by longest path, which is acyclic exactly in the Ramsey case.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "qramsey/core.hpp"

namespace qramsey {

// Dividing all elements by their gcd preserves the Ramsey verdict: every
// translate of a set stays inside one residue class mod g and the classes
// are colorable independently.  Witnesses lift back by repeating each color
// g times.
struct ReducedProblem {
  SetFamily family;          // normalized antichain of the input
  int palette = 2;
  int gcd_modulus = 1;       // g, the gcd of all elements of all members
  SetFamily reduced_family;  // family with every element divided by g
  int window_width = 0;      // largest diameter after division
};

inline ReducedProblem gcd_reduce(const SetFamily& family, int palette) {
  ReducedProblem r;
  r.family = reduce_family(family);
  r.palette = palette;
  int g = 0;
  for (const LayerSet& s : r.family)
    for (int x : s) g = std::gcd(g, x);
  if (g == 0) g = 1;  // every set is a singleton
  r.gcd_modulus = g;
  for (LayerSet s : r.family) {
    for (int& x : s) x /= g;
    r.window_width = std::max(r.window_width, s.back());
    r.reduced_family.push_back(std::move(s));
  }
  r.reduced_family = canonical_family(std::move(r.reduced_family));
  return r;
}

// d(t^d + 1) with d the largest diameter in the family; no coloring of that
// many consecutive positions can dodge every translate once the family is
// Ramsey, so it bounds n_min from above.
inline BigInt n_t_upper_bound(const SetFamily& family, int palette) {
  if (family.empty()) throw std::invalid_argument("vacuous family");
  if (palette < 2) throw std::invalid_argument("palette needs at least two colors");
  int d = 0;
  for (const LayerSet& s : family) {
    require_nonempty(s);
    d = std::max(d, diameter(s));
  }
  BigInt p = 1;
  for (int i = 0; i < d; ++i) p *= palette;
  return BigInt(d) * (p + 1);
}

// A monochromatic translate: normalized set, its offset, and the color.
struct Violation {
  LayerSet set;
  long long offset = 0;
  int color = 0;
};

// First violation in canonical order (sets ascending, then offset); offsets
// are reported against the normalized sets and scanned over one period,
// which covers every translate of a periodic coloring.
inline std::optional<Violation> verify_coloring(const SetFamily& family,
                                                const PeriodicColoring& c) {
  SetFamily fam;
  for (const LayerSet& s : family) {
    require_nonempty(s);
    fam.push_back(normalize(s));
  }
  fam = canonical_family(std::move(fam));
  for (const LayerSet& e : fam)
    for (long long j = 0; j < c.period(); ++j) {
      int col = c.color(j);
      bool mono = true;
      for (int x : e) mono = mono && c.color(j + x) == col;
      if (mono) return Violation{e, j, col};
    }
  return std::nullopt;
}

// Same check against a finite coloring; only translates that fit entirely in
// the colored range count.
inline std::optional<Violation> verify_coloring(const SetFamily& family,
                                                const FiniteColoring& c) {
  SetFamily fam;
  for (const LayerSet& s : family) {
    require_nonempty(s);
    fam.push_back(normalize(s));
  }
  fam = canonical_family(std::move(fam));
  for (const LayerSet& e : fam) {
    int m = e.back();
    for (long long j = c.offset; j + m < c.offset + c.size(); ++j) {
      int col = c.color(j);
      bool mono = true;
      for (int x : e) mono = mono && c.color(j + x) == col;
      if (mono) return Violation{e, j, col};
    }
  }
  return std::nullopt;
}

struct DecideOptions {
  std::uint64_t max_states = std::uint64_t{1} << 24;
  int prepass_max_period = 8;  // small-period witness scan before the automaton
};

namespace detail {

// Window automaton over the reduced family.  Only valid for d >= 1.
struct WindowAutomaton {
  int palette = 2;
  int width = 0;               // d
  std::uint64_t states = 0;    // palette^width
  std::uint64_t shift = 0;     // palette^(width-1)
  std::vector<std::uint32_t> valid;     // per state: bitmask of valid colors
  std::vector<std::vector<int>> probes; // per set: digit indices below the max
  std::vector<int> maxima;              // per set: largest element

  WindowAutomaton(const SetFamily& fam, int t, std::uint64_t max_states) {
    palette = t;
    for (const LayerSet& e : fam) width = std::max(width, e.back());
    states = 1;
    for (int i = 0; i < width; ++i) {
      states *= static_cast<std::uint64_t>(t);
      if (states > max_states) throw resource_error("state budget exceeded");
    }
    shift = states / static_cast<std::uint64_t>(t);
    for (const LayerSet& e : fam) {
      std::vector<int> pr;
      for (int x : e)
        if (x != e.back()) pr.push_back(e.back() - x - 1);
      probes.push_back(std::move(pr));
      maxima.push_back(e.back());
    }
    build_valid();
  }

  std::uint64_t step(std::uint64_t w, int x) const {
    return (w * palette + x) % states;
  }

  int digit(std::uint64_t w, int k) const {
    for (int i = 0; i < k; ++i) w /= palette;
    return static_cast<int>(w % palette);
  }

  void build_valid() {
    valid.assign(states, 0);
    if (palette == 2) {
      // Bitmask fast path: digit k is bit k of the state.
      std::vector<std::uint64_t> masks;
      for (const auto& pr : probes) {
        std::uint64_t m = 0;
        for (int k : pr) m |= std::uint64_t{1} << k;
        masks.push_back(m);
      }
      for (std::uint64_t w = 0; w < states; ++w) {
        std::uint32_t ok = 0;
        bool bad0 = false, bad1 = false;
        for (std::uint64_t m : masks) {
          bad0 = bad0 || (w & m) == 0;
          bad1 = bad1 || (w & m) == m;
        }
        if (!bad0) ok |= 1u;
        if (!bad1) ok |= 2u;
        valid[w] = ok;
      }
      return;
    }
    for (std::uint64_t w = 0; w < states; ++w) {
      std::uint32_t ok = 0;
      for (int x = 0; x < palette; ++x) {
        bool bad = false;
        for (const auto& pr : probes) {
          bool mono = true;
          for (int k : pr) mono = mono && digit(w, k) == x;
          if (mono) {
            bad = true;
            break;
          }
        }
        if (!bad) ok |= std::uint32_t{1} << x;
      }
      valid[w] = ok;
    }
  }

  // Removes states without valid continuations until none remain dead-ended.
  void prune_forward() {
    std::vector<std::uint64_t> queue;
    for (std::uint64_t w = 0; w < states; ++w)
      if (valid[w] == 0) queue.push_back(w);
    while (!queue.empty()) {
      std::uint64_t w = queue.back();
      queue.pop_back();
      int x = static_cast<int>(w % palette);
      std::uint64_t base = w / palette;
      for (int j = 0; j < palette; ++j) {
        std::uint64_t u = base + shift * j;
        if (valid[u] & (std::uint32_t{1} << x)) {
          valid[u] &= ~(std::uint32_t{1} << x);
          if (valid[u] == 0) queue.push_back(u);
        }
      }
    }
  }

  bool all_dead() const {
    for (std::uint64_t w = 0; w < states; ++w)
      if (valid[w]) return false;
    return true;
  }

  // True when the full window itself contains no monochromatic translate.
  bool init_valid(std::uint64_t w) const {
    for (std::size_t i = 0; i < probes.size(); ++i) {
      int m = maxima[i];
      for (int s = 0; s + m <= width - 1; ++s) {
        int ref = digit(w, s);
        bool mono = true;
        for (int k : probes[i]) mono = mono && digit(w, s + 1 + k) == ref;
        if (mono) return false;
      }
    }
    return true;
  }
};

// Longest path lengths in an acyclic validity graph, iteratively.
inline std::vector<std::int32_t> longest_paths(const WindowAutomaton& a,
                                               const std::vector<std::uint32_t>& valid0) {
  std::vector<std::int32_t> f(a.states, -1);
  std::vector<std::uint8_t> on_stack(a.states, 0);
  std::vector<std::pair<std::uint64_t, int>> stack;  // state, next color
  for (std::uint64_t s = 0; s < a.states; ++s) {
    if (f[s] >= 0) continue;
    stack.push_back({s, 0});
    on_stack[s] = 1;
    while (!stack.empty()) {
      auto& [w, x] = stack.back();
      if (x == a.palette) {
        std::int32_t best = 0;
        for (int c = 0; c < a.palette; ++c)
          if (valid0[w] & (std::uint32_t{1} << c))
            best = std::max(best, 1 + f[a.step(w, c)]);
        f[w] = best;
        on_stack[w] = 0;
        stack.pop_back();
        continue;
      }
      int c = x++;
      if (!(valid0[w] & (std::uint32_t{1} << c))) continue;
      std::uint64_t v = a.step(w, c);
      if (on_stack[v]) throw std::logic_error("unexpected cycle in longest path");
      if (f[v] < 0) {
        stack.push_back({v, 0});
        on_stack[v] = 1;
      }
    }
  }
  return f;
}

// Longest valid coloring shorter than the window, by direct extension.
inline long long longest_short_prefix(const SetFamily& fam, int palette, int limit) {
  std::vector<int> colors;
  long long best = 0;
  std::vector<std::size_t> choice;  // DFS over prefixes
  choice.push_back(0);
  while (!choice.empty()) {
    if (static_cast<int>(colors.size()) >= limit || choice.back() >= static_cast<std::size_t>(palette)) {
      choice.pop_back();
      if (!colors.empty()) colors.pop_back();
      if (!choice.empty()) ++choice.back();
      continue;
    }
    int x = static_cast<int>(choice.back());
    colors.push_back(x);
    long long p = static_cast<long long>(colors.size()) - 1;
    bool ok = true;
    for (const LayerSet& e : fam) {
      long long j = p - e.back();
      if (j < 0) continue;
      bool mono = true;
      for (int v : e) mono = mono && colors[j + v] == x;
      if (mono) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = std::max(best, static_cast<long long>(colors.size()));
      choice.push_back(0);
    } else {
      colors.pop_back();
      ++choice.back();
    }
  }
  return best;
}

// Shortest cycle among surviving states, by breadth-first search from each
// start in ascending order; returns the edge colors around the cycle.
inline std::optional<std::vector<std::uint8_t>> shortest_cycle(const WindowAutomaton& a) {
  std::vector<std::uint64_t> alive;
  for (std::uint64_t w = 0; w < a.states; ++w)
    if (a.valid[w]) alive.push_back(w);
  if (alive.empty()) return std::nullopt;

  auto extract = [&](std::uint64_t start, const std::vector<std::int64_t>& par_state,
                     const std::vector<std::int8_t>& par_color, std::uint64_t last,
                     int closing) {
    std::vector<std::uint8_t> colors;
    colors.push_back(static_cast<std::uint8_t>(closing));
    std::uint64_t cur = last;
    while (cur != start) {
      colors.push_back(static_cast<std::uint8_t>(par_color[cur]));
      cur = static_cast<std::uint64_t>(par_state[cur]);
    }
    std::reverse(colors.begin(), colors.end());
    return colors;
  };

  if (alive.size() <= (std::size_t{1} << 13)) {
    std::vector<std::uint8_t> best;
    std::vector<std::int32_t> dist(a.states);
    std::vector<std::int64_t> par_state(a.states);
    std::vector<std::int8_t> par_color(a.states);
    for (std::uint64_t s : alive) {
      if (best.size() == 2) break;  // cannot beat the minimum period
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::deque<std::uint64_t> q{s};
      while (!q.empty()) {
        std::uint64_t u = q.front();
        q.pop_front();
        std::int32_t nd = dist[u] + 1;
        if (!best.empty() && nd > static_cast<std::int32_t>(best.size())) break;
        for (int x = 0; x < a.palette; ++x) {
          if (!(a.valid[u] & (std::uint32_t{1} << x))) continue;
          std::uint64_t v = a.step(u, x);
          if (v == s) {
            if (best.empty() || nd < static_cast<std::int32_t>(best.size()))
              best = extract(s, par_state, par_color, u, x);
            continue;
          }
          if (dist[v] < 0) {
            dist[v] = nd;
            par_state[v] = static_cast<std::int64_t>(u);
            par_color[v] = static_cast<std::int8_t>(x);
            q.push_back(v);
          }
        }
      }
    }
    if (!best.empty()) return best;
  }

  // Too many survivors for an all-pairs search: walk the lowest valid edge
  // until a state repeats and cut the cycle out of the walk.
  std::map<std::uint64_t, std::size_t> seen;
  std::vector<int> walk_colors;
  std::uint64_t cur = alive.front();
  for (;;) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      std::vector<std::uint8_t> colors(walk_colors.begin() + it->second,
                                       walk_colors.end());
      return colors;
    }
    seen[cur] = walk_colors.size();
    int x = 0;
    while (!(a.valid[cur] & (std::uint32_t{1} << x))) ++x;
    walk_colors.push_back(x);
    cur = a.step(cur, x);
  }
}

inline PeriodicColoring lift_by_modulus(const PeriodicColoring& w, int g) {
  if (g <= 1) return w;
  PeriodicColoring out;
  out.palette = w.palette;
  for (int i = 0; i < g * w.period(); ++i)
    out.colors.push_back(w.colors[(i / g) % w.period()]);
  return out;
}

inline PeriodicColoring to_minimal_period(const PeriodicColoring& w) {
  int q = w.minimal_period();
  PeriodicColoring out;
  out.palette = w.palette;
  out.colors.assign(w.colors.begin(), w.colors.begin() + q);
  return out;
}

}  // namespace detail

inline Decision decide(const SetFamily& family, int palette,
                       const DecideOptions& opts = {}) {
  if (family.empty()) throw std::invalid_argument("vacuous family");
  if (palette < 2) throw std::invalid_argument("palette needs at least two colors");
  for (const LayerSet& s : family) require_nonempty(s);

  Decision dec;
  ReducedProblem rp = gcd_reduce(family, palette);
  dec.n_upper = std::max<BigInt>(n_t_upper_bound(rp.family, palette), 1);
  dec.gcd_modulus = rp.gcd_modulus;
  const SetFamily& fam = rp.reduced_family;

  if (fam.front().size() == 1) {
    // A singleton absorbs every other member during reduction, and any
    // single position is a monochromatic copy of it.
    dec.is_ramsey = true;
    dec.n_min = 1;
    return dec;
  }

  // Small-period scan: a verified periodic coloring settles the negative
  // case without building the automaton.
  for (int p = 1; p <= opts.prepass_max_period; ++p) {
    std::uint64_t total = 1;
    bool overflow = false;
    for (int i = 0; i < p; ++i) {
      total *= static_cast<std::uint64_t>(palette);
      if (total > (std::uint64_t{1} << 24)) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
    for (std::uint64_t v = 0; v < total; ++v) {
      PeriodicColoring c;
      c.palette = palette;
      std::uint64_t rem = v;
      c.colors.assign(p, 0);
      for (int i = p - 1; i >= 0; --i) {
        c.colors[i] = static_cast<std::uint8_t>(rem % palette);
        rem /= palette;
      }
      if (c.minimal_period() < p) continue;
      if (!verify_coloring(fam, c)) {
        PeriodicColoring lifted = detail::lift_by_modulus(c, rp.gcd_modulus);
        if (verify_coloring(family, lifted))
          throw std::logic_error("witness lift failed verification");
        dec.is_ramsey = false;
        dec.witness = std::move(lifted);
        return dec;
      }
    }
  }

  detail::WindowAutomaton aut(fam, palette, opts.max_states);
  std::vector<std::uint32_t> valid0 = aut.valid;  // unpruned copy for lengths
  aut.prune_forward();

  if (!aut.all_dead()) {
    auto cycle = detail::shortest_cycle(aut);
    PeriodicColoring w;
    w.palette = palette;
    w.colors = *cycle;
    w = detail::to_minimal_period(w);
    PeriodicColoring lifted = detail::lift_by_modulus(w, rp.gcd_modulus);
    if (verify_coloring(family, lifted))
      throw std::logic_error("witness lift failed verification");
    dec.is_ramsey = false;
    dec.witness = std::move(lifted);
    return dec;
  }

  dec.is_ramsey = true;
  if (aut.width <= 24) {
    std::vector<std::int32_t> f = detail::longest_paths(aut, valid0);
    long long longest = -1;
    for (std::uint64_t w = 0; w < aut.states; ++w)
      if (aut.init_valid(w))
        longest = std::max(longest, static_cast<long long>(aut.width) + f[w]);
    if (longest < 0)
      longest = detail::longest_short_prefix(fam, palette, aut.width - 1);
    dec.n_min = static_cast<long long>(rp.gcd_modulus) * longest + 1;
  }
  return dec;
}

struct WitnessOptions {
  std::uint64_t max_states = std::uint64_t{1} << 24;
  std::uint64_t max_steps = std::uint64_t{1} << 26;
};

// Witness classes with lifted minimal period at most max_period, up to
// rotation and color renaming (reflections are distinct).  Residue classes
// mod the family gcd never constrain one another, so arbitrary interleavings
// of avoiding colorings would make every class infinitely degenerate at the
// original scale; classes are therefore enumerated on the divided family and
// each is reported as its block lift, every color repeated gcd times, rotated
// to the lexicographically least first-occurrence renaming.
inline std::vector<PeriodicColoring> enumerate_witnesses(const SetFamily& family,
                                                         int palette, int max_period,
                                                         const WitnessOptions& opts = {}) {
  if (family.empty()) throw std::invalid_argument("vacuous family");
  if (palette < 2) throw std::invalid_argument("palette needs at least two colors");
  if (max_period < 1) throw std::invalid_argument("period bound must be positive");
  ReducedProblem rp = gcd_reduce(family, palette);
  const SetFamily& fam = rp.reduced_family;
  if (fam.front().size() == 1) return {};
  // A lifted cycle of length q has minimal period gcd*q, and no valid edge is
  // a self-loop, so nothing fits unless at least two reduced steps do.
  const int reduced_max = max_period / rp.gcd_modulus;
  if (reduced_max < 2) return {};

  detail::WindowAutomaton aut(fam, palette, opts.max_states);
  aut.prune_forward();

  // Backward trim: drop states that no surviving edge enters, so the walk
  // search below starts only from states that can sit on cycles.
  std::vector<std::uint32_t> indeg(aut.states, 0);
  for (std::uint64_t w = 0; w < aut.states; ++w)
    if (aut.valid[w])
      for (int x = 0; x < palette; ++x)
        if (aut.valid[w] & (std::uint32_t{1} << x)) ++indeg[aut.step(w, x)];
  std::vector<std::uint64_t> queue;
  for (std::uint64_t w = 0; w < aut.states; ++w)
    if (aut.valid[w] && indeg[w] == 0) queue.push_back(w);
  while (!queue.empty()) {
    std::uint64_t w = queue.back();
    queue.pop_back();
    std::uint32_t out = aut.valid[w];
    aut.valid[w] = 0;
    for (int x = 0; x < palette; ++x) {
      if (!(out & (std::uint32_t{1} << x))) continue;
      std::uint64_t v = aut.step(w, x);
      if (--indeg[v] == 0 && aut.valid[v]) queue.push_back(v);
    }
    // A successor that lost its last incoming edge is queued above; states
    // that lose outgoing edges are impossible here since w had none removed.
  }

  // Closed walks from each start, intermediates restricted to states >= the
  // start so each cycle is explored from its least window only.
  std::set<std::vector<std::uint8_t>> canon;
  std::uint64_t steps = 0;
  std::vector<std::uint8_t> colors;
  struct Frame {
    std::uint64_t state;
    int next_color;
  };
  std::vector<Frame> stack;
  auto canonical = [&](const std::vector<std::uint8_t>& seq) {
    int n = static_cast<int>(seq.size());
    int q = n;
    for (int cand = 1; cand < n; ++cand) {
      if (n % cand) continue;
      bool per = true;
      for (int i = 0; i < n; ++i) per = per && seq[i] == seq[i % cand];
      if (per) {
        q = cand;
        break;
      }
    }
    std::vector<std::uint8_t> best;
    for (int r = 0; r < q; ++r) {
      std::vector<std::uint8_t> rel(q);
      std::vector<int> name(palette, -1);
      int next = 0;
      for (int i = 0; i < q; ++i) {
        int c = seq[(r + i) % q];
        if (name[c] < 0) name[c] = next++;
        rel[i] = static_cast<std::uint8_t>(name[c]);
      }
      if (best.empty() || rel < best) best = std::move(rel);
    }
    return best;
  };
  for (std::uint64_t s = 0; s < aut.states; ++s) {
    if (!aut.valid[s]) continue;
    stack.clear();
    colors.clear();
    stack.push_back({s, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next_color == palette) {
        stack.pop_back();
        if (!colors.empty()) colors.pop_back();
        continue;
      }
      int x = fr.next_color++;
      if (!(aut.valid[fr.state] & (std::uint32_t{1} << x))) continue;
      if (++steps > opts.max_steps)
        throw resource_error("witness enumeration budget exceeded");
      std::uint64_t v = aut.step(fr.state, x);
      if (v < s) continue;
      colors.push_back(static_cast<std::uint8_t>(x));
      if (v == s) canon.insert(canonical(colors));
      if (static_cast<int>(colors.size()) < reduced_max)
        stack.push_back({v, 0});
      else
        colors.pop_back();
    }
  }

  std::vector<PeriodicColoring> out;
  for (const auto& seq : canon) {
    PeriodicColoring w;
    w.palette = palette;
    w.colors = seq;
    // Lifting repeats each color in place, so runs still start the least
    // rotation and the lift of the least representative stays least.
    out.push_back(detail::lift_by_modulus(w, rp.gcd_modulus));
  }
  std::sort(out.begin(), out.end(), [](const PeriodicColoring& a, const PeriodicColoring& b) {
    if (a.colors.size() != b.colors.size()) return a.colors.size() < b.colors.size();
    return a.colors < b.colors;
  });
  return out;
}

}  // namespace qramsey
