#pragma once

// Textual grammars shared by the CLI and the test suite.
//   union    := clique ("," clique)*        clique := WEIGHT ":" SLACK
//   layerset := "{" INT ("," INT)* "}"
//   family   := layerset (";" layerset)*
//   coloring := "period=" P ":" SEQ         SEQ over {R,B} or digits
// All parsers throw parse_error with the byte offset on malformed input.

#include <cctype>
#include <cstdint>
#include <string>

#include "qramsey/core.hpp"

namespace qramsey {

namespace detail {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long integer() {
    std::size_t start = pos;
    bool neg = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected integer", pos);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000LL) throw parse_error("integer too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }

  void end() {
    if (!done()) throw parse_error("trailing input", pos);
  }
};

}  // namespace detail

// -------------------- clique unions --------------------

inline CliqueUnion parse_union(const std::string& text, int overlap = 0) {
  detail::Scanner sc{text};
  CliqueUnion u;
  u.overlap = overlap;
  for (;;) {
    CliqueSpec k;
    k.weight = static_cast<int>(sc.integer());
    sc.expect(':');
    k.slack = static_cast<int>(sc.integer());
    u.cliques.push_back(k);
    if (!sc.accept(',')) break;
  }
  sc.end();
  u.validate();
  return u;
}

inline std::string format_union(const CliqueUnion& u) {
  std::string out;
  for (std::size_t i = 0; i < u.cliques.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(u.cliques[i].weight) + ':' +
           std::to_string(u.cliques[i].slack);
  }
  return out;
}

// -------------------- layer sets and families --------------------

inline LayerSet parse_layer_set_at(detail::Scanner& sc) {
  sc.expect('{');
  std::vector<int> v;
  for (;;) {
    v.push_back(static_cast<int>(sc.integer()));
    if (!sc.accept(',')) break;
  }
  sc.expect('}');
  LayerSet ls = make_layer_set(std::move(v));
  return ls;
}

inline LayerSet parse_layer_set(const std::string& text) {
  detail::Scanner sc{text};
  LayerSet ls = parse_layer_set_at(sc);
  sc.end();
  return ls;
}

inline std::string format_layer_set(const LayerSet& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ls[i]);
  }
  out += '}';
  return out;
}

inline SetFamily parse_family(const std::string& text) {
  detail::Scanner sc{text};
  SetFamily fam;
  for (;;) {
    fam.push_back(parse_layer_set_at(sc));
    if (!sc.accept(';')) break;
  }
  sc.end();
  return canonical_family(std::move(fam));
}

inline std::string format_family(const SetFamily& fam) {
  std::string out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) out += ';';
    out += format_layer_set(fam[i]);
  }
  return out;
}

// -------------------- colorings --------------------

// Colors are 0-based internally; text uses R=0, B=1 for two colors and
// digits otherwise.
inline char color_char(int color, int palette) {
  if (palette == 2) return color == 0 ? 'R' : 'B';
  if (color > 9) throw std::invalid_argument("textual palette limited to 10 colors");
  return static_cast<char>('0' + color);
}

inline int color_of_char(char c, std::size_t pos) {
  if (c == 'R') return 0;
  if (c == 'B') return 1;
  if (c >= '0' && c <= '9') return c - '0';
  throw parse_error("expected color character", pos);
}

inline PeriodicColoring parse_coloring_line(const std::string& text) {
  const std::string prefix = "period=";
  if (text.compare(0, prefix.size(), prefix) != 0)
    throw parse_error("expected 'period='", 0);
  detail::Scanner sc{text};
  sc.pos = prefix.size();
  long long p = sc.integer();
  if (p < 1) throw parse_error("period must be positive", prefix.size());
  sc.expect(':');
  PeriodicColoring c;
  bool digits = false;
  int maxc = 1;
  for (long long i = 0; i < p; ++i) {
    if (sc.done()) throw parse_error("coloring shorter than period", sc.pos);
    int col = color_of_char(sc.s[sc.pos], sc.pos);
    digits = digits || (sc.s[sc.pos] != 'R' && sc.s[sc.pos] != 'B');
    maxc = std::max(maxc, col);
    c.colors.push_back(static_cast<std::uint8_t>(col));
    ++sc.pos;
  }
  sc.end();
  c.palette = digits ? std::max(2, maxc + 1) : 2;
  return c;
}

inline std::string format_coloring_line(const PeriodicColoring& c) {
  std::string out = "period=" + std::to_string(c.period()) + ":";
  for (std::uint8_t col : c.colors) out += color_char(col, c.palette);
  return out;
}

inline std::string format_colors(const std::vector<std::uint8_t>& colors, int palette) {
  std::string out;
  for (std::uint8_t col : colors) out += color_char(col, palette);
  return out;
}

}  // namespace qramsey
