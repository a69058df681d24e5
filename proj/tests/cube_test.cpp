// Hypercube ground truth: explicit vertex sets, simple automorphisms,
// brute-force layer-set enumeration, copy search, layered subcubes.

#include "qramsey/cube.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qramsey/embedding.hpp"
#include "qramsey/text.hpp"

namespace qramsey {
namespace {

LayerSet ls(std::vector<int> v) { return make_layer_set(std::move(v)); }

int hamming(std::uint32_t a, std::uint32_t b) { return std::popcount(a ^ b); }

// -------------------- realize_union --------------------

TEST(RealizeUnionTest, WeightThreeCliquePlusLoneVertex) {
  // K_4^{(3)} on coords 0..3 plus a single weight-1 vertex on coord 4.
  VertexSet s = realize_union(parse_union("3:1,1:0"));
  EXPECT_EQ(s.n, 5);
  std::vector<std::uint32_t> expect = {0b00111, 0b01011, 0b01101, 0b01110,
                                       0b10000};
  EXPECT_EQ(s.vertices, expect);
  EXPECT_EQ(weight_set(s), ls({1, 3}));
}

TEST(RealizeUnionTest, TriangleAndOverlapLayouts) {
  VertexSet tri = realize_union(parse_union("2:1"));
  EXPECT_EQ(tri.n, 3);
  EXPECT_EQ(tri.vertices, (std::vector<std::uint32_t>{3, 5, 6}));

  // Orders (3,3) sharing one coordinate: ground sets {0,1,2} and {2,3,4}.
  VertexSet ov = realize_union(parse_union("2:1,2:1", 1));
  EXPECT_EQ(ov.n, 5);
  EXPECT_EQ(ov.vertices,
            (std::vector<std::uint32_t>{3, 5, 6, 0b01100, 0b10100, 0b11000}));
}

TEST(RealizeUnionTest, WeightZeroCliqueIsTheEmptySet) {
  VertexSet s = realize_union(parse_union("0:2"));
  EXPECT_EQ(s.vertices, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(weight_set(s), ls({0}));
}

// -------------------- simple automorphisms --------------------

TEST(SimpleAutomorphismTest, InvolutionAndDistancePreserving) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<std::uint32_t> vs;
    for (int i = 0; i < 6; ++i)
      vs.push_back(static_cast<std::uint32_t>(rng()) & ((1u << n) - 1));
    VertexSet s = make_vertex_set(n, vs);
    std::uint32_t b = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    VertexSet img = simple_automorphism_image(s, b);
    EXPECT_EQ(simple_automorphism_image(img, b).vertices, s.vertices);
    ASSERT_EQ(img.vertices.size(), s.vertices.size());
    // Vertices come back sorted, so compare distance multisets.
    std::vector<int> before, after;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
        before.push_back(hamming(s.vertices[i], s.vertices[j]));
        after.push_back(hamming(img.vertices[i], img.vertices[j]));
      }
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    EXPECT_EQ(before, after);
  }
  EXPECT_EQ(simple_automorphism_image(make_vertex_set(4, {0}), 0b1111).vertices,
            (std::vector<std::uint32_t>{0b1111}));
}

// -------------------- brute-force W* --------------------

TEST(BruteForceWStarTest, SingleVertexGivesFlipWeights) {
  SetFamily fam = brute_force_w_star(make_vertex_set(3, {0}));
  EXPECT_EQ(fam, SetFamily({ls({0}), ls({1}), ls({2}), ls({3})}));
}

TEST(BruteForceWStarTest, MatchesPublishedListings) {
  VertexSet s = realize_union(parse_union("3:1,1:0"));
  SetFamily w6 = brute_force_w_star(embed_in_dimension(s, 6));
  SetFamily expect6 = parse_family(
      "{1,3};{2,4};{3,5};{0,4};{1,5};{2,6};{0,2,4};{1,3,5};{2,4,6}");
  EXPECT_EQ(w6, expect6);
  SetFamily w5 = brute_force_w_star(s);
  EXPECT_EQ(w5, parse_family("{1,3};{2,4};{0,4};{1,5};{0,2,4};{1,3,5}"));
}

TEST(BruteForceWStarTest, RefusesOversizedCubes) {
  EXPECT_THROW(brute_force_w_star(make_vertex_set(21, {0})), resource_error);
}

// -------------------- layered colorings --------------------

TEST(LayeredColoringTest, ColorsByPopcount) {
  CubeColoring c = layered_coloring({0, 0, 1, 1, 0}, 4, 2);
  for (std::uint32_t v = 0; v < 16; ++v)
    EXPECT_EQ(c.color(v), (std::popcount(v) == 2 || std::popcount(v) == 3) ? 1 : 0);
}

TEST(CubeColoringTextTest, RoundTripsMaskOrder) {
  CubeColoring c = layered_coloring({0, 1, 0}, 2, 2);
  std::string text = format_cube_coloring(c);
  EXPECT_EQ(text, "RBBR");
  CubeColoring back = parse_cube_coloring(text);
  EXPECT_EQ(back.n, 2);
  EXPECT_EQ(back.colors, c.colors);
  EXPECT_THROW(parse_cube_coloring("RBB"), parse_error);
}

// -------------------- monochromatic copies --------------------

TEST(MonochromaticCopyTest, ConstantCubeAlwaysContainsCopies) {
  CubeColoring c = layered_coloring(std::vector<std::uint8_t>(8, 0), 7, 2);
  EXPECT_TRUE(contains_monochromatic_copy(c, parse_union("2:1,1:0")));
}

TEST(MonochromaticCopyTest, ParityColoringBlocksMixedParityWeights) {
  // Weights {2,1} occupy both parities: the parity coloring kills every copy.
  CliqueUnion mixed = parse_union("2:0,1:0");
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::uint8_t> layers(n + 1);
    for (int i = 0; i <= n; ++i) layers[i] = static_cast<std::uint8_t>(i % 2);
    CubeColoring c = layered_coloring(layers, n, 2);
    EXPECT_FALSE(contains_monochromatic_copy(c, mixed)) << "n=" << n;
  }
  // Weights {1,3} are both odd: one global flip aligns them with one class.
  std::vector<std::uint8_t> layers(7);
  for (int i = 0; i <= 6; ++i) layers[i] = static_cast<std::uint8_t>(i % 2);
  CubeColoring c6 = layered_coloring(layers, 6, 2);
  EXPECT_TRUE(contains_monochromatic_copy(c6, parse_union("3:1,1:0")));
}

TEST(MonochromaticCopyTest, WitnessMapsUnionIntoOneColorClass) {
  std::mt19937_64 rng(31);
  CliqueUnion u = parse_union("2:1,1:1");
  VertexSet s = realize_union(u);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint8_t> layers(8);
    for (int i = 0; i <= 7; ++i) layers[i] = static_cast<std::uint8_t>(rng() % 2);
    CubeColoring c = layered_coloring(layers, 7, 2);
    std::optional<CopyWitness> w = find_monochromatic_copy(c, u);
    if (!w) continue;
    ++found;
    std::vector<std::uint32_t> images;
    for (std::uint32_t v : s.vertices) {
      std::uint32_t img = apply_copy_map(*w, v);
      EXPECT_EQ(c.color(img), w->color);
      images.push_back(img);
    }
    // The copy map is a cube embedding: injective and distance preserving.
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        EXPECT_EQ(hamming(images[i], images[j]),
                  hamming(s.vertices[i], s.vertices[j]));
  }
  EXPECT_GT(found, 0);
}

TEST(MonochromaticCopyTest, RefusesOversizedSearches) {
  CubeColoring c = layered_coloring(std::vector<std::uint8_t>(8, 0), 7, 2);
  EXPECT_THROW(find_monochromatic_copy(c, parse_union("4:3")), resource_error);
}

// Layered colorings host a monochromatic copy exactly when some reachable
// layer set is monochromatic in the integer coloring — checked with the copy
// search and the interval formula computed independently.
TEST(MonochromaticCopyTest, AgreesWithLayerSetTranslates) {
  std::mt19937_64 rng(12001);
  const int n = 7;
  std::vector<CliqueUnion> unions = {parse_union("2:1,1:0"), parse_union("3:1"),
                                     parse_union("2:0,2:1"),
                                     parse_union("1:1,1:0")};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::uint8_t> layers(n + 1);
    for (int i = 0; i <= n; ++i) layers[i] = static_cast<std::uint8_t>(rng() % 2);
    CubeColoring cube = layered_coloring(layers, n, 2);
    for (const CliqueUnion& u : unions) {
      bool copy = contains_monochromatic_copy(cube, u);
      bool mono_set = false;
      for (const LayerSet& e : w_star_at(u, n)) {
        bool mono = true;
        for (int x : e) mono = mono && layers[x] == layers[e.front()];
        mono_set = mono_set || mono;
      }
      EXPECT_EQ(copy, mono_set) << format_union(u) << " trial " << trial;
    }
  }
}

// -------------------- layered subcubes --------------------

TEST(LayeredSubcubeTest, LayeredInputYieldsImmediateWitness) {
  std::vector<std::uint8_t> layers = {0, 0, 1, 1, 0, 1, 0};
  CubeColoring c = layered_coloring(layers, 6, 2);
  std::optional<SubcubeWitness> w = find_layered_subcube(c, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->base, 0u);
  EXPECT_EQ(w->flip, 0u);
}

TEST(LayeredSubcubeTest, EveryEdgeIsALayeredOneCube) {
  std::mt19937_64 rng(9);
  std::vector<std::uint8_t> colors(1u << 5);
  for (auto& c : colors) c = static_cast<std::uint8_t>(rng() % 2);
  CubeColoring cube{5, 2, colors};
  EXPECT_TRUE(find_layered_subcube(cube, 1).has_value());
}

TEST(LayeredSubcubeTest, RandomNineCubesContainLayeredSquares) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint8_t> colors(1u << 9);
    for (auto& c : colors) c = static_cast<std::uint8_t>(rng() % 2);
    CubeColoring cube{9, 2, colors};
    std::optional<SubcubeWitness> w = find_layered_subcube(cube, 2);
    ASSERT_TRUE(w.has_value()) << "trial " << trial;
    // Validate: colors constant on each layer around the flipped corner.
    int layer_color[3] = {-1, -1, -1};
    for (std::uint32_t v = 0; v < 4; ++v) {
      std::uint32_t m = 0;
      for (int i = 0; i < 2; ++i)
        if (v & (1u << i)) m |= 1u << w->free_coords[i];
      int k = std::popcount(v ^ w->flip);
      int c = cube.color(w->base | m);
      if (layer_color[k] < 0)
        layer_color[k] = c;
      else
        EXPECT_EQ(layer_color[k], c);
    }
  }
}

}  // namespace
}  // namespace qramsey
