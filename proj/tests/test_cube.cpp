#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "balcube/cube.hpp"

using namespace balcube;

TEST_CASE("coords follows the bit convention") {
  CHECK(coords(CubeDim(2), 0) == std::vector<int>{+1, +1});
  CHECK(coords(CubeDim(2), 3) == std::vector<int>{-1, -1});
  CHECK(coords(CubeDim(3), 5) == std::vector<int>{-1, +1, -1});
  CHECK_THROWS_AS(coords(CubeDim(2), 4), std::domain_error);
}

TEST_CASE("antipode is bitwise complement and an involution") {
  CHECK(antipode(CubeDim(2), 0) == 3);
  CHECK(antipode(CubeDim(4), 5) == 10);
  CHECK_THROWS_AS(antipode(CubeDim(3), 8), std::domain_error);
  for (int n = 1; n <= 6; ++n) {
    CubeDim dim(n);
    for (VertexId v = 0; v < dim.vertex_count(); ++v) {
      CHECK(antipode(dim, antipode(dim, v)) == v);
      CHECK(antipode(dim, v) != v);
      auto c = coords(dim, v);
      auto a = coords(dim, antipode(dim, v));
      for (int j = 0; j < n; ++j)
        CHECK(a[j] == -c[j]);
    }
  }
}

TEST_CASE("pair canonicalization partitions the vertices") {
  for (int n = 1; n <= 5; ++n) {
    CubeDim dim(n);
    for (PairId p = 0; p < dim.pair_count(); ++p) {
      VertexId rep = pair_rep(dim, p);
      CHECK((rep >> (n - 1)) == 0);
      CHECK(pair_of(dim, rep) == p);
      CHECK(pair_of(dim, antipode(dim, rep)) == p);
    }
  }
}

TEST_CASE("sum_vector and is_balanced") {
  CubeDim d2(2);
  CHECK(sum_vector(Coloring(d2, {0, 3})) == std::vector<int>{0, 0});
  CHECK(sum_vector(Coloring(d2)) == std::vector<int>{0, 0});
  CHECK(sum_vector(Coloring(d2, {0, 1})) == std::vector<int>{0, 2});

  CHECK(is_balanced(Coloring(d2, {0, 3})));
  CHECK_FALSE(is_balanced(Coloring(d2, {0, 1})));
  CHECK(is_balanced(Coloring(d2))); // weight 0 is balanced by convention
  for (int n = 1; n <= 5; ++n) {
    CubeDim dim(n);
    std::vector<VertexId> all;
    for (VertexId v = 0; v < dim.vertex_count(); ++v)
      all.push_back(v);
    CHECK(is_balanced(Coloring(dim, all)));
  }
}

TEST_CASE("black/white pair counts") {
  CHECK(antipodal_black_pairs(Coloring(CubeDim(2), {0, 3})) == 1);
  CHECK(antipodal_white_pairs(Coloring(CubeDim(2), {0, 3})) == 1);
  CHECK(antipodal_white_pairs(Coloring(CubeDim(4))) == 8);
  // {0,3,5,10} in Q_4: two antipodal pairs {0,15}? no -- {0,3} are not
  // antipodal in n=4; check the concrete value by definition.
  Coloring c(CubeDim(4), {0, 15, 5, 10});
  CHECK(antipodal_black_pairs(c) == 2);
}

TEST_CASE("white pairs = 2^{n-1} - w + i, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CubeDim dim(n);
    for (std::uint32_t mask = 0; mask < (1u << dim.vertex_count()); ++mask) {
      Coloring c = Coloring::from_mask(dim, mask);
      int w = c.weight();
      int i = antipodal_black_pairs(c);
      CHECK(antipodal_white_pairs(c) == (1 << (n - 1)) - w + i);
    }
  }
}

TEST_CASE("white pairs identity, randomized n = 5, 6") {
  std::mt19937 rng(12345);
  for (int n = 5; n <= 6; ++n) {
    CubeDim dim(n);
    std::uniform_int_distribution<std::uint32_t> pick(0, dim.vertex_count() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<VertexId> black;
      int size = static_cast<int>(pick(rng)) % dim.vertex_count();
      for (int j = 0; j < size; ++j)
        black.push_back(pick(rng));
      Coloring c(dim, black); // set semantics dedupe
      int w = c.weight();
      int i = antipodal_black_pairs(c);
      CHECK(antipodal_white_pairs(c) == (1 << (n - 1)) - w + i);
    }
  }
}

TEST_CASE("complement is an involution and preserves balance") {
  CubeDim d3(3);
  Coloring empty(d3);
  Coloring full = complement(empty);
  CHECK(full.weight() == 8);
  CHECK(complement(full) == empty);
  for (int n = 1; n <= 4; ++n) {
    CubeDim dim(n);
    for (std::uint32_t mask = 0; mask < (1u << dim.vertex_count()); ++mask) {
      Coloring c = Coloring::from_mask(dim, mask);
      CHECK(complement(complement(c)) == c);
      CHECK(is_balanced(c) == is_balanced(complement(c)));
    }
  }
}

TEST_CASE("odd weight is never balanced, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CubeDim dim(n);
    int balanced_odd = 0;
    for (std::uint32_t mask = 0; mask < (1u << dim.vertex_count()); ++mask) {
      if (std::popcount(mask) % 2 == 0)
        continue;
      if (is_balanced(Coloring::from_mask(dim, mask)))
        ++balanced_odd;
    }
    CHECK(balanced_odd == 0);
  }
}

TEST_CASE("flip_white_pair / flip_black_pair basics") {
  CubeDim d2(2);
  Coloring c(d2, {0, 3});
  // pair 1 = {1, 2} is white
  Coloring g = flip_white_pair(c, 1);
  CHECK(g.weight() == 4);
  CHECK(g == Coloring(d2, {0, 1, 2, 3}));
  CHECK(flip_black_pair(g, 1) == c);
  CHECK(flip_black_pair(Coloring(d2, {0, 1, 2, 3}), 0) == Coloring(d2, {1, 2}));
  CHECK_THROWS_AS(flip_white_pair(c, 0), std::invalid_argument);
  CHECK_THROWS_AS(flip_black_pair(c, 1), std::invalid_argument);
}

TEST_CASE("flips preserve balance and shift (weight, pairs), exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CubeDim dim(n);
    for (std::uint32_t mask = 0; mask < (1u << dim.vertex_count()); ++mask) {
      Coloring c = Coloring::from_mask(dim, mask);
      if (!is_balanced(c))
        continue;
      int i = antipodal_black_pairs(c);
      for (PairId p = 0; p < dim.pair_count(); ++p) {
        VertexId rep = pair_rep(dim, p);
        VertexId anti = antipode(dim, rep);
        if (!c.is_black(rep) && !c.is_black(anti)) {
          Coloring g = flip_white_pair(c, p);
          CHECK(g.weight() == c.weight() + 2);
          CHECK(is_balanced(g));
          CHECK(antipodal_black_pairs(g) == i + 1);
          CHECK(flip_black_pair(g, p) == c);
        }
        if (c.is_black(rep) && c.is_black(anti)) {
          Coloring f = flip_black_pair(c, p);
          CHECK(f.weight() == c.weight() - 2);
          CHECK(is_balanced(f));
          CHECK(antipodal_black_pairs(f) == i - 1);
          CHECK(flip_white_pair(f, p) == c);
        }
      }
    }
  }
}
