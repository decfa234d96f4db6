#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace balcube {

inline constexpr int kDefaultMaxDim = 10;

// Vertex id in [0, 2^n). Bit j encodes coordinate j+1: bit 0 <-> +1,
// bit 1 <-> -1. Under this convention the antipode is the bitwise
// complement and antipodal pairs are canonicalized by the top bit.
using VertexId = std::uint32_t;

// Pair id in [0, 2^{n-1}); the representative is the pair member whose
// top bit (bit n-1) is zero, so the id equals the low n-1 bits.
using PairId = std::uint32_t;

struct CubeDim {
  int n;

  explicit CubeDim(int n_, int n_max = kDefaultMaxDim) : n(n_) {
    if (n < 1 || n > n_max)
      throw std::domain_error("CubeDim: n must be in [1, " +
                              std::to_string(n_max) + "], got " +
                              std::to_string(n_));
  }

  std::uint32_t vertex_count() const { return std::uint32_t{1} << n; }
  std::uint32_t pair_count() const { return std::uint32_t{1} << (n - 1); }
  VertexId vertex_mask() const { return vertex_count() - 1; }
};

std::vector<int> coords(CubeDim dim, VertexId v);
VertexId antipode(CubeDim dim, VertexId v);

PairId pair_of(CubeDim dim, VertexId v);
VertexId pair_rep(CubeDim dim, PairId p);

// Immutable 2-coloring: the black set as a bitset over 2^n vertices.
class Coloring {
public:
  explicit Coloring(CubeDim dim);
  Coloring(CubeDim dim, const std::vector<VertexId>& black);

  // Convenience for small cubes: bit v of `mask` marks vertex v black.
  static Coloring from_mask(CubeDim dim, std::uint64_t mask);

  CubeDim dim() const { return dim_; }
  bool is_black(VertexId v) const;
  int weight() const { return weight_; }
  std::vector<VertexId> black_vertices() const;

  bool operator==(const Coloring& o) const {
    return dim_.n == o.dim_.n && bits_ == o.bits_;
  }

private:
  CubeDim dim_;
  std::vector<std::uint64_t> bits_;
  int weight_ = 0;

  void set_black(VertexId v);
  friend Coloring complement(const Coloring&);
  friend Coloring flip_white_pair(const Coloring&, PairId);
  friend Coloring flip_black_pair(const Coloring&, PairId);
};

std::vector<int> sum_vector(const Coloring& c);
bool is_balanced(const Coloring& c);
int antipodal_black_pairs(const Coloring& c);
int antipodal_white_pairs(const Coloring& c);
Coloring complement(const Coloring& c);

// Precondition: both members of pair p are white in c. Adds both.
Coloring flip_white_pair(const Coloring& c, PairId p);
// Precondition: both members of pair p are black in c. Removes both.
Coloring flip_black_pair(const Coloring& c, PairId p);

} // namespace balcube
