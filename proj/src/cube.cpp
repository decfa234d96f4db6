#include "balcube/cube.hpp"

#include <bit>

namespace balcube {

namespace {

void check_vertex(CubeDim dim, VertexId v) {
  if (v >= dim.vertex_count())
    throw std::domain_error("vertex id " + std::to_string(v) +
                            " out of range for n=" + std::to_string(dim.n));
}

} // namespace

std::vector<int> coords(CubeDim dim, VertexId v) {
  check_vertex(dim, v);
  std::vector<int> c(static_cast<std::size_t>(dim.n));
  for (int j = 0; j < dim.n; ++j)
    c[static_cast<std::size_t>(j)] = ((v >> j) & 1u) ? -1 : +1;
  return c;
}

VertexId antipode(CubeDim dim, VertexId v) {
  check_vertex(dim, v);
  return v ^ dim.vertex_mask();
}

PairId pair_of(CubeDim dim, VertexId v) {
  check_vertex(dim, v);
  // Canonical representative is the member with top bit 0.
  if (v >= dim.pair_count())
    v ^= dim.vertex_mask();
  return v;
}

VertexId pair_rep(CubeDim dim, PairId p) {
  if (p >= dim.pair_count())
    throw std::domain_error("pair id " + std::to_string(p) +
                            " out of range for n=" + std::to_string(dim.n));
  return p;
}

Coloring::Coloring(CubeDim dim)
    : dim_(dim), bits_((dim.vertex_count() + 63) / 64, 0) {}

Coloring::Coloring(CubeDim dim, const std::vector<VertexId>& black)
    : Coloring(dim) {
  for (VertexId v : black) {
    check_vertex(dim, v);
    set_black(v);
  }
}

Coloring Coloring::from_mask(CubeDim dim, std::uint64_t mask) {
  if (dim.n > 6)
    throw std::domain_error("from_mask supports n <= 6 only");
  if (dim.n < 6 && (mask >> dim.vertex_count()) != 0)
    throw std::domain_error("mask has bits beyond 2^n");
  Coloring c(dim);
  c.bits_[0] = mask;
  c.weight_ = std::popcount(mask);
  return c;
}

void Coloring::set_black(VertexId v) {
  std::uint64_t& word = bits_[v >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63u);
  if (!(word & bit)) {
    word |= bit;
    ++weight_;
  }
}

bool Coloring::is_black(VertexId v) const {
  check_vertex(dim_, v);
  return (bits_[v >> 6] >> (v & 63u)) & 1u;
}

std::vector<VertexId> Coloring::black_vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(weight_));
  for (VertexId v = 0; v < dim_.vertex_count(); ++v)
    if ((bits_[v >> 6] >> (v & 63u)) & 1u)
      out.push_back(v);
  return out;
}

std::vector<int> sum_vector(const Coloring& c) {
  std::vector<int> s(static_cast<std::size_t>(c.dim().n), 0);
  for (VertexId v : c.black_vertices()) {
    for (int j = 0; j < c.dim().n; ++j)
      s[static_cast<std::size_t>(j)] += ((v >> j) & 1u) ? -1 : +1;
  }
  return s;
}

bool is_balanced(const Coloring& c) {
  // Weight 0 is balanced: the center of mass is taken to be the origin.
  for (int x : sum_vector(c))
    if (x != 0)
      return false;
  return true;
}

int antipodal_black_pairs(const Coloring& c) {
  CubeDim dim = c.dim();
  int count = 0;
  for (PairId p = 0; p < dim.pair_count(); ++p) {
    VertexId rep = pair_rep(dim, p);
    if (c.is_black(rep) && c.is_black(antipode(dim, rep)))
      ++count;
  }
  return count;
}

int antipodal_white_pairs(const Coloring& c) {
  CubeDim dim = c.dim();
  int count = 0;
  for (PairId p = 0; p < dim.pair_count(); ++p) {
    VertexId rep = pair_rep(dim, p);
    if (!c.is_black(rep) && !c.is_black(antipode(dim, rep)))
      ++count;
  }
  return count;
}

Coloring complement(const Coloring& c) {
  Coloring out(c.dim());
  for (VertexId v = 0; v < c.dim().vertex_count(); ++v)
    if (!c.is_black(v))
      out.set_black(v);
  return out;
}

Coloring flip_white_pair(const Coloring& c, PairId p) {
  CubeDim dim = c.dim();
  VertexId rep = pair_rep(dim, p);
  VertexId anti = antipode(dim, rep);
  if (c.is_black(rep) || c.is_black(anti))
    throw std::invalid_argument("flip_white_pair: pair " + std::to_string(p) +
                                " is not fully white");
  Coloring out = c;
  out.set_black(rep);
  out.set_black(anti);
  return out;
}

Coloring flip_black_pair(const Coloring& c, PairId p) {
  CubeDim dim = c.dim();
  VertexId rep = pair_rep(dim, p);
  VertexId anti = antipode(dim, rep);
  if (!c.is_black(rep) || !c.is_black(anti))
    throw std::invalid_argument("flip_black_pair: pair " + std::to_string(p) +
                                " is not fully black");
  Coloring out(dim);
  for (VertexId v : c.black_vertices())
    if (v != rep && v != anti)
      out.set_black(v);
  return out;
}

} // namespace balcube
