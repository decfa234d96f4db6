#include "balcube/engines.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>

#include "balcube/closed_forms.hpp"

namespace balcube {

const char* engine_name(Engine e) {
  switch (e) {
  case Engine::brute:
    return "brute";
  case Engine::mitm:
    return "mitm";
  case Engine::refined_sum:
    return "refined-sum";
  case Engine::auto_pick:
    return "auto";
  }
  return "?";
}

Engine engine_from_name(const std::string& name) {
  if (name == "brute")
    return Engine::brute;
  if (name == "mitm")
    return Engine::mitm;
  if (name == "refined-sum")
    return Engine::refined_sum;
  if (name == "auto")
    return Engine::auto_pick;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

namespace {

void check_dims(int n, int m) {
  CubeDim dim(n); // range check
  if (m < 0 || static_cast<std::uint64_t>(m) > dim.vertex_count())
    throw std::domain_error("weight m=" + std::to_string(m) +
                            " out of range for n=" + std::to_string(n));
}

// Sum vectors are packed into 64-bit keys, one fixed-width field per
// coordinate, each stored with offset `max_abs`. Field arithmetic never
// carries between coordinates because |entry| <= subset size <= max_abs.
struct SumPacking {
  int n;
  int max_abs;
  int bits;
  std::uint64_t zero_key;
  std::uint64_t allmax; // key of the all-(+max_abs) sum; negation = allmax - key

  SumPacking(int n_, int max_abs_, const Budgets& budgets) : n(n_), max_abs(max_abs_) {
    bits = std::bit_width(static_cast<unsigned>(2 * std::max(max_abs, 1)) + 1u);
    if (bits * n > 64)
      throw ResourceError("sum-vector key needs " + std::to_string(bits * n) +
                          " bits (> 64); state budget " +
                          std::to_string(budgets.dp_states) +
                          " cannot be honored at n=" + std::to_string(n) +
                          ", m=" + std::to_string(2 * max_abs_));
    zero_key = 0;
    allmax = 0;
    for (int j = 0; j < n; ++j) {
      zero_key |= static_cast<std::uint64_t>(max_abs) << (j * bits);
      allmax |= static_cast<std::uint64_t>(2 * max_abs) << (j * bits);
    }
  }

  // Signed key increment for adding the coordinates of vertex v.
  std::uint64_t delta(VertexId v) const {
    std::int64_t d = 0;
    for (int j = 0; j < n; ++j)
      d += ((v >> j) & 1u) ? -(std::int64_t{1} << (j * bits))
                           : (std::int64_t{1} << (j * bits));
    return static_cast<std::uint64_t>(d);
  }

  std::uint64_t negate(std::uint64_t key) const { return allmax - key; }

  std::vector<int> decode(std::uint64_t key) const {
    std::vector<int> s(static_cast<std::size_t>(n));
    std::uint64_t field_mask = (std::uint64_t{1} << bits) - 1;
    for (int j = 0; j < n; ++j)
      s[static_cast<std::size_t>(j)] =
          static_cast<int>((key >> (j * bits)) & field_mask) - max_abs;
    return s;
  }
};

using StateMap = std::unordered_map<std::uint64_t, Int>;

std::uint64_t total_states(const std::vector<StateMap>& by_size) {
  std::uint64_t t = 0;
  for (const auto& m : by_size)
    t += m.size();
  return t;
}

// (size, packed sum) -> count over subsets of one top-bit half of V_n.
std::vector<StateMap> packed_half_profile(int n, int half, int max_size,
                                          const SumPacking& pack,
                                          const Budgets& budgets) {
  CubeDim dim(n);
  std::uint32_t half_size = dim.pair_count();
  VertexId base = half == 0 ? 0 : half_size;
  int cap = std::min<int>(max_size, static_cast<int>(half_size));

  std::vector<StateMap> by_size(static_cast<std::size_t>(cap) + 1);
  by_size[0][pack.zero_key] = 1;
  for (std::uint32_t off = 0; off < half_size; ++off) {
    std::uint64_t d = pack.delta(base + off);
    for (int s = cap - 1; s >= 0; --s) {
      auto& src = by_size[static_cast<std::size_t>(s)];
      auto& dst = by_size[static_cast<std::size_t>(s) + 1];
      for (const auto& [key, cnt] : src)
        dst[key + d] += cnt;
    }
    if (total_states(by_size) > budgets.dp_states)
      throw ResourceError("mitm state budget " +
                          std::to_string(budgets.dp_states) +
                          " exceeded at n=" + std::to_string(n) +
                          ", m=" + std::to_string(max_size));
  }
  return by_size;
}

} // namespace

Int count_brute(int n, int m, const Budgets& budgets) {
  check_dims(n, m);
  CubeDim dim(n);
  std::uint32_t nv = dim.vertex_count();
  if (binomial(static_cast<int>(nv), m) > budgets.brute_subsets)
    throw ResourceError("brute budget " + std::to_string(budgets.brute_subsets) +
                        " subsets exceeded: C(" + std::to_string(nv) + "," +
                        std::to_string(m) + ") too large");

  std::vector<std::vector<int>> cs;
  cs.reserve(nv);
  for (VertexId v = 0; v < nv; ++v)
    cs.push_back(coords(dim, v));

  Int count = 0;
  std::vector<int> sum(static_cast<std::size_t>(n), 0);
  // Enumerate m-subsets in index order; prune once a coordinate sum can
  // no longer be cancelled by the vertices still to be chosen.
  auto rec = [&](auto&& self, std::uint32_t start, int need) -> void {
    if (need == 0) {
      if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; }))
        ++count;
      return;
    }
    for (int j = 0; j < n; ++j)
      if (std::abs(sum[static_cast<std::size_t>(j)]) > need)
        return;
    for (std::uint32_t v = start; v + static_cast<std::uint32_t>(need) <= nv;
         ++v) {
      for (int j = 0; j < n; ++j)
        sum[static_cast<std::size_t>(j)] += cs[v][static_cast<std::size_t>(j)];
      self(self, v + 1, need - 1);
      for (int j = 0; j < n; ++j)
        sum[static_cast<std::size_t>(j)] -= cs[v][static_cast<std::size_t>(j)];
    }
  };
  rec(rec, 0, m);
  return count;
}

Int count_mitm(int n, int m, const Budgets& budgets) {
  check_dims(n, m);
  SumPacking pack(n, std::max(m, 1), budgets);
  auto left = packed_half_profile(n, 0, m, pack, budgets);
  auto right = packed_half_profile(n, 1, m, pack, budgets);

  Int total = 0;
  for (int s = 0; s <= m; ++s) {
    if (static_cast<std::size_t>(s) >= left.size())
      break;
    int t = m - s;
    if (static_cast<std::size_t>(t) >= right.size())
      continue;
    const auto& rmap = right[static_cast<std::size_t>(t)];
    for (const auto& [key, cnt] : left[static_cast<std::size_t>(s)]) {
      auto it = rmap.find(pack.negate(key));
      if (it != rmap.end())
        total += cnt * it->second;
    }
  }
  return total;
}

Int count_balanced(int n, int m, Engine engine, const Budgets& budgets) {
  switch (engine) {
  case Engine::brute:
    return count_brute(n, m, budgets);
  case Engine::mitm:
    return count_mitm(n, m, budgets);
  case Engine::refined_sum: {
    if (m % 2 != 0)
      return 0; // odd weight is never balanced
    return count_refined(n, m / 2, budgets).total();
  }
  case Engine::auto_pick:
    return n <= 3 ? count_brute(n, m, budgets) : count_mitm(n, m, budgets);
  }
  throw std::logic_error("unreachable engine");
}

HalfProfile half_profile(int n, int half, int max_size, const Budgets& budgets) {
  check_dims(n, max_size);
  if (half != 0 && half != 1)
    throw std::domain_error("half must be 0 or 1");
  SumPacking pack(n, std::max(max_size, 1), budgets);
  auto packed = packed_half_profile(n, half, max_size, pack, budgets);

  HalfProfile out;
  out.n = n;
  out.half = half;
  for (std::size_t s = 0; s < packed.size(); ++s)
    for (const auto& [key, cnt] : packed[s])
      out.entries[{static_cast<int>(s), pack.decode(key)}] = cnt;
  return out;
}

Int RefinedTable::total() const {
  Int t = 0;
  for (const Int& x : by_pairs)
    t += x;
  return t;
}

RefinedTable count_refined(int n, int k, const Budgets& budgets) {
  check_dims(n, 2 * k);
  CubeDim dim(n);
  SumPacking pack(n, std::max(2 * k, 1), budgets);

  // states[w][i]: colorings of weight w with i black pairs among the
  // pairs processed so far, keyed by packed sum vector. Each pair is
  // both-white, both-black (sum contribution zero), or single-black
  // with a sign choice.
  std::vector<std::vector<StateMap>> states(
      static_cast<std::size_t>(2 * k) + 1,
      std::vector<StateMap>(static_cast<std::size_t>(k) + 1));
  states[0][0][pack.zero_key] = 1;

  for (PairId p = 0; p < dim.pair_count(); ++p) {
    std::uint64_t d = pack.delta(pair_rep(dim, p));
    std::uint64_t nd = static_cast<std::uint64_t>(
        -static_cast<std::int64_t>(d));
    for (int w = 2 * k - 1; w >= 0; --w) {
      for (int i = std::min(k, w / 2); i >= 0; --i) {
        const auto& src = states[static_cast<std::size_t>(w)]
                                [static_cast<std::size_t>(i)];
        if (src.empty())
          continue;
        if (w + 2 <= 2 * k && i + 1 <= k) {
          auto& black = states[static_cast<std::size_t>(w) + 2]
                              [static_cast<std::size_t>(i) + 1];
          for (const auto& [key, cnt] : src)
            black[key] += cnt;
        }
        auto& single = states[static_cast<std::size_t>(w) + 1]
                             [static_cast<std::size_t>(i)];
        for (const auto& [key, cnt] : src) {
          single[key + d] += cnt;
          single[key + nd] += cnt;
        }
      }
    }
    std::uint64_t total = 0;
    for (const auto& row : states)
      total += total_states(row);
    if (total > budgets.dp_states)
      throw ResourceError("pair-DP state budget " +
                          std::to_string(budgets.dp_states) +
                          " exceeded at n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
  }

  RefinedTable out;
  out.n = n;
  out.k = k;
  out.by_pairs.assign(static_cast<std::size_t>(k) + 1, Int(0));
  for (int i = 0; i <= k; ++i) {
    const auto& final_map = states[static_cast<std::size_t>(2 * k)]
                                  [static_cast<std::size_t>(i)];
    auto it = final_map.find(pack.zero_key);
    if (it != final_map.end())
      out.by_pairs[static_cast<std::size_t>(i)] = it->second;
  }
  return out;
}

CountTable full_table(int n, Engine engine, const Budgets& budgets) {
  CubeDim dim(n);
  CountTable out;
  out.n = n;
  out.engine = engine_name(engine == Engine::auto_pick
                               ? (n <= 3 ? Engine::brute : Engine::mitm)
                               : engine);
  for (std::uint32_t k = 0; k <= dim.pair_count(); ++k)
    out.entries[static_cast<int>(k)] =
        count_balanced(n, static_cast<int>(2 * k), engine, budgets);
  return out;
}

Int count_matrices_brute(int n, int k, const Budgets& budgets) {
  if (n < 1 || k < 1)
    throw std::domain_error("count_matrices_brute requires n >= 1, k >= 1");
  Int rows_per = binomial(2 * k, k);
  if (pow(rows_per, n) > budgets.brute_subsets)
    throw ResourceError("matrix brute budget " +
                        std::to_string(budgets.brute_subsets) +
                        " exceeded: C(2k,k)^n too large at n=" +
                        std::to_string(n) + ", k=" + std::to_string(k));

  // Balanced rows as 2k-bit masks, bit j set <-> entry j is -1.
  std::vector<std::uint32_t> rows;
  for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask)
    if (std::popcount(mask) == k)
      rows.push_back(mask);

  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> cols(static_cast<std::size_t>(2 * k));
  Int count = 0;
  for (;;) {
    for (int j = 0; j < 2 * k; ++j) {
      std::uint32_t col = 0;
      for (int r = 0; r < n; ++r)
        col |= ((rows[choice[static_cast<std::size_t>(r)]] >> j) & 1u) << r;
      cols[static_cast<std::size_t>(j)] = col;
    }
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) == cols.end())
      ++count;
    // odometer
    int r = 0;
    while (r < n && ++choice[static_cast<std::size_t>(r)] == rows.size()) {
      choice[static_cast<std::size_t>(r)] = 0;
      ++r;
    }
    if (r == n)
      break;
  }
  return count;
}

MatrixCount matrix_count(int n, int k, Engine engine, const Budgets& budgets) {
  if (n < 1 || k < 0)
    throw std::domain_error("matrix_count requires n >= 1, k >= 0");
  MatrixCount out;
  out.n = n;
  out.k = k;
  if (Int(2) * k > (Int(1) << n)) {
    out.m = 0;
    return out;
  }
  out.m = factorial(2 * k) * count_balanced(n, 2 * k, engine, budgets);
  return out;
}

} // namespace balcube
