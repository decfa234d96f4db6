#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "balcube/bigint.hpp"
#include "balcube/cube.hpp"

namespace balcube {

// Thrown when an explicit resource guard would be exceeded. Guards fail
// loudly; engines never silently truncate.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Budgets {
  std::uint64_t brute_subsets = std::uint64_t{1} << 24;
  std::uint64_t dp_states = std::uint64_t{1} << 27;
};

enum class Engine { brute, mitm, refined_sum, auto_pick };

const char* engine_name(Engine e);
Engine engine_from_name(const std::string& name);

// Number of m-subsets of V_n with zero coordinate sum, by direct
// enumeration of subsets. Guard: C(2^n, m) <= budgets.brute_subsets.
Int count_brute(int n, int m, const Budgets& budgets = {});

// Same quantity via meet-in-the-middle over the top-bit halves.
// Guard: live DP states <= budgets.dp_states.
Int count_mitm(int n, int m, const Budgets& budgets = {});

// Dispatch; auto_pick uses brute for n <= 3 and mitm otherwise.
Int count_balanced(int n, int m, Engine engine, const Budgets& budgets = {});

// Per-half subset profile keyed by (size, coordinate sum).
// half = 0 is the top-bit-0 half, half = 1 its antipodal image.
struct HalfProfile {
  int n = 0;
  int half = 0;
  std::map<std::pair<int, std::vector<int>>, Int> entries;
};

HalfProfile half_profile(int n, int half, int max_size,
                         const Budgets& budgets = {});

// B_{n,2k,i} for i = 0..k via DP over the 2^{n-1} antipodal pairs.
struct RefinedTable {
  int n = 0;
  int k = 0;
  std::vector<Int> by_pairs; // index i, length k+1

  Int total() const;
};

RefinedTable count_refined(int n, int k, const Budgets& budgets = {});

struct CountTable {
  int n = 0;
  std::map<int, Int> entries; // k -> B_{n,2k}, k = 0..2^{n-1}
  std::string engine;
};

CountTable full_table(int n, Engine engine, const Budgets& budgets = {});

// Direct enumeration of n x 2k matrices with balanced rows and pairwise
// distinct columns. Guard: C(2k,k)^n <= budgets.brute_subsets.
Int count_matrices_brute(int n, int k, const Budgets& budgets = {});

struct MatrixCount {
  int n = 0;
  int k = 0;
  Int m;
};

// M_{n,2k} = (2k)! B_{n,2k}; zero when 2k > 2^n.
MatrixCount matrix_count(int n, int k, Engine engine = Engine::auto_pick,
                         const Budgets& budgets = {});

} // namespace balcube
