#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balcube/engines.hpp"

namespace balcube {

enum class Claim {
  identity,
  edge_count,
  unimodal,
  symmetry,
  logconcave_fixed_k,
  logconcave_fixed_n,
  c_monotone,
  c_bound,
};

const char* claim_name(Claim c);

enum class Status { verified, falsified, skipped };

const char* status_name(Status s);

struct Witness {
  std::string where; // first failing tuple, lexicographic order
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  Claim claim;
  std::string scope;
  Status status = Status::verified;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

std::string to_string(const VerificationReport& r);

// Theorem identity (2^{n-1}-2k+i) B_{n,2k,i} = (i+1) B_{n,2k+2,i+1}
// over 1 <= k <= 2^{n-2}-1, 0 <= i <= k, plus the k=0 boundary.
VerificationReport check_identity(int n, const Budgets& budgets = {});

// Materializes the flip relation between B_{n,2k,i} and B_{n,2k+2,i+1}
// and checks out-degree 2^{n-1}-2k+i, in-degree i+1, and edge totals.
VerificationReport check_double_count(int n, int k, int i,
                                      const Budgets& budgets = {});
// Same over every (k, i) in the identity's range for this n.
VerificationReport check_double_count_all(int n, const Budgets& budgets = {});

VerificationReport check_strict_unimodality(int n,
                                            Engine engine = Engine::auto_pick,
                                            const Budgets& budgets = {});

VerificationReport check_symmetry(int n, Engine engine = Engine::auto_pick,
                                  const Budgets& budgets = {});

// B_{n,2k}^2 >= B_{n-1,2k} B_{n+1,2k} for n in [n_lo+1, n_hi-1].
VerificationReport check_logconcave_fixed_k(int k, int n_lo, int n_hi,
                                            const Budgets& budgets = {});

// Log-concavity of the k-indexed sequence for one n; reports any
// violation as data (the claim is known not to hold in general).
VerificationReport check_logconcave_fixed_n(int n,
                                            Engine engine = Engine::auto_pick,
                                            const Budgets& budgets = {});

// c_{n,k} > c_{n+1,k} for consecutive n; claimed only for k >= 3 and
// large n, so non-monotone pairs are recorded as observations.
VerificationReport check_c_monotone(int k, int n_lo, int n_hi,
                                    const Budgets& budgets = {});

// 0 <= c_{n,k} < 4 on every computed cell.
VerificationReport check_c_bound(int k, int n_lo, int n_hi,
                                 const Budgets& budgets = {});

} // namespace balcube
