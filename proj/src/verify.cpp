#include "balcube/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "balcube/closed_forms.hpp"
#include "balcube/cube.hpp"

namespace balcube {

const char* claim_name(Claim c) {
  switch (c) {
  case Claim::identity:
    return "identity";
  case Claim::edge_count:
    return "edge-count";
  case Claim::unimodal:
    return "unimodal";
  case Claim::symmetry:
    return "symmetry";
  case Claim::logconcave_fixed_k:
    return "logconcave-fixed-k";
  case Claim::logconcave_fixed_n:
    return "logconcave-fixed-n";
  case Claim::c_monotone:
    return "c-monotone";
  case Claim::c_bound:
    return "c-bound";
  }
  return "?";
}

const char* status_name(Status s) {
  switch (s) {
  case Status::verified:
    return "verified";
  case Status::falsified:
    return "falsified";
  case Status::skipped:
    return "skipped";
  }
  return "?";
}

std::string to_string(const VerificationReport& r) {
  std::ostringstream os;
  os << "claim=" << claim_name(r.claim) << " scope=[" << r.scope
     << "] status=" << status_name(r.status) << "\n";
  if (r.witness) {
    os << "  witness: " << r.witness->where << "  lhs=" << r.witness->lhs
       << "  rhs=" << r.witness->rhs << "\n";
  }
  for (const auto& note : r.notes)
    os << "  note: " << note << "\n";
  return os.str();
}

namespace {

VerificationReport skipped(Claim c, std::string scope, const std::string& why) {
  VerificationReport r;
  r.claim = c;
  r.scope = std::move(scope);
  r.status = Status::skipped;
  r.notes.push_back("guard: " + why);
  return r;
}

void falsify(VerificationReport& r, const std::string& where,
             const std::string& lhs, const std::string& rhs) {
  if (r.status != Status::falsified) {
    r.status = Status::falsified;
    r.witness = Witness{where, lhs, rhs};
  }
}

} // namespace

VerificationReport check_identity(int n, const Budgets& budgets) {
  std::string scope = "n=" + std::to_string(n);
  VerificationReport r;
  r.claim = Claim::identity;
  r.scope = scope;
  if (n < 2)
    return skipped(Claim::identity, scope, "identity requires n >= 2");

  int k_max = (1 << (n - 2)) - 1; // stated range ends here; tables to k_max+1
  try {
    std::vector<RefinedTable> tables;
    for (int k = 0; k <= k_max + 1; ++k)
      tables.push_back(count_refined(n, k, budgets));

    Int half = Int(1) << (n - 1);
    // k = 0 boundary, stated separately from the theorem's range.
    {
      Int lhs = half * tables[0].by_pairs[0];
      Int rhs = Int(1) * tables[1].by_pairs[1];
      if (lhs != rhs)
        falsify(r, "(k=0, i=0)", lhs.str(), rhs.str());
      else
        r.notes.push_back("k=0 boundary holds: " + lhs.str() + " = " +
                          rhs.str());
    }
    for (int k = 1; k <= k_max; ++k) {
      for (int i = 0; i <= k; ++i) {
        Int lhs = (half - 2 * k + i) *
                  tables[static_cast<std::size_t>(k)]
                      .by_pairs[static_cast<std::size_t>(i)];
        Int rhs = Int(i + 1) * tables[static_cast<std::size_t>(k) + 1]
                                   .by_pairs[static_cast<std::size_t>(i) + 1];
        if (lhs != rhs) {
          falsify(r,
                  "(k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")",
                  lhs.str(), rhs.str());
          return r;
        }
      }
    }
    r.notes.push_back("checked 1 <= k <= " + std::to_string(k_max) +
                      ", 0 <= i <= k");
  } catch (const ResourceError& e) {
    return skipped(Claim::identity, scope, e.what());
  }
  return r;
}

namespace {

// Brute classification of all colorings of a small cube by
// (weight, balanced, black-pair count), as vertex-set bitmasks.
std::vector<std::uint32_t> balanced_masks(int n, int weight, int pairs) {
  CubeDim dim(n);
  std::uint32_t nv = dim.vertex_count();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    if (std::popcount(mask) != weight)
      continue;
    Coloring c = Coloring::from_mask(dim, mask);
    if (!is_balanced(c) || antipodal_black_pairs(c) != pairs)
      continue;
    out.push_back(mask);
  }
  return out;
}

} // namespace

VerificationReport check_double_count(int n, int k, int i,
                                      const Budgets& budgets) {
  std::string scope = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " i=" + std::to_string(i);
  VerificationReport r;
  r.claim = Claim::edge_count;
  r.scope = scope;
  if (n > 4)
    return skipped(Claim::edge_count, scope,
                   "mask enumeration limited to n <= 4");
  if (n < 1 || k < 0 || i < 0 || i > k)
    throw std::domain_error("check_double_count: bad (n, k, i)");
  (void)budgets;

  CubeDim dim(n);
  auto fs = balanced_masks(n, 2 * k, i);
  auto gs = balanced_masks(n, 2 * k + 2, i + 1);

  std::map<std::uint32_t, int> in_degree;
  for (std::uint32_t g : gs)
    in_degree[g] = 0;

  Int expected_out = (Int(1) << (n - 1)) - 2 * k + i;
  Int edges_from_f = 0;
  for (std::uint32_t f : fs) {
    Coloring cf = Coloring::from_mask(dim, f);
    int out_deg = 0;
    for (PairId p = 0; p < dim.pair_count(); ++p) {
      VertexId rep = pair_rep(dim, p);
      VertexId anti = antipode(dim, rep);
      if (cf.is_black(rep) || cf.is_black(anti))
        continue;
      std::uint32_t g = f | (1u << rep) | (1u << anti);
      auto it = in_degree.find(g);
      if (it == in_degree.end()) {
        falsify(r, "F=" + std::to_string(f) + " pair=" + std::to_string(p),
                "flip lands outside B_{n,2k+2,i+1}", "membership expected");
        return r;
      }
      ++it->second;
      ++out_deg;
    }
    if (Int(out_deg) != expected_out) {
      falsify(r, "F=" + std::to_string(f) + " out-degree",
              std::to_string(out_deg), expected_out.str());
      return r;
    }
    edges_from_f += out_deg;
  }

  Int edges_to_g = 0;
  for (std::uint32_t g : gs) {
    int deg = in_degree[g];
    // Cross-check via the inverse move: black-pair flips back into the
    // F-side class.
    Coloring cg = Coloring::from_mask(dim, g);
    int back = 0;
    for (PairId p = 0; p < dim.pair_count(); ++p) {
      VertexId rep = pair_rep(dim, p);
      if (cg.is_black(rep) && cg.is_black(antipode(dim, rep))) {
        Coloring cf = flip_black_pair(cg, p);
        if (is_balanced(cf) && antipodal_black_pairs(cf) == i)
          ++back;
      }
    }
    if (deg != i + 1 || back != i + 1) {
      falsify(r, "G=" + std::to_string(g) + " in-degree",
              std::to_string(deg) + "/" + std::to_string(back),
              std::to_string(i + 1));
      return r;
    }
    edges_to_g += deg;
  }

  if (edges_from_f != edges_to_g) {
    falsify(r, "edge totals", edges_from_f.str(), edges_to_g.str());
    return r;
  }
  r.notes.push_back("|F|=" + std::to_string(fs.size()) +
                    " |G|=" + std::to_string(gs.size()) +
                    " edges=" + edges_from_f.str());
  return r;
}

VerificationReport check_double_count_all(int n, const Budgets& budgets) {
  std::string scope = "n=" + std::to_string(n) + " all (k,i)";
  VerificationReport r;
  r.claim = Claim::edge_count;
  r.scope = scope;
  if (n < 2)
    return skipped(Claim::edge_count, scope, "requires n >= 2");
  if (n > 4)
    return skipped(Claim::edge_count, scope,
                   "mask enumeration limited to n <= 4");
  int k_max = (1 << (n - 2)) - 1;
  for (int k = 0; k <= k_max; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto sub = check_double_count(n, k, i, budgets);
      if (sub.status == Status::falsified) {
        sub.scope = scope;
        return sub;
      }
    }
  }
  r.notes.push_back("checked 0 <= k <= " + std::to_string(k_max) +
                    ", 0 <= i <= k");
  return r;
}

VerificationReport check_strict_unimodality(int n, Engine engine,
                                            const Budgets& budgets) {
  std::string scope = "n=" + std::to_string(n);
  VerificationReport r;
  r.claim = Claim::unimodal;
  r.scope = scope;
  try {
    CountTable t = full_table(n, engine, budgets);
    if (n == 1) {
      r.notes.push_back("n=1 table is 1,1: unimodality holds vacuously");
      return r;
    }
    int mid = 1 << (n - 2); // weight 2^{n-1}
    int k_end = 1 << (n - 1);
    for (int k = 0; k < mid; ++k) {
      if (!(t.entries.at(k) < t.entries.at(k + 1))) {
        falsify(r, "k=" + std::to_string(k) + " (ascent)",
                t.entries.at(k).str(), t.entries.at(k + 1).str());
        return r;
      }
    }
    for (int k = mid; k < k_end; ++k) {
      if (!(t.entries.at(k) > t.entries.at(k + 1))) {
        falsify(r, "k=" + std::to_string(k) + " (descent)",
                t.entries.at(k).str(), t.entries.at(k + 1).str());
        return r;
      }
    }
    r.notes.push_back("maximum " + t.entries.at(mid).str() +
                      " at k=" + std::to_string(mid));
  } catch (const ResourceError& e) {
    return skipped(Claim::unimodal, scope, e.what());
  }
  return r;
}

VerificationReport check_symmetry(int n, Engine engine, const Budgets& budgets) {
  std::string scope = "n=" + std::to_string(n);
  VerificationReport r;
  r.claim = Claim::symmetry;
  r.scope = scope;
  try {
    CountTable t = full_table(n, engine, budgets);
    int k_end = 1 << (n - 1);
    for (int k = 0; k <= k_end; ++k) {
      if (t.entries.at(k) != t.entries.at(k_end - k)) {
        falsify(r, "k=" + std::to_string(k), t.entries.at(k).str(),
                t.entries.at(k_end - k).str());
        return r;
      }
    }
    r.notes.push_back("palindrome over k=0.." + std::to_string(k_end));
  } catch (const ResourceError& e) {
    return skipped(Claim::symmetry, scope, e.what());
  }
  return r;
}

namespace {

Int count_for_fixed_k(int n, int k, const Budgets& budgets) {
  if (k == 1)
    return b_n2(n);
  if (k == 2 && n >= 2)
    return b_n4(n);
  return count_balanced(n, 2 * k, Engine::auto_pick, budgets);
}

} // namespace

VerificationReport check_logconcave_fixed_k(int k, int n_lo, int n_hi,
                                            const Budgets& budgets) {
  std::string scope = "k=" + std::to_string(k) + " n=" + std::to_string(n_lo) +
                      ".." + std::to_string(n_hi);
  VerificationReport r;
  r.claim = Claim::logconcave_fixed_k;
  r.scope = scope;
  if (k < 1 || n_lo < 1 || n_hi < n_lo + 2)
    throw std::domain_error("check_logconcave_fixed_k: need k >= 1 and "
                            "n_hi >= n_lo + 2");
  if (Int(2) * k > (Int(1) << n_lo))
    throw std::domain_error("check_logconcave_fixed_k: 2k > 2^n_lo");
  try {
    std::map<int, Int> b;
    for (int n = n_lo; n <= n_hi; ++n)
      b[n] = count_for_fixed_k(n, k, budgets);
    for (int n = n_lo + 1; n <= n_hi - 1; ++n) {
      Int lhs = b[n] * b[n];
      Int rhs = b[n - 1] * b[n + 1];
      if (lhs < rhs) {
        falsify(r, "n=" + std::to_string(n), lhs.str(), rhs.str());
        return r;
      }
      r.notes.push_back("n=" + std::to_string(n) +
                        " margin=" + Int(lhs - rhs).str());
    }
  } catch (const ResourceError& e) {
    return skipped(Claim::logconcave_fixed_k, scope, e.what());
  }
  return r;
}

VerificationReport check_logconcave_fixed_n(int n, Engine engine,
                                            const Budgets& budgets) {
  std::string scope = "n=" + std::to_string(n);
  VerificationReport r;
  r.claim = Claim::logconcave_fixed_n;
  r.scope = scope;
  try {
    CountTable t = full_table(n, engine, budgets);
    int k_end = 1 << (n - 1);
    for (int k = 1; k <= k_end - 1; ++k) {
      Int lhs = t.entries.at(k) * t.entries.at(k);
      Int rhs = t.entries.at(k - 1) * t.entries.at(k + 1);
      if (lhs < rhs) {
        falsify(r, "k=" + std::to_string(k), lhs.str(), rhs.str());
        r.notes.push_back("violation at k=" + std::to_string(k) + ": " +
                          lhs.str() + " < " + rhs.str());
      }
    }
    if (r.status == Status::verified)
      r.notes.push_back("no log-concavity violation in k");
  } catch (const ResourceError& e) {
    return skipped(Claim::logconcave_fixed_n, scope, e.what());
  }
  return r;
}

VerificationReport check_c_monotone(int k, int n_lo, int n_hi,
                                    const Budgets& budgets) {
  std::string scope = "k=" + std::to_string(k) + " n=" + std::to_string(n_lo) +
                      ".." + std::to_string(n_hi);
  VerificationReport r;
  r.claim = Claim::c_monotone;
  r.scope = scope;
  if (n_hi < n_lo + 1)
    throw std::domain_error("check_c_monotone: need n_hi >= n_lo + 1");
  if (k < 3)
    r.notes.push_back("warning: theorem scope is k >= 3, got k=" +
                      std::to_string(k));
  try {
    std::map<int, Rat> c;
    for (int n = n_lo; n <= n_hi; ++n) {
      CFactor cf = c_factor_from_count(n, k, count_for_fixed_k(n, k, budgets));
      c[n] = cf.value;
      if (cf.value >= 4) {
        falsify(r, "n=" + std::to_string(n) + " (c-bound)",
                decimal_string(cf.value, 12), "4");
        return r;
      }
    }
    for (int n = n_lo; n <= n_hi - 1; ++n) {
      Rat margin = c[n] - c[n + 1];
      bool holds = margin > 0;
      r.notes.push_back("n=" + std::to_string(n) + ": c_n - c_{n+1} = " +
                        decimal_string(margin, 12) +
                        (holds ? "" : "  (observation: not decreasing here)"));
    }
  } catch (const ResourceError& e) {
    return skipped(Claim::c_monotone, scope, e.what());
  }
  return r;
}

VerificationReport check_c_bound(int k, int n_lo, int n_hi,
                                 const Budgets& budgets) {
  std::string scope = "k=" + std::to_string(k) + " n=" + std::to_string(n_lo) +
                      ".." + std::to_string(n_hi);
  VerificationReport r;
  r.claim = Claim::c_bound;
  r.scope = scope;
  try {
    for (int n = n_lo; n <= n_hi; ++n) {
      CFactor cf = c_factor_from_count(n, k, count_for_fixed_k(n, k, budgets));
      if (cf.value < 0 || cf.value >= 4) {
        falsify(r, "n=" + std::to_string(n), decimal_string(cf.value, 12),
                "[0, 4)");
        return r;
      }
    }
    r.notes.push_back("0 <= c < 4 on all cells");
  } catch (const ResourceError& e) {
    return skipped(Claim::c_bound, scope, e.what());
  }
  return r;
}

} // namespace balcube
