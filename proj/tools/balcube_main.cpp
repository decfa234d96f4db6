#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balcube/closed_forms.hpp"
#include "balcube/engines.hpp"
#include "balcube/io.hpp"
#include "balcube/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
  std::string engine = "auto";
  std::string format = "csv";
  std::string cache_path;
  std::string out_path;
  std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_engine = true) {
  if (with_engine)
    cmd->add_option("--engine", opts.engine, "brute|mitm|auto")
        ->check(CLI::IsMember({"brute", "mitm", "auto"}));
  cmd->add_option("--format", opts.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cache", opts.cache_path, "persistent count cache (JSON)");
  cmd->add_option("--budget", opts.budget,
                  "resource budget (subsets / DP states)");
  cmd->add_option("--out", opts.out_path, "output path (default: stdout)");
}

balcube::Budgets budgets_of(const CommonOpts& opts) {
  balcube::Budgets b;
  if (opts.budget) {
    b.brute_subsets = *opts.budget;
    b.dp_states = *opts.budget;
  }
  return b;
}

// Sink that is either stdout or an owned file stream.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::trunc);
      if (!file)
        throw std::runtime_error("cannot open output file " + path);
      os = &file;
    }
  }
};

// Count lookup with optional cache. Cached values win; fresh values are
// appended and merged (a conflict with the cache is an integrity error).
struct CountSource {
  balcube::Engine engine;
  balcube::Budgets budgets;
  balcube::CacheFile* cache = nullptr;
  bool cache_dirty = false;

  balcube::Int get(int n, int k, std::string* engine_tag = nullptr) {
    if (cache) {
      for (const auto& r : cache->records)
        if (r.n == n && r.k == k) {
          if (engine_tag)
            *engine_tag = r.engine + " (cached)";
          return balcube::Int(r.count);
        }
    }
    balcube::Engine used =
        engine == balcube::Engine::auto_pick
            ? (n <= 3 ? balcube::Engine::brute : balcube::Engine::mitm)
            : engine;
    balcube::Int b = balcube::count_balanced(n, 2 * k, used, budgets);
    if (engine_tag)
      *engine_tag = balcube::engine_name(used);
    if (cache) {
      balcube::CacheFile fresh;
      fresh.records.push_back({n, k, b.str(), balcube::engine_name(used)});
      *cache = balcube::cache_merge(*cache, fresh);
      cache_dirty = true;
    }
    return b;
  }
};

int status_exit(const balcube::VerificationReport& r) {
  switch (r.status) {
  case balcube::Status::verified:
    return kExitOk;
  case balcube::Status::falsified:
    return kExitFalsified;
  case balcube::Status::skipped:
    return kExitResource;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of balanced 2-colorings of the n-cube"};
  app.require_subcommand(1);

  // count
  auto* cmd_count = app.add_subcommand("count", "B_{n,2k} table or one entry");
  int count_n = 0;
  std::optional<int> count_k;
  CommonOpts count_opts;
  cmd_count->add_option("--n", count_n, "cube dimension")->required();
  cmd_count->add_option("--k", count_k, "half-weight k (omit for full table)");
  add_common(cmd_count, count_opts);

  // table
  auto* cmd_table = app.add_subcommand("table", "full tables for a range of n");
  int table_lo = 0, table_hi = 0;
  CommonOpts table_opts;
  cmd_table->add_option("--n-lo", table_lo, "first dimension")->required();
  cmd_table->add_option("--n-hi", table_hi, "last dimension")->required();
  add_common(cmd_table, table_opts);

  // refine
  auto* cmd_refine =
      app.add_subcommand("refine", "B_{n,2k,i} by antipodal black pairs");
  int refine_n = 0, refine_k = 0;
  CommonOpts refine_opts;
  cmd_refine->add_option("--n", refine_n, "cube dimension")->required();
  cmd_refine->add_option("--k", refine_k, "half-weight k")->required();
  add_common(cmd_refine, refine_opts, /*with_engine=*/false);

  // matrix-count
  auto* cmd_matrix =
      app.add_subcommand("matrix-count", "M_{n,2k} = (2k)! B_{n,2k}");
  int matrix_n = 0, matrix_k = 0;
  CommonOpts matrix_opts;
  cmd_matrix->add_option("--n", matrix_n, "rows")->required();
  cmd_matrix->add_option("--k", matrix_k, "half the columns")->required();
  add_common(cmd_matrix, matrix_opts);

  // c-table
  auto* cmd_ctable =
      app.add_subcommand("c-table", "exact correction factors c_{n,k}");
  int ctable_n = 0, ctable_kmax = 0;
  CommonOpts ctable_opts;
  cmd_ctable->add_option("--n", ctable_n, "cube dimension")->required();
  cmd_ctable->add_option("--k-max", ctable_kmax, "emit k = 1..k_max")
      ->required();
  add_common(cmd_ctable, ctable_opts);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "mechanical checks");
  cmd_verify->require_subcommand(1);
  int v_n = 0, v_k = 0, v_nlo = 0, v_nhi = 0;
  CommonOpts verify_opts;
  auto* v_identity = cmd_verify->add_subcommand("identity", "flip identity");
  v_identity->add_option("--n", v_n)->required();
  auto* v_double =
      cmd_verify->add_subcommand("double-count", "flip relation degrees");
  v_double->add_option("--n", v_n)->required();
  auto* v_unimodal =
      cmd_verify->add_subcommand("unimodal", "strict unimodality");
  v_unimodal->add_option("--n", v_n)->required();
  auto* v_symmetry =
      cmd_verify->add_subcommand("symmetry", "table palindrome");
  v_symmetry->add_option("--n", v_n)->required();
  auto* v_lck =
      cmd_verify->add_subcommand("logconcave-k", "log-concavity in n, fixed k");
  v_lck->add_option("--k", v_k)->required();
  v_lck->add_option("--n-lo", v_nlo)->required();
  v_lck->add_option("--n-hi", v_nhi)->required();
  auto* v_lcn =
      cmd_verify->add_subcommand("logconcave-n", "log-concavity in k, fixed n");
  v_lcn->add_option("--n", v_n)->required();
  auto* v_cmono =
      cmd_verify->add_subcommand("c-monotone", "c_{n,k} > c_{n+1,k}");
  v_cmono->add_option("--k", v_k)->required();
  v_cmono->add_option("--n-lo", v_nlo)->required();
  v_cmono->add_option("--n-hi", v_nhi)->required();
  for (auto* sub : {v_identity, v_double, v_unimodal, v_symmetry, v_lck, v_lcn,
                    v_cmono})
    sub->add_option("--budget", verify_opts.budget, "resource budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_count || *cmd_table || *cmd_refine) {
      const CommonOpts& opts = *cmd_count ? count_opts
                               : *cmd_table ? table_opts
                                            : refine_opts;
      balcube::Budgets budgets = budgets_of(opts);
      balcube::Format format = balcube::format_from_name(opts.format);

      std::unique_ptr<balcube::CacheLock> lock;
      balcube::CacheFile cache;
      if (!opts.cache_path.empty()) {
        lock = std::make_unique<balcube::CacheLock>(opts.cache_path);
        cache = balcube::load_cache(opts.cache_path);
      }

      CountSource source{balcube::engine_from_name(opts.engine), budgets,
                         opts.cache_path.empty() ? nullptr : &cache};
      Sink sink(opts.out_path);

      if (*cmd_count) {
        balcube::CubeDim dim(count_n);
        int k_end = static_cast<int>(dim.pair_count());
        if (count_k && (*count_k < 0 || *count_k > k_end))
          throw CLI::ValidationError("--k", "k out of range [0, " +
                                                std::to_string(k_end) + "]");
        std::vector<balcube::CountRow> rows;
        std::string tag;
        if (count_k) {
          rows.push_back({count_n, *count_k, source.get(count_n, *count_k, &tag)});
        } else {
          for (int k = 0; k <= k_end; ++k)
            rows.push_back({count_n, k, source.get(count_n, k, &tag)});
        }
        balcube::write_count_rows(rows, format, *sink.os, tag);
        std::cerr << "balcube: engine: " << tag << "\n";
      } else if (*cmd_table) {
        if (table_hi < table_lo)
          throw CLI::ValidationError("--n-hi", "range is empty");
        std::vector<balcube::CountRow> rows;
        std::string tag;
        for (int n = table_lo; n <= table_hi; ++n) {
          int k_end = static_cast<int>(balcube::CubeDim(n).pair_count());
          for (int k = 0; k <= k_end; ++k)
            rows.push_back({n, k, source.get(n, k, &tag)});
        }
        balcube::write_count_rows(rows, format, *sink.os, tag);
      } else {
        balcube::CubeDim dim(refine_n);
        if (refine_k < 0 || refine_k > static_cast<int>(dim.pair_count()))
          throw CLI::ValidationError("--k", "k out of range");
        balcube::RefinedTable t =
            balcube::count_refined(refine_n, refine_k, budgets);
        balcube::write_refined_rows(balcube::refined_to_rows(t), format,
                                    *sink.os);
        if (source.cache || !opts.cache_path.empty()) {
          balcube::CacheFile fresh;
          for (const auto& row : balcube::refined_to_rows(t))
            fresh.refined_records.push_back(
                {row.n, row.k, row.i, row.b.str()});
          cache = balcube::cache_merge(cache, fresh);
          source.cache_dirty = true;
        }
      }

      if (source.cache_dirty)
        balcube::save_cache(opts.cache_path, cache);
      return kExitOk;
    }

    if (*cmd_matrix) {
      balcube::Budgets budgets = budgets_of(matrix_opts);
      balcube::Format format = balcube::format_from_name(matrix_opts.format);
      Sink sink(matrix_opts.out_path);
      balcube::MatrixCount mc = balcube::matrix_count(
          matrix_n, matrix_k, balcube::engine_from_name(matrix_opts.engine),
          budgets);
      balcube::write_matrix_rows({mc}, format, *sink.os);
      return kExitOk;
    }

    if (*cmd_ctable) {
      balcube::Budgets budgets = budgets_of(ctable_opts);
      balcube::Format format = balcube::format_from_name(ctable_opts.format);
      if (ctable_kmax < 1 ||
          balcube::Int(2) * ctable_kmax > (balcube::Int(1) << ctable_n))
        throw CLI::ValidationError("--k-max", "need 1 <= k and 2k <= 2^n");
      Sink sink(ctable_opts.out_path);
      std::vector<balcube::CFactor> rows;
      for (int k = 1; k <= ctable_kmax; ++k) {
        balcube::Int b = balcube::count_balanced(
            ctable_n, 2 * k, balcube::engine_from_name(ctable_opts.engine),
            budgets);
        rows.push_back(balcube::c_factor_from_count(ctable_n, k, b));
      }
      balcube::write_c_rows(rows, format, *sink.os);
      return kExitOk;
    }

    if (*cmd_verify) {
      balcube::Budgets budgets = budgets_of(verify_opts);
      balcube::VerificationReport report;
      if (*v_identity)
        report = balcube::check_identity(v_n, budgets);
      else if (*v_double)
        report = balcube::check_double_count_all(v_n, budgets);
      else if (*v_unimodal)
        report = balcube::check_strict_unimodality(v_n, balcube::Engine::auto_pick, budgets);
      else if (*v_symmetry)
        report = balcube::check_symmetry(v_n, balcube::Engine::auto_pick, budgets);
      else if (*v_lck)
        report = balcube::check_logconcave_fixed_k(v_k, v_nlo, v_nhi, budgets);
      else if (*v_lcn)
        report = balcube::check_logconcave_fixed_n(v_n, balcube::Engine::auto_pick, budgets);
      else
        report = balcube::check_c_monotone(v_k, v_nlo, v_nhi, budgets);
      std::cout << balcube::to_string(report);
      return status_exit(report);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "balcube: error[usage]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const balcube::ResourceError& e) {
    std::cerr << "balcube: error[resource]: " << e.what() << "\n";
    return kExitResource;
  } catch (const balcube::IntegrityError& e) {
    std::cerr << "balcube: error[integrity]: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "balcube: error[usage]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "balcube: error[usage]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "balcube: error[io]: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
