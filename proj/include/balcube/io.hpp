#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "balcube/closed_forms.hpp"
#include "balcube/engines.hpp"

namespace balcube {

enum class Format { csv, json };

Format format_from_name(const std::string& name);

struct CountRow {
  int n = 0;
  int k = 0;
  Int b;
  bool operator==(const CountRow& o) const {
    return n == o.n && k == o.k && b == o.b;
  }
};

struct RefinedRow {
  int n = 0;
  int k = 0;
  int i = 0;
  Int b;
  bool operator==(const RefinedRow& o) const {
    return n == o.n && k == o.k && i == o.i && b == o.b;
  }
};

// Counts serialize as decimal strings in both CSV and JSON; the values
// overflow native integer types quickly.
void write_count_rows(const std::vector<CountRow>& rows, Format format,
                      std::ostream& os, const std::string& engine_tag);
std::vector<CountRow> read_count_rows(std::istream& is, Format format);

void write_refined_rows(const std::vector<RefinedRow>& rows, Format format,
                        std::ostream& os);
std::vector<RefinedRow> read_refined_rows(std::istream& is, Format format);

void write_c_rows(const std::vector<CFactor>& rows, Format format,
                  std::ostream& os);

void write_matrix_rows(const std::vector<MatrixCount>& rows, Format format,
                       std::ostream& os);

std::vector<CountRow> table_to_rows(const CountTable& t);
std::vector<RefinedRow> refined_to_rows(const RefinedTable& t);

struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheRecord {
  int n = 0;
  int k = 0;
  std::string count; // exact decimal string
  std::string engine;
};

struct RefinedRecord {
  int n = 0;
  int k = 0;
  int i = 0;
  std::string count;
};

struct CacheFile {
  int schema_version = 1;
  std::vector<CacheRecord> records;
  std::vector<RefinedRecord> refined_records;
};

// Union of records; the same (n, k) or (n, k, i) key with different
// counts is an integrity error, never a silent overwrite.
CacheFile cache_merge(const CacheFile& existing, const CacheFile& extra);

// Byte-stable: sorted keys, records sorted by (n, k[, i]).
std::string cache_to_json(const CacheFile& cache);
CacheFile cache_from_json(const std::string& text);

CacheFile load_cache(const std::string& path); // missing file -> empty cache
void save_cache(const std::string& path, const CacheFile& cache);

// Single-writer lock: creates <path>.lock exclusively, removed on
// destruction. A held lock makes construction fail fast.
class CacheLock {
public:
  explicit CacheLock(const std::string& cache_path);
  ~CacheLock();
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;

private:
  std::string lock_path_;
};

} // namespace balcube
