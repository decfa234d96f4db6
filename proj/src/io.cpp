#include "balcube/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fcntl.h>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

namespace balcube {

using json = nlohmann::json; // default object type sorts keys

Format format_from_name(const std::string& name) {
  if (name == "csv")
    return Format::csv;
  if (name == "json")
    return Format::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ','))
    out.push_back(field);
  return out;
}

void expect_header(const std::string& got, const std::string& want) {
  if (got != want)
    throw std::invalid_argument("bad CSV header: expected '" + want +
                                "', got '" + got + "'");
}

} // namespace

void write_count_rows(const std::vector<CountRow>& rows, Format format,
                      std::ostream& os, const std::string& engine_tag) {
  if (format == Format::csv) {
    os << "n,k,B\n";
    for (const auto& r : rows)
      os << r.n << "," << r.k << "," << r.b.str() << "\n";
  } else {
    json j;
    j["engine"] = engine_tag;
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"n", r.n}, {"k", r.k}, {"B", r.b.str()}});
    os << j.dump(2) << "\n";
  }
  if (!os)
    throw std::runtime_error("I/O failure while writing table");
}

std::vector<CountRow> read_count_rows(std::istream& is, Format format) {
  std::vector<CountRow> out;
  if (format == Format::csv) {
    std::string line;
    if (!std::getline(is, line))
      throw std::invalid_argument("empty CSV input");
    expect_header(line, "n,k,B");
    while (std::getline(is, line)) {
      if (line.empty())
        continue;
      auto f = split_csv_line(line);
      if (f.size() != 3)
        throw std::invalid_argument("bad CSV row: " + line);
      out.push_back({std::stoi(f[0]), std::stoi(f[1]), Int(f[2])});
    }
  } else {
    json j = json::parse(is);
    for (const auto& row : j.at("rows"))
      out.push_back({row.at("n").get<int>(), row.at("k").get<int>(),
                     Int(row.at("B").get<std::string>())});
  }
  return out;
}

void write_refined_rows(const std::vector<RefinedRow>& rows, Format format,
                        std::ostream& os) {
  if (format == Format::csv) {
    os << "n,k,i,B_nki\n";
    for (const auto& r : rows)
      os << r.n << "," << r.k << "," << r.i << "," << r.b.str() << "\n";
  } else {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back(
          {{"n", r.n}, {"k", r.k}, {"i", r.i}, {"B_nki", r.b.str()}});
    os << j.dump(2) << "\n";
  }
  if (!os)
    throw std::runtime_error("I/O failure while writing table");
}

std::vector<RefinedRow> read_refined_rows(std::istream& is, Format format) {
  std::vector<RefinedRow> out;
  if (format == Format::csv) {
    std::string line;
    if (!std::getline(is, line))
      throw std::invalid_argument("empty CSV input");
    expect_header(line, "n,k,i,B_nki");
    while (std::getline(is, line)) {
      if (line.empty())
        continue;
      auto f = split_csv_line(line);
      if (f.size() != 4)
        throw std::invalid_argument("bad CSV row: " + line);
      out.push_back({std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]),
                     Int(f[3])});
    }
  } else {
    json j = json::parse(is);
    for (const auto& row : j.at("rows"))
      out.push_back({row.at("n").get<int>(), row.at("k").get<int>(),
                     row.at("i").get<int>(),
                     Int(row.at("B_nki").get<std::string>())});
  }
  return out;
}

void write_c_rows(const std::vector<CFactor>& rows, Format format,
                  std::ostream& os) {
  if (format == Format::csv) {
    os << "n,k,c_num,c_den,c_decimal_12dp\n";
    for (const auto& r : rows)
      os << r.n << "," << r.k << "," << numerator(r.value).str() << ","
         << denominator(r.value).str() << "," << decimal_string(r.value, 12)
         << "\n";
  } else {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"n", r.n},
                           {"k", r.k},
                           {"c_num", numerator(r.value).str()},
                           {"c_den", denominator(r.value).str()},
                           {"c_decimal_12dp", decimal_string(r.value, 12)}});
    os << j.dump(2) << "\n";
  }
  if (!os)
    throw std::runtime_error("I/O failure while writing table");
}

void write_matrix_rows(const std::vector<MatrixCount>& rows, Format format,
                       std::ostream& os) {
  if (format == Format::csv) {
    os << "n,k,M\n";
    for (const auto& r : rows)
      os << r.n << "," << r.k << "," << r.m.str() << "\n";
  } else {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"n", r.n}, {"k", r.k}, {"M", r.m.str()}});
    os << j.dump(2) << "\n";
  }
  if (!os)
    throw std::runtime_error("I/O failure while writing table");
}

std::vector<CountRow> table_to_rows(const CountTable& t) {
  std::vector<CountRow> out;
  for (const auto& [k, b] : t.entries)
    out.push_back({t.n, k, b});
  return out;
}

std::vector<RefinedRow> refined_to_rows(const RefinedTable& t) {
  std::vector<RefinedRow> out;
  for (int i = 0; i <= t.k; ++i)
    out.push_back({t.n, t.k, i, t.by_pairs[static_cast<std::size_t>(i)]});
  return out;
}

namespace {

void sort_and_check(CacheFile& c) {
  std::sort(c.records.begin(), c.records.end(),
            [](const CacheRecord& a, const CacheRecord& b) {
              return std::tie(a.n, a.k) < std::tie(b.n, b.k);
            });
  std::sort(c.refined_records.begin(), c.refined_records.end(),
            [](const RefinedRecord& a, const RefinedRecord& b) {
              return std::tie(a.n, a.k, a.i) < std::tie(b.n, b.k, b.i);
            });
  for (std::size_t j = 1; j < c.records.size(); ++j)
    if (c.records[j - 1].n == c.records[j].n &&
        c.records[j - 1].k == c.records[j].k)
      throw IntegrityError("duplicate cache key (n=" +
                           std::to_string(c.records[j].n) +
                           ", k=" + std::to_string(c.records[j].k) + ")");
  for (std::size_t j = 1; j < c.refined_records.size(); ++j)
    if (c.refined_records[j - 1].n == c.refined_records[j].n &&
        c.refined_records[j - 1].k == c.refined_records[j].k &&
        c.refined_records[j - 1].i == c.refined_records[j].i)
      throw IntegrityError("duplicate refined cache key (n=" +
                           std::to_string(c.refined_records[j].n) +
                           ", k=" + std::to_string(c.refined_records[j].k) +
                           ", i=" + std::to_string(c.refined_records[j].i) +
                           ")");
}

} // namespace

CacheFile cache_merge(const CacheFile& existing, const CacheFile& extra) {
  if (existing.schema_version != extra.schema_version)
    throw IntegrityError("cache schema_version mismatch: " +
                         std::to_string(existing.schema_version) + " vs " +
                         std::to_string(extra.schema_version));
  CacheFile out = existing;
  std::map<std::pair<int, int>, std::string> counts;
  for (const auto& r : existing.records)
    counts[{r.n, r.k}] = r.count;
  for (const auto& r : extra.records) {
    auto it = counts.find({r.n, r.k});
    if (it == counts.end()) {
      out.records.push_back(r);
      counts[{r.n, r.k}] = r.count;
    } else if (it->second != r.count) {
      throw IntegrityError("conflicting counts for (n=" + std::to_string(r.n) +
                           ", k=" + std::to_string(r.k) + "): " + it->second +
                           " vs " + r.count);
    }
  }
  std::map<std::tuple<int, int, int>, std::string> rcounts;
  for (const auto& r : existing.refined_records)
    rcounts[{r.n, r.k, r.i}] = r.count;
  for (const auto& r : extra.refined_records) {
    auto it = rcounts.find({r.n, r.k, r.i});
    if (it == rcounts.end()) {
      out.refined_records.push_back(r);
      rcounts[{r.n, r.k, r.i}] = r.count;
    } else if (it->second != r.count) {
      throw IntegrityError("conflicting refined counts for (n=" +
                           std::to_string(r.n) + ", k=" + std::to_string(r.k) +
                           ", i=" + std::to_string(r.i) + "): " + it->second +
                           " vs " + r.count);
    }
  }
  sort_and_check(out);
  return out;
}

std::string cache_to_json(const CacheFile& cache) {
  CacheFile sorted = cache;
  sort_and_check(sorted);
  json j;
  j["schema_version"] = sorted.schema_version;
  j["records"] = json::array();
  for (const auto& r : sorted.records)
    j["records"].push_back(
        {{"n", r.n}, {"k", r.k}, {"count", r.count}, {"engine", r.engine}});
  j["refined_records"] = json::array();
  for (const auto& r : sorted.refined_records)
    j["refined_records"].push_back(
        {{"n", r.n}, {"k", r.k}, {"i", r.i}, {"count", r.count}});
  return j.dump(2) + "\n";
}

CacheFile cache_from_json(const std::string& text) {
  json j = json::parse(text);
  CacheFile out;
  out.schema_version = j.at("schema_version").get<int>();
  for (const auto& r : j.at("records"))
    out.records.push_back({r.at("n").get<int>(), r.at("k").get<int>(),
                           r.at("count").get<std::string>(),
                           r.at("engine").get<std::string>()});
  for (const auto& r : j.at("refined_records"))
    out.refined_records.push_back({r.at("n").get<int>(), r.at("k").get<int>(),
                                   r.at("i").get<int>(),
                                   r.at("count").get<std::string>()});
  // Validate that the decimal strings parse exactly.
  for (const auto& r : out.records)
    (void)Int(r.count);
  for (const auto& r : out.refined_records)
    (void)Int(r.count);
  sort_and_check(out);
  return out;
}

CacheFile load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    return CacheFile{};
  std::ostringstream buf;
  buf << in.rdbuf();
  return cache_from_json(buf.str());
}

void save_cache(const std::string& path, const CacheFile& cache) {
  std::string text = cache_to_json(cache);
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out)
    throw std::runtime_error("failed to write cache file " + path);
}

CacheLock::CacheLock(const std::string& cache_path)
    : lock_path_(cache_path + ".lock") {
  int fd = ::open(lock_path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST)
      throw std::runtime_error("cache " + cache_path +
                               " is locked by another process (" + lock_path_ +
                               " exists)");
    throw std::runtime_error("cannot create lock file " + lock_path_ + ": " +
                             std::strerror(errno));
  }
  ::close(fd);
}

CacheLock::~CacheLock() { ::unlink(lock_path_.c_str()); }

} // namespace balcube
