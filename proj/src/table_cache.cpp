#include "slk/table_cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace slk {

namespace fs = std::filesystem;

fs::path TableCache::cache_dir() {
  if (const char* env = std::getenv("SLK_CACHE_DIR"); env && *env) return fs::path(env);
  return fs::path(".slk-cache");
}

static fs::path table_path(const std::string& name, long max_n) {
  return TableCache::cache_dir() / (name + "-" + std::to_string(max_n) + ".tbl");
}

std::string TableCache::render(const std::string& name, long max_n,
                               const std::vector<Rational>& values) {
  std::ostringstream os;
  os << "selberg-lift-kit-table v1 " << name << " " << max_n << "\n";
  for (long n = 0; n <= max_n; ++n) {
    const Rational& v = values.at(static_cast<std::size_t>(n));
    os << n << "," << v.get_num().get_str() << "," << v.get_den().get_str() << "\n";
  }
  return os.str();
}

std::optional<std::vector<Rational>> TableCache::load(const std::string& name, long max_n) {
  std::ifstream in(table_path(name, max_n));
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::ostringstream expected;
  expected << "selberg-lift-kit-table v1 " << name << " " << max_n;
  if (header != expected.str()) return std::nullopt;

  std::vector<Rational> values(static_cast<std::size_t>(max_n) + 1);
  std::string line;
  for (long n = 0; n <= max_n; ++n) {
    if (!std::getline(in, line)) return std::nullopt;
    std::size_t c1 = line.find(',');
    std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) return std::nullopt;
    if (line.substr(0, c1) != std::to_string(n)) return std::nullopt;
    Integer num, den;
    if (num.set_str(line.substr(c1 + 1, c2 - c1 - 1), 10) != 0) return std::nullopt;
    if (den.set_str(line.substr(c2 + 1), 10) != 0) return std::nullopt;
    if (den <= 0) return std::nullopt;
    Rational v(num, den);
    v.canonicalize();
    values[static_cast<std::size_t>(n)] = v;
  }
  return values;
}

void TableCache::store(const std::string& name, long max_n, const std::vector<Rational>& values) {
  std::error_code ec;
  fs::create_directories(cache_dir(), ec);
  if (ec) return;  // cache is advisory
  fs::path final_path = table_path(name, max_n);
  fs::path tmp_path = final_path;
  tmp_path += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << render(name, max_n, values);
    if (!out) {
      fs::remove(tmp_path, ec);
      return;
    }
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) fs::remove(tmp_path, ec);
}

void TableCache::write_file(const fs::path& path, const std::string& name, long max_n,
                            const std::vector<Rational>& values) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write table to " + path.string());
  out << render(name, max_n, values);
}

}  // namespace slk
