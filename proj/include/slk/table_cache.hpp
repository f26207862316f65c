#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "slk/rational.hpp"

namespace slk {

// On-disk table store for arithmetic-function tables.  The cache is advisory:
// a missing or malformed file just means the table gets recomputed, and a
// recomputed table must serialize to the identical bytes.
//
// Format, text, newline-terminated lines, no trailing whitespace:
//   selberg-lift-kit-table v1 <name> <max_n>
//   n,numerator,denominator          (one line per index, n = 0..max_n)
class TableCache {
 public:
  static std::filesystem::path cache_dir();  // $SLK_CACHE_DIR or ./.slk-cache

  static std::string render(const std::string& name, long max_n, const std::vector<Rational>& values);

  // nullopt when absent, unreadable, or inconsistent with (name, max_n).
  static std::optional<std::vector<Rational>> load(const std::string& name, long max_n);

  // Writes via a temp file in the same directory plus an atomic rename.
  static void store(const std::string& name, long max_n, const std::vector<Rational>& values);

  // Same bytes as the cache file, to a caller-chosen path.
  static void write_file(const std::filesystem::path& path, const std::string& name, long max_n,
                         const std::vector<Rational>& values);
};

}  // namespace slk
