#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "snwalk/characters.hpp"

namespace snwalk {

/// Environment variable naming the on-disk table cache directory.
inline constexpr const char* kCacheDirEnv = "SNWALK_CACHE_DIR";
inline constexpr std::uint32_t kTableFormatVersion = 1;

class TableCacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary layout, little-endian:
//   0  char[8]  "SNWCHART"
//   8  u32      format version
//  12  u32      n
//  16  u32      p(n)
//  20  u32      reserved (0)
//  24  u64      FNV-1a digest of the partition enumeration order
//  32  i64[p*p] values, row-major
//  ..  u64      FNV-1a digest of every preceding byte

/// Digest of the enumeration order of the partitions of n.
std::uint64_t enumeration_digest(int n);

std::vector<std::uint8_t> serialize_table(const CharacterTable& table);
/// Throws TableCacheError on a bad magic, version, order digest, or checksum.
CharacterTable deserialize_table(std::span<const std::uint8_t> bytes);

void save_table(const CharacterTable& table, const std::filesystem::path& path);
CharacterTable load_table(const std::filesystem::path& path);

/// "chartable_n<N>_v<version>.bin"
std::filesystem::path cache_file_name(int n);
std::optional<std::filesystem::path> cache_dir_from_env();

/// Thread-safe provider of shared, immutable character tables. Tables are
/// built at most once per n; with a cache directory they are loaded from and
/// written back to disk.
class TableStore {
 public:
  struct Config {
    std::optional<std::filesystem::path> cache_dir;
    /// Fail with TableUnavailableError instead of building a missing table.
    bool require_cached = false;
    TableOptions build;
  };

  TableStore() = default;
  explicit TableStore(Config config) : config_(std::move(config)) {}

  std::shared_ptr<const CharacterTable> get(int n);

 private:
  Config config_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const CharacterTable>> tables_;
};

}  // namespace snwalk
