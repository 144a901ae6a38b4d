#include "snwalk/table_cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace snwalk {

namespace {

constexpr char kMagic[8] = {'S', 'N', 'W', 'C', 'H', 'A', 'R', 'T'};
constexpr std::size_t kHeaderSize = 32;

class Fnv1a {
 public:
  void bytes(const std::uint8_t* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      h_ ^= data[i];
      h_ *= 1099511628211ull;
    }
  }
  void u32(std::uint32_t v) {
    std::uint8_t b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    bytes(b, 4);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T v) {
  using U = std::make_unsigned_t<T>;
  const U u = static_cast<U>(v);
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> in, std::size_t offset) {
  using U = std::make_unsigned_t<T>;
  U u = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) u |= static_cast<U>(in[offset + i]) << (8 * i);
  return static_cast<T>(u);
}

}  // namespace

std::uint64_t enumeration_digest(int n) {
  Fnv1a h;
  const auto parts = enumerate_partitions(n);
  h.u32(static_cast<std::uint32_t>(parts.size()));
  for (const Partition& p : parts) {
    h.u32(static_cast<std::uint32_t>(p.length()));
    for (int v : p.parts()) h.u32(static_cast<std::uint32_t>(v));
  }
  return h.value();
}

std::vector<std::uint8_t> serialize_table(const CharacterTable& table) {
  std::vector<std::uint8_t> out;
  const auto values = table.values();
  out.reserve(kHeaderSize + values.size() * 8 + 8);
  for (char ch : kMagic) out.push_back(static_cast<std::uint8_t>(ch));
  put_le<std::uint32_t>(out, kTableFormatVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.n()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.size()));
  put_le<std::uint32_t>(out, 0);
  put_le<std::uint64_t>(out, enumeration_digest(table.n()));
  for (std::int64_t v : values) put_le<std::int64_t>(out, v);
  Fnv1a h;
  h.bytes(out.data(), out.size());
  put_le<std::uint64_t>(out, h.value());
  return out;
}

CharacterTable deserialize_table(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize + 8) throw TableCacheError("table cache: truncated header");
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw TableCacheError("table cache: bad magic");
  }
  const auto version = get_le<std::uint32_t>(bytes, 8);
  if (version != kTableFormatVersion) {
    throw TableCacheError("table cache: unsupported format version " + std::to_string(version));
  }
  const auto n = get_le<std::uint32_t>(bytes, 12);
  const auto count = get_le<std::uint32_t>(bytes, 16);
  if (n < 1 || n > static_cast<std::uint32_t>(kMaxTableN)) {
    throw TableCacheError("table cache: n out of range");
  }
  const std::size_t expected = kHeaderSize + static_cast<std::size_t>(count) * count * 8 + 8;
  if (bytes.size() != expected) throw TableCacheError("table cache: wrong file length");

  Fnv1a h;
  h.bytes(bytes.data(), bytes.size() - 8);
  if (h.value() != get_le<std::uint64_t>(bytes, bytes.size() - 8)) {
    throw TableCacheError("table cache: checksum mismatch");
  }
  if (get_le<std::uint64_t>(bytes, 24) != enumeration_digest(static_cast<int>(n))) {
    throw TableCacheError("table cache: partition order does not match this build");
  }
  if (partition_count(static_cast<int>(n)) != count) {
    throw TableCacheError("table cache: p(n) mismatch");
  }
  std::vector<std::int64_t> values(static_cast<std::size_t>(count) * count);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = get_le<std::int64_t>(bytes, kHeaderSize + 8 * i);
  }
  return CharacterTable(static_cast<int>(n), std::move(values));
}

void save_table(const CharacterTable& table, const std::filesystem::path& path) {
  const auto bytes = serialize_table(table);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  // Write then rename so readers never observe a partial file.
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw TableCacheError("table cache: cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw TableCacheError("table cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CharacterTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableUnavailableError("table cache: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_table(bytes);
}

std::filesystem::path cache_file_name(int n) {
  return "chartable_n" + std::to_string(n) + "_v" + std::to_string(kTableFormatVersion) + ".bin";
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv(kCacheDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::shared_ptr<const CharacterTable> TableStore::get(int n) {
  std::lock_guard lock(mutex_);
  if (auto it = tables_.find(n); it != tables_.end()) return it->second;

  std::shared_ptr<const CharacterTable> table;
  if (config_.cache_dir) {
    const auto path = *config_.cache_dir / cache_file_name(n);
    if (std::filesystem::exists(path)) {
      table = std::make_shared<const CharacterTable>(load_table(path));
    } else if (config_.require_cached) {
      throw TableUnavailableError("no cached character table for n = " + std::to_string(n) +
                                  " at " + path.string());
    }
  } else if (config_.require_cached) {
    throw TableUnavailableError("a cached table was required but no cache directory is set");
  }
  if (!table) {
    table = std::make_shared<const CharacterTable>(build_table(n, config_.build));
    if (config_.cache_dir) save_table(*table, *config_.cache_dir / cache_file_name(n));
  }
  tables_.emplace(n, table);
  return table;
}

}  // namespace snwalk
