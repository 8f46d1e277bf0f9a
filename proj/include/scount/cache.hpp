#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "scount/canonical.hpp"
#include "scount/s2class.hpp"

namespace scount {

enum class CacheKind { Count, Class };

struct CacheStats {
  std::size_t counts = 0;
  std::size_t classes = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t skipped_lines = 0;
};

/// Memo table for realization counts (keyed by unpinned canonical keys) and
/// S2-classes (keyed with apex and base pinned).
///
/// Classes are stored for the canonical base orientation; a key whose
/// swap_flag is set reads and writes (a, c, b). With a backing file every
/// put appends one JSON line {key, kind, value, provenance}; unreadable
/// lines are skipped with a warning when the file is loaded.
class CacheStore {
public:
  CacheStore() = default;
  explicit CacheStore(std::filesystem::path file);

  std::optional<std::int64_t> get_count(const CanonicalKey &key) const;
  void put_count(const CanonicalKey &key, std::int64_t count,
                 nlohmann::json provenance = {});

  std::optional<S2Class> get_class(const CanonicalKey &key) const;
  void put_class(const CanonicalKey &key, const S2Class &cls,
                 nlohmann::json provenance = {});

  /// Provenance recorded with an entry, or null.
  nlohmann::json provenance(const CanonicalKey &key, CacheKind kind) const;

  CacheStats stats() const;
  const std::vector<std::string> &warnings() const { return warnings_; }

  /// Drops every entry and truncates the backing file.
  void clear();

  const std::optional<std::filesystem::path> &file() const { return file_; }

private:
  struct Entry {
    CacheKind kind;
    std::int64_t count = 0;
    S2Class cls;
    nlohmann::json provenance;
  };

  static std::string slot(const std::string &bytes, CacheKind kind);
  void append(const std::string &bytes, const Entry &e);
  void load();

  std::map<std::string, Entry> entries_;
  std::optional<std::filesystem::path> file_;
  std::vector<std::string> warnings_;
  std::size_t skipped_ = 0;
  mutable std::size_t hits_ = 0, misses_ = 0;
  mutable std::shared_mutex mutex_;
  std::mutex file_mutex_;
};

} // namespace scount
