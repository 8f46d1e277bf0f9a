#include "scount/cache.hpp"

#include <iostream>

#include "scount/error.hpp"

namespace scount {
namespace {

const char *kind_name(CacheKind k) { return k == CacheKind::Count ? "count" : "class"; }

std::string key_hex(const std::string &bytes) { return CanonicalKey{bytes, false}.hex(); }

} // namespace

std::string S2Class::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

CacheStore::CacheStore(std::filesystem::path file) : file_(std::move(file)) { load(); }

std::string CacheStore::slot(const std::string &bytes, CacheKind kind) {
  return std::string(1, kind == CacheKind::Count ? 'n' : 'c') + bytes;
}

std::optional<std::int64_t> CacheStore::get_count(const CanonicalKey &key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(slot(key.bytes, CacheKind::Count));
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second.count;
}

std::optional<S2Class> CacheStore::get_class(const CanonicalKey &key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(slot(key.bytes, CacheKind::Class));
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return key.swap_flag ? it->second.cls.swapped() : it->second.cls;
}

void CacheStore::put_count(const CanonicalKey &key, std::int64_t count,
                           nlohmann::json provenance) {
  Entry e{CacheKind::Count, count, {}, std::move(provenance)};
  {
    std::unique_lock lock(mutex_);
    entries_[slot(key.bytes, CacheKind::Count)] = e;
  }
  append(key.bytes, e);
}

void CacheStore::put_class(const CanonicalKey &key, const S2Class &cls,
                           nlohmann::json provenance) {
  Entry e{CacheKind::Class, 0, key.swap_flag ? cls.swapped() : cls, std::move(provenance)};
  {
    std::unique_lock lock(mutex_);
    entries_[slot(key.bytes, CacheKind::Class)] = e;
  }
  append(key.bytes, e);
}

nlohmann::json CacheStore::provenance(const CanonicalKey &key, CacheKind kind) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(slot(key.bytes, kind));
  return it == entries_.end() ? nlohmann::json() : it->second.provenance;
}

CacheStats CacheStore::stats() const {
  std::shared_lock lock(mutex_);
  CacheStats s;
  for (const auto &[k, e] : entries_)
    (e.kind == CacheKind::Count ? s.counts : s.classes)++;
  s.hits = hits_;
  s.misses = misses_;
  s.skipped_lines = skipped_;
  return s;
}

void CacheStore::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  hits_ = misses_ = 0;
  if (file_) {
    std::lock_guard flock(file_mutex_);
    std::ofstream out(*file_, std::ios::trunc);
    if (!out)
      throw Error(ErrorKind::Usage, "cannot write cache file " + file_->string());
  }
}

void CacheStore::append(const std::string &bytes, const Entry &e) {
  if (!file_)
    return;
  nlohmann::json line = {{"key", key_hex(bytes)}, {"kind", kind_name(e.kind)}};
  if (e.kind == CacheKind::Count)
    line["value"] = e.count;
  else
    line["value"] = {e.cls.a, e.cls.b, e.cls.c};
  line["provenance"] = e.provenance;

  std::lock_guard lock(file_mutex_);
  std::ofstream out(*file_, std::ios::app);
  if (!out)
    throw Error(ErrorKind::Usage, "cannot write cache file " + file_->string());
  out << line.dump() << '\n';
}

void CacheStore::load() {
  std::ifstream in(*file_);
  if (!in)
    return; // absent file: cold cache
  std::string text;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (text.empty())
      continue;
    try {
      nlohmann::json j = nlohmann::json::parse(text);
      const std::string kind = j.at("kind").get<std::string>();
      const CanonicalKey key = CanonicalKey::from_hex(j.at("key").get<std::string>());
      if (key.swap_flag || key.bytes.empty())
        throw Error(ErrorKind::Parse, "malformed key");
      Entry e;
      e.provenance = j.value("provenance", nlohmann::json());
      if (kind == "count") {
        e.kind = CacheKind::Count;
        e.count = j.at("value").get<std::int64_t>();
      } else if (kind == "class") {
        e.kind = CacheKind::Class;
        const auto v = j.at("value").get<std::vector<std::int64_t>>();
        if (v.size() != 3)
          throw Error(ErrorKind::Parse, "class value must have three entries");
        e.cls = {v[0], v[1], v[2]};
      } else {
        throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
      }
      entries_[slot(key.bytes, e.kind)] = std::move(e);
    } catch (const std::exception &ex) {
      ++skipped_;
      std::string msg = "cache " + file_->string() + ":" + std::to_string(lineno) +
                        ": entry ignored (" + ex.what() + ")";
      std::cerr << "warning: " << msg << '\n';
      warnings_.push_back(std::move(msg));
    }
  }
}

} // namespace scount
