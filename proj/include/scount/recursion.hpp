#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include <json.hpp>

#include "scount/cache.hpp"
#include "scount/calligraph.hpp"
#include "scount/s2class.hpp"
#include "scount/sphere.hpp"
#include "scount/split.hpp"

namespace scount {

struct EngineConfig {
  FallbackConfig fallback;
  SplitSearchConfig split;
  /// When false, L, R and C are not recognised structurally and go through
  /// the linear system like any other calligraph.
  bool use_base_cases = true;
  int max_depth = 64;
  /// Record a recursion tree for every top-level call.
  bool trace = false;
};

/// [F] . (a, b, c) = value for one gadget F.
struct ClassEquation {
  Gadget gadget;
  bool minimally_rigid = false;
  std::int64_t value = 0;
};

struct ClassResult {
  S2Class cls;
  /// "base-case", "equations" or "cache".
  std::string method;
  /// Filled when method is "equations".
  std::vector<ClassEquation> equations;
};

struct CountResult {
  std::int64_t count = 0;
  /// "split", "fallback" or "cache".
  std::string method;
};

/// Realization counting by recursive calligraphic splitting, with a
/// numerical fallback for graphs without a non-trivial split.
class Engine {
public:
  explicit Engine(EngineConfig cfg = {},
                  std::shared_ptr<CacheStore> cache = std::make_shared<CacheStore>());

  /// Number of realizations on the sphere up to rotation. Throws a Domain
  /// error unless g is minimally rigid; fallback failures propagate as
  /// NumericalFailure.
  CountResult count_realizations(const Graph &g);
  ClassResult s2_class(const MarkedCalligraph &h);

  /// Recursion tree of the last top-level call (null unless cfg.trace).
  const nlohmann::json &trace() const { return trace_; }
  const EngineConfig &config() const { return cfg_; }
  CacheStore &cache() { return *cache_; }

private:
  CountResult count_impl(const Graph &g, int depth, int bound, nlohmann::json *node);
  ClassResult class_impl(const MarkedCalligraph &h, int depth, int bound,
                         nlohmann::json *node);

  EngineConfig cfg_;
  std::shared_ptr<CacheStore> cache_;
  nlohmann::json trace_;
};

/// Name of a gadget: "L", "R" or "C".
const char *gadget_name(Gadget g);

} // namespace scount
