#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/faces.hpp"
#include "json.hpp"

namespace arrcomb {

std::string sha256_hex(const std::string& data);

/// JSON results on disk, one file per (arrangement, operation), named by the
/// SHA-256 of the canonical arrangement JSON and the operation. Each file
/// also stores its input so a hash collision or a stale file reads as a miss.
class ResultCache {
 public:
  /// Disabled when dir is empty.
  explicit ResultCache(std::string dir = {});

  /// ARRCOMB_CACHE_DIR when set, otherwise flag_dir.
  static std::string resolve_dir(const std::string& flag_dir);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<nlohmann::json> load(const Arrangement& a, const std::string& operation) const;
  void store(const Arrangement& a, const std::string& operation, const nlohmann::json& result) const;

  std::string path_for(const Arrangement& a, const std::string& operation) const;

 private:
  std::string dir_;
};

/// Faces through the cache. A loaded face list is spot-checked: every witness
/// must reproduce its sign vector and flat. With `recompute` the faces are
/// enumerated afresh and compared with the cached list; a difference throws
/// Error("cache_mismatch").
std::vector<Face> cached_faces(const ResultCache& cache, const Arrangement& a, Execution exec, bool recompute = false);

}  // namespace arrcomb
