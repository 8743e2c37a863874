#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "casimir/character.hpp"

namespace casimir {

/// Memo of irreducible characters for one root system, optionally backed by a
/// directory of JSON files (one per highest weight). Disk writes go to a
/// temporary file that is renamed into place, so several processes may share
/// a directory. Unreadable or mismatched files are ignored and recomputed.
class IrreducibleCache {
 public:
  explicit IrreducibleCache(const RootSystem& rs, std::optional<std::filesystem::path> dir = std::nullopt);

  std::shared_ptr<const Character> get(const Weight& lambda);

  const RootSystem& root_system() const { return rs_; }
  std::size_t disk_hits() const { return disk_hits_; }
  std::size_t computed() const { return computed_; }

 private:
  std::shared_ptr<const Character> load(const Weight& lambda) const;
  void store(const Weight& lambda, const Character& chi) const;

  const RootSystem& rs_;
  std::optional<std::filesystem::path> dir_;
  std::mutex mutex_;
  std::unordered_map<Weight, std::shared_ptr<const Character>, WeightHash> memo_;
  std::atomic<std::size_t> disk_hits_{0};
  std::atomic<std::size_t> computed_{0};
};

}  // namespace casimir
