#pragma once

#include "diracforge/characters/character.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace diracforge::characters {

/// On-disk JSON store of irreducible characters keyed by (system label,
/// highest weight). Writes go through a temporary file and a rename, so
/// concurrent readers never see partial entries; racing writers store the
/// same bytes.
class CharacterCache {
 public:
  explicit CharacterCache(std::filesystem::path dir);

  /// $DIRACFORGE_CACHE, or ".diracforge-cache" in the working directory.
  static std::filesystem::path defaultDirectory();

  std::optional<FormalCharacter> load(const RootSystemPtr& rs, const Weight& lambda) const;
  void store(const Weight& lambda, const FormalCharacter& chi);

  struct Stats {
    size_t entries = 0;
    uintmax_t bytes = 0;
  };
  Stats stats() const;
  void clear();

  const std::filesystem::path& directory() const { return dir_; }

  /// Canonical serialization; a cache hit reproduces these bytes exactly.
  static std::string serialize(const std::string& label, const Weight& lambda, const FormalCharacter& chi);
  static std::string fileName(const std::string& label, const Weight& lambda);

 private:
  std::filesystem::path dir_;
  mutable std::mutex writeMutex_;
};

}  // namespace diracforge::characters
