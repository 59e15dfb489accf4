#include "diracforge/characters/cache.hpp"

#include "diracforge/errors.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace diracforge::characters {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json weightJson(const Weight& w) {
  json out = json::array();
  for (const auto& x : w) out.push_back(str(x));
  return out;
}

Weight weightFrom(const json& j) {
  Weight w;
  for (const auto& x : j) w.push_back(parseRational(x.get<std::string>()));
  return w;
}

}  // namespace

CharacterCache::CharacterCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CharacterCache::defaultDirectory() {
  if (const char* env = std::getenv("DIRACFORGE_CACHE"); env && *env) return env;
  return ".diracforge-cache";
}

std::string CharacterCache::fileName(const std::string& label, const Weight& lambda) {
  std::string key = label + "|" + str(lambda);
  std::string readable;
  for (char c : label) readable += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  std::ostringstream name;
  name << readable << '-' << std::hex << fnv1a(key) << ".json";
  return name.str();
}

std::string CharacterCache::serialize(const std::string& label, const Weight& lambda, const FormalCharacter& chi) {
  json entries = json::array();
  for (const auto& [w, m] : chi.entries) entries.push_back(json::array({weightJson(w), m}));
  json doc = {{"label", label}, {"highest", weightJson(lambda)}, {"entries", entries}};
  return doc.dump() + "\n";
}

std::optional<FormalCharacter> CharacterCache::load(const RootSystemPtr& rs, const Weight& lambda) const {
  fs::path file = dir_ / fileName(rs->label(), lambda);
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    json doc = json::parse(buf.str());
    // hash collisions or stale files simply miss
    if (doc.at("label") != rs->label() || weightFrom(doc.at("highest")) != lambda) return std::nullopt;
    FormalCharacter chi(rs, Basis::Weight);
    for (const auto& e : doc.at("entries")) {
      Weight w = weightFrom(e.at(0));
      rs->check(w);
      chi.add(w, e.at(1).get<long>());
    }
    return chi;
  } catch (const json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void CharacterCache::store(const Weight& lambda, const FormalCharacter& chi) {
  std::lock_guard lock(writeMutex_);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(ErrorKind::IoError, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  static std::atomic<unsigned> counter{0};
  fs::path target = dir_ / fileName(chi.system->label(), lambda);
  std::ostringstream tmpName;
  tmpName << target.filename().string() << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '-'
          << counter++;
  fs::path tmp = dir_ / tmpName.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) fail(ErrorKind::IoError, "cannot write " + tmp.string());
    out << serialize(chi.system->label(), lambda, chi);
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::IoError, "cannot install cache entry " + target.string());
  }
}

CharacterCache::Stats CharacterCache::stats() const {
  Stats s;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return s;
  for (const auto& entry : fs::directory_iterator(dir_))
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      ++s.entries;
      s.bytes += entry.file_size();
    }
  return s;
}

void CharacterCache::clear() {
  std::lock_guard lock(writeMutex_);
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return;
  // move aside first so readers see either the old directory or nothing
  fs::path doomed = dir_;
  doomed += ".clearing";
  fs::remove_all(doomed, ec);
  fs::rename(dir_, doomed, ec);
  if (ec) fail(ErrorKind::IoError, "cannot clear cache " + dir_.string() + ": " + ec.message());
  fs::remove_all(doomed, ec);
}

}  // namespace diracforge::characters
