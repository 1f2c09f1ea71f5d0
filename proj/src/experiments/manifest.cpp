#include "lt2d/experiments/manifest.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "lt2d/common/io.hpp"

namespace lt2d::experiments {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& m) {
  for (const auto& rel : m.outputs)
    if (!std::filesystem::exists(dir / rel))
      throw std::runtime_error("manifest references missing output: " + rel);

  nlohmann::json j;
  j["config_hash"] = m.config_hash;
  j["seed"] = m.seed;
  j["code_version"] = m.code_version;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  j["outputs"] = m.outputs;
  j["checks"] = m.checks;
  write_text_file(dir / "manifest.json", j.dump(2) + "\n");
}

}  // namespace lt2d::experiments
