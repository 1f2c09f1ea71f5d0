#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lt2d::experiments {

inline constexpr std::string_view kCodeVersion = "longtime2d 0.1.0";

/// Reproducibility record for one run directory. Written last; writing
/// fails if any referenced output is missing.
struct RunManifest {
  std::string config_hash;  // FNV-1a 64 of the canonical config text
  std::uint64_t seed = 0;
  std::string code_version = std::string(kCodeVersion);
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;
  std::vector<std::string> outputs;      // paths relative to the run dir
  std::map<std::string, bool> checks;    // invariant pass/fail flags
};

std::string fnv1a_hex(std::string_view data);
std::string iso8601_utc_now();

void write_manifest(const std::filesystem::path& dir, const RunManifest& m);

}  // namespace lt2d::experiments
