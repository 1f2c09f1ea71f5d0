#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace lt2d {

/// Shortest round-trippable decimal form of a double ("%.17g" trimmed),
/// used everywhere a number reaches a file so that reruns are
/// byte-identical on the same platform.
std::string format_double(double v);

/// Minimal CSV emitter: one header, rows of doubles.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::string& header);
  void row(const std::vector<double>& values);
  ~CsvWriter();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
};

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace lt2d
