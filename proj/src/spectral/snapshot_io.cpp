#include "lt2d/spectral/snapshot_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

#include "lt2d/common/io.hpp"

namespace lt2d::spectral {

void write_snapshot(const std::filesystem::path& base,
                    const std::string& field_name, const RVec& phys,
                    const Grid2D& g, double time) {
  if (phys.size() != g.size())
    throw std::invalid_argument("write_snapshot: size mismatch");
  std::filesystem::path bin = base;
  bin += ".bin";
  std::ofstream out(bin, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + bin.string());
  out.write(reinterpret_cast<const char*>(phys.data()),
            static_cast<std::streamsize>(phys.size() * sizeof(double)));

  nlohmann::json sidecar;
  sidecar["n"] = g.n();
  sidecar["length"] = g.length();
  sidecar["time"] = time;
  sidecar["field"] = field_name;
  std::filesystem::path js = base;
  js += ".json";
  write_text_file(js, sidecar.dump(2) + "\n");
}

Snapshot read_snapshot(const std::filesystem::path& base) {
  std::filesystem::path js = base;
  js += ".json";
  const auto sidecar = nlohmann::json::parse(read_text_file(js));
  Snapshot s;
  s.n = sidecar.at("n").get<int>();
  s.length = sidecar.at("length").get<double>();
  s.time = sidecar.at("time").get<double>();
  s.field = sidecar.at("field").get<std::string>();

  std::filesystem::path bin = base;
  bin += ".bin";
  std::ifstream in(bin, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + bin.string());
  s.values.resize(static_cast<std::size_t>(s.n) * s.n);
  in.read(reinterpret_cast<char*>(s.values.data()),
          static_cast<std::streamsize>(s.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("snapshot truncated: " + bin.string());
  return s;
}

}  // namespace lt2d::spectral
