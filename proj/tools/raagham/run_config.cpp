#include "run_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <unistd.h>

#include "raagham/errors.hpp"

namespace raagham::cli {

void RunConfig::validate() const {
  if (N < 2) throw InputError("--N must be at least 2");
  if (!(tol > 0)) throw InputError("--tol must be positive");
  for (double e : eps) {
    if (!(e > 0)) throw InputError("--eps values must be positive");
  }
  if (grid == 0) throw InputError("--grid must be positive");
  if (samples == 0) throw InputError("--samples must be positive");
}

RunConfig merge_config_file(RunConfig base, const std::string& path,
                            const std::vector<std::string>& explicit_flags) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw InputError("config '" + path + "' must hold a JSON object");
  auto given = [&](const std::string& k) {
    return std::find(explicit_flags.begin(), explicit_flags.end(), k) != explicit_flags.end();
  };
  try {
    for (const auto& [key, value] : j.items()) {
      if (given(key)) continue;
      if (key == "seed") base.seed = value.get<std::uint64_t>();
      else if (key == "N") base.N = value.get<int>();
      else if (key == "depth") base.depth = value.get<std::size_t>();
      else if (key == "eps") base.eps = value.get<std::vector<double>>();
      else if (key == "tol") base.tol = value.get<double>();
      else if (key == "grid") base.grid = value.get<std::size_t>();
      else if (key == "max_sheets") base.max_sheets = value.get<std::size_t>();
      else if (key == "samples") base.samples = value.get<std::size_t>();
      else if (key == "out") base.out = value.get<std::string>();
      else throw InputError("config '" + path + "': unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config '" + path + "': " + e.what());
  }
  return base;
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw InputError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace raagham::cli
