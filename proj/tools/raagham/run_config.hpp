#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace raagham::cli {

/// Settings shared by the subcommands. Values come from the command line,
/// then from the --config JSON file for anything not given there, then from
/// the defaults below.
struct RunConfig {
  std::uint64_t seed = 7;
  int N = 2;
  std::size_t depth = 6;
  std::vector<double> eps{0.1, 0.01, 0.001};
  double tol = 1e-6;
  std::size_t grid = 24;
  std::size_t max_sheets = 2;
  std::size_t samples = 1000;
  std::optional<std::filesystem::path> out;

  /// Throws InputError for N < 2 or a non-positive tolerance or eps.
  void validate() const;
};

/// Fields present in the JSON object override `base` unless the matching
/// name is in `explicit_flags`. Unknown keys are rejected.
RunConfig merge_config_file(RunConfig base, const std::string& path,
                            const std::vector<std::string>& explicit_flags);

/// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

/// Reads a whole file; InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace raagham::cli
