#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netdyn/measures.hpp"
#include "netdyn/synth.hpp"
#include "netdyn/windowing.hpp"

namespace netdyn::cli {

/// Requested coefficient vectors: Table II indices and explicit vectors.
struct CombinationSelection {
  std::vector<int> indices;  // sorted, unique, each in 1..31
  std::vector<CoefficientVector> custom;
};

/// Parses "all", "7,31", or colon-separated 5-vectors such as
/// "1:0:0.5:0:1", mixed freely in one comma-separated list.
CombinationSelection parse_combinations(const std::string& text);

struct RunConfig {
  std::filesystem::path input;
  WindowSpec windows;
  CombinationSelection combinations;
  std::filesystem::path output_dir;
  std::string prefix = "series";
  bool emit_svg = false;
  bool normalized_csv = false;
  bool skip_bad_lines = false;
};

/// Writes `text` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

void cmd_synth(const SynthSpec& spec, const std::filesystem::path& output,
               std::ostream& out);

/// Slices, diffs and measures; writes all outputs only once everything
/// has been computed.
void cmd_run(const RunConfig& config, std::ostream& out, std::ostream& warn);

void cmd_diff(const std::filesystem::path& a, const std::filesystem::path& b,
              std::ostream& out);

void cmd_slice(const std::filesystem::path& input, const WindowSpec& windows,
               const std::filesystem::path& output_dir, bool skip_bad_lines,
               std::ostream& out, std::ostream& warn);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace netdyn::cli
