#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace moire::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kNoAlignment = 3 };

// Every option of a run, resolved; written as config.json next to results.
struct RunConfig {
  std::string command;
  int scheme = 1;
  std::size_t window = 0;
  std::size_t shifts = 0;
  std::size_t min_run = 3;
  std::size_t max_event_length = 8;
  std::size_t max_events = 3;
  double threshold = 0.25;
  std::size_t dilation = 4;
  double r0 = 64.0;
  double dr0 = 16.0;
  std::size_t rings = 0;
  std::size_t raster = 1024;
  double rotation = 0.0;
  std::size_t supersample = 1;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::size_t length = 48;
  std::string out_dir;
  std::string format = "pgm";
};

std::string config_json(const RunConfig& config);

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moire::cli
