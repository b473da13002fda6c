#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fifogap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;

struct PackOptions {
  std::string instance_path;
  std::size_t exact_limit = 30;
  bool json = false;
};

struct SweepOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> threads;
};

struct PlotOptions {
  std::string csv_path;
  std::string out_dir = ".";
};

/// Thread count: explicit flag, else FIFOGAP_THREADS, else 0 (runtime default).
int resolve_threads(std::optional<int> flag);

// Each command writes its report to `out` only after all work succeeded, and
// diagnostics to `err`. Returns the process exit code.
int cmd_pack(const PackOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);
int cmd_plot(const PlotOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace fifogap
