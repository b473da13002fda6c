#include <iostream>

#include <CLI11.hpp>

#include "fifogap/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Welfare gap between FIFO inclusion and optimal block packing"};
  app.require_subcommand(1);

  fifogap::PackOptions pack;
  auto* pack_cmd = app.add_subcommand("pack", "Pack one instance file and report all packings");
  pack_cmd->add_option("instance", pack.instance_path, "Instance file (header 'b g B- B+')")
      ->required();
  pack_cmd->add_option("--exact-limit", pack.exact_limit, "Largest n solved exactly")
      ->capture_default_str();
  pack_cmd->add_flag("--json", pack.json, "Emit JSON instead of key: value lines");

  fifogap::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the block-size sweep experiment to CSV");
  sweep_cmd->add_option("config", sweep.config_path, "Experiment config file")->required();
  sweep_cmd->add_option("--seed", sweep.seed, "Override master_seed");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path (overrides 'out' in config)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (default: FIFOGAP_THREADS)")
      ->check(CLI::NonNegativeNumber);

  fifogap::PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render one SVG per distribution from a sweep CSV");
  plot_cmd->add_option("csv", plot.csv_path, "Sweep CSV")->required();
  plot_cmd->add_option("--out", plot.out_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fifogap::kExitInput;
  }

  if (*pack_cmd) return fifogap::cmd_pack(pack, std::cout, std::cerr);
  if (*sweep_cmd) return fifogap::cmd_sweep(sweep, std::cout, std::cerr);
  return fifogap::cmd_plot(plot, std::cout, std::cerr);
}
