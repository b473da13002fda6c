#include "fifogap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "fifogap/bounds.hpp"
#include "fifogap/error.hpp"
#include "fifogap/experiment.hpp"
#include "fifogap/inputs.hpp"
#include "fifogap/packing.hpp"
#include "fifogap/records_csv.hpp"
#include "fifogap/svg_plot.hpp"

namespace fifogap {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  return in;
}

std::string bits(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s.push_back(b ? '1' : '0');
  return s;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("undefined");
}

std::string fmt_mean(const SummaryStat& s) {
  return s.mean ? fmt::format("{:.6g}", *s.mean) : std::string("undefined");
}

}  // namespace

int resolve_threads(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FIFOGAP_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      return 0;
    }
  }
  return 0;
}

int cmd_pack(const PackOptions& opt, std::ostream& out, std::ostream& err) {
  std::ostringstream report;
  try {
    auto in = open_input(opt.instance_path);
    const InstanceFile file = parse_instance_file(in);
    const ProblemInstance inst = build_instance(file.transactions, file.params);

    const GreedyResult greedy = greedy_pack(inst);
    const RelaxationSolution relax = solve_relaxation(inst);
    const Packing fifo = fifo_pack(inst);
    std::optional<Packing> exact;
    if (inst.size() <= opt.exact_limit) exact = exact_pack(inst, opt.exact_limit);
    std::optional<GapBounds> gap;
    if (!inst.empty()) gap = compute_gap_bounds(inst, greedy.packing);
    const auto& cert = greedy.certificate;
    const bool m_unbounded = cert.m == ApproxCertificate::kUnbounded;

    if (opt.json) {
      nlohmann::json j;
      j["n"] = inst.size();
      j["dropped"] = file.transactions.size() - inst.size();
      j["params"] = {{"b", file.params.gas_limit},
                     {"g", file.params.gas_price},
                     {"B-", file.params.min_tx_gas},
                     {"B+", file.params.max_tx_gas}};
      j["net_utilities"] = std::vector<double>(inst.net_utilities().begin(), inst.net_utilities().end());
      j["gas"] = std::vector<double>(inst.gas().begin(), inst.gas().end());
      j["p0"] = greedy.packing.objective;
      j["greedy_included"] = bits(greedy.packing.included);
      j["r_star"] = relax.objective;
      j["relaxation_x"] = relax.x;
      j["relaxation_fractional_index"] =
          relax.fractional_index ? nlohmann::json(*relax.fractional_index) : nlohmann::json(nullptr);
      j["p_fifo"] = fifo.objective;
      j["fifo_included"] = bits(fifo.included);
      j["p_star"] = exact ? nlohmann::json(exact->objective) : nlohmann::json(nullptr);
      j["exact_included"] = exact ? nlohmann::json(bits(exact->included)) : nlohmann::json(nullptr);
      j["certificate"] = {{"m", m_unbounded ? nlohmann::json("inf") : nlohmann::json(cert.m)},
                          {"applicable", cert.applicable() && !m_unbounded},
                          {"upper_bound", std::isfinite(cert.upper_bound)
                                              ? nlohmann::json(cert.upper_bound)
                                              : nlohmann::json("inf")}};
      if (gap) {
        j["gap_bounds"] = {{"k_bar", gap->k_bar},       {"q_plus", gap->q_plus},
                           {"q_minus", gap->q_minus},   {"eta", gap->eta},
                           {"L", gap->L},               {"L_worst", gap->L_worst},
                           {"U", gap->U},               {"gap_lower", gap->gap_lower},
                           {"condition_holds", gap->condition_holds},
                           {"ratio_bound", optional_json(gap->ratio_bound)}};
      } else {
        j["gap_bounds"] = nullptr;
      }
      report << j.dump(2) << '\n';
    } else {
      report << fmt::format("n: {}\n", inst.size());
      report << fmt::format("dropped_negative_net: {}\n", file.transactions.size() - inst.size());
      report << fmt::format("p0: {}\n", format_double(greedy.packing.objective));
      report << fmt::format("greedy_included: {}\n", bits(greedy.packing.included));
      report << fmt::format("r_star: {}\n", format_double(relax.objective));
      report << "relaxation_x:";
      for (double x : relax.x) report << ' ' << format_double(x);
      report << '\n';
      report << fmt::format("relaxation_fractional_index: {}\n",
                            relax.fractional_index ? std::to_string(*relax.fractional_index)
                                                   : std::string("none"));
      report << fmt::format("p_fifo: {}\n", format_double(fifo.objective));
      report << fmt::format("fifo_included: {}\n", bits(fifo.included));
      if (exact) {
        report << fmt::format("p_star: {}\n", format_double(exact->objective));
        report << fmt::format("exact_included: {}\n", bits(exact->included));
      } else {
        report << fmt::format("p_star: skipped (n > {})\n", opt.exact_limit);
      }
      report << fmt::format("certificate_m: {}\n", m_unbounded ? std::string("inf")
                                                                : std::to_string(cert.m));
      report << fmt::format("certificate_upper_bound: {}\n",
                            std::isfinite(cert.upper_bound) ? format_double(cert.upper_bound)
                                                            : std::string("inf"));
      if (gap) {
        report << fmt::format("k_bar: {}\n", gap->k_bar);
        report << fmt::format("q_plus: {}\n", format_double(gap->q_plus));
        report << fmt::format("q_minus: {}\n", format_double(gap->q_minus));
        report << fmt::format("eta: {}\n", format_double(gap->eta));
        report << fmt::format("L: {}\n", format_double(gap->L));
        report << fmt::format("L_worst: {}\n", format_double(gap->L_worst));
        report << fmt::format("U: {}\n", format_double(gap->U));
        report << fmt::format("gap_lower: {}\n", format_double(gap->gap_lower));
        report << fmt::format("condition_holds: {}\n", gap->condition_holds);
        report << fmt::format("ratio_bound: {}\n", fmt_opt(gap->ratio_bound));
      } else {
        report << "gap_bounds: undefined (empty instance)\n";
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << opt.instance_path << ": " << e.what() << '\n';
    return kExitInput;
  }
  out << report.str();
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    auto in = open_input(opt.config_path);
    cfg = parse_config_file(in);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << opt.config_path << ": " << e.what() << '\n';
    return kExitInput;
  }
  const auto out_path = opt.out ? opt.out : cfg.out;
  if (!out_path) {
    err << "error: no output path (use --out or 'out =' in the config)\n";
    return kExitInput;
  }
  const int threads = resolve_threads(opt.threads);

  std::vector<TrialRecord> records;
  try {
    for (auto run : cfg.runs) {
      if (opt.seed) run.master_seed = *opt.seed;
      auto part = run_sweep(run, threads);
      records.insert(records.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
    }
  } catch (const ValidationError& e) {
    err << opt.config_path << ": " << e.what() << '\n';
    return kExitInput;
  }

  std::ofstream file(*out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << fmt::format("error: cannot write '{}'\n", *out_path);
    return kExitIo;
  }
  write_records_csv(file, records);
  file.close();
  if (!file) {
    err << fmt::format("error: failed writing '{}'\n", *out_path);
    return kExitIo;
  }

  for (const auto& s : aggregate(records)) {
    out << fmt::format(
        "{} block_size={:g} trials={} mean_ratio_lb={} mean_ratio_ub={} mean_bound_ratio={} "
        "mean_gap_lower={} undefined_ratios={}\n",
        s.distribution, s.block_size, s.trials, fmt_mean(s.ratio_lb), fmt_mean(s.ratio_ub),
        fmt_mean(s.bound_ratio), fmt_mean(s.gap_lower), s.undefined_ratio_count);
  }
  out << fmt::format("wrote {} records to {}\n", records.size(), *out_path);
  return kExitOk;
}

int cmd_plot(const PlotOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<TrialRecord> records;
  try {
    auto in = open_input(opt.csv_path);
    records = read_records_csv(in);
    if (records.empty()) throw ValidationError("no data rows (header only)");
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << opt.csv_path << ": " << e.what() << '\n';
    return kExitInput;
  }

  std::vector<std::string> order;
  std::map<std::string, std::vector<BlockSummary>> by_dist;
  for (auto& s : aggregate(records)) {
    if (!by_dist.count(s.distribution)) order.push_back(s.distribution);
    by_dist[s.distribution].push_back(std::move(s));
  }

  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  std::vector<std::string> written;
  for (const auto& dist : order) {
    const std::string svg = render_distribution_svg(dist, by_dist.at(dist));
    const auto path = (std::filesystem::path(opt.out_dir) / (svg_file_stem(dist) + ".svg")).string();
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << svg)) {
      err << fmt::format("error: cannot write '{}'\n", path);
      return kExitIo;
    }
    written.push_back(path);
  }
  for (const auto& p : written) out << p << '\n';
  return kExitOk;
}

}  // namespace fifogap
