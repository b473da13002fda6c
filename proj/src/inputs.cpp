#include "fifogap/inputs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include <fmt/format.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

std::string strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

template <class T>
T parse_scalar(std::string_view s, std::string_view what) {
  T v{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError(fmt::format("cannot parse {} from '{}'", what, s));
  }
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ValidationError(fmt::format("expected a boolean, got '{}'", s));
}

}  // namespace

InstanceFile parse_instance_file(std::istream& in) {
  InstanceFile file;
  bool have_header = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    try {
      const auto tok = tokens(line);
      if (!have_header) {
        if (tok.size() != 4) throw ValidationError("header must be 'b g B- B+'");
        file.params.gas_limit = parse_scalar<double>(tok[0], "gas limit b");
        file.params.gas_price = parse_scalar<double>(tok[1], "gas price g");
        file.params.min_tx_gas = parse_scalar<double>(tok[2], "B-");
        file.params.max_tx_gas = parse_scalar<double>(tok[3], "B+");
        file.params.validate();
        have_header = true;
        continue;
      }
      if (tok.size() != 2) throw ValidationError("transaction line must be 'q_tilde gas'");
      Transaction tx{parse_scalar<double>(tok[0], "q_tilde"), parse_scalar<double>(tok[1], "gas")};
      if (!(tx.gross_utility >= 0.0)) throw ValidationError("q_tilde must be nonnegative");
      if (!(tx.gas >= file.params.min_tx_gas && tx.gas <= file.params.max_tx_gas)) {
        throw ValidationError(fmt::format("gas {} outside [{}, {}]", tx.gas,
                                          file.params.min_tx_gas, file.params.max_tx_gas));
      }
      file.transactions.push_back(tx);
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("line {}: {}", lineno, e.what()));
    }
  }
  if (!have_header) throw ValidationError(fmt::format("line {}: missing header", lineno + 1));
  return file;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::vector<double> out;
  for (const auto& t : tokens(spaced)) out.push_back(parse_scalar<double>(t, "number"));
  return out;
}

CliConfig parse_config_file(std::istream& in) {
  ExperimentConfig base;
  base.block_sizes.clear();
  std::vector<UtilityDistribution> dists;
  CliConfig cfg;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    try {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ValidationError("expected 'key = value'");
      const std::string key = strip(line.substr(0, eq));
      const std::string value = strip(line.substr(eq + 1));
      if (key == "distribution") {
        dists.push_back(parse_distribution(value));
      } else if (key == "n_transactions") {
        base.n_transactions = parse_scalar<std::size_t>(value, key);
      } else if (key == "gas_lo") {
        base.gas_lo = parse_scalar<double>(value, key);
      } else if (key == "gas_hi") {
        base.gas_hi = parse_scalar<double>(value, key);
      } else if (key == "gas_price") {
        base.gas_price = parse_scalar<double>(value, key);
      } else if (key == "block_sizes") {
        base.block_sizes = parse_number_list(value);
      } else if (key == "trials_per_size") {
        base.trials_per_size = parse_scalar<std::size_t>(value, key);
      } else if (key == "master_seed") {
        base.master_seed = parse_scalar<std::uint64_t>(value, key);
      } else if (key == "exact_solver_limit") {
        base.exact_solver_limit = parse_scalar<std::size_t>(value, key);
      } else if (key == "fixed_mempool") {
        base.fixed_mempool = parse_bool(value);
      } else if (key == "out") {
        cfg.out = value;
      } else {
        throw ValidationError(fmt::format("unknown key '{}'", key));
      }
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("line {}: {}", lineno, e.what()));
    }
  }
  if (dists.empty()) throw ValidationError("config: no 'distribution' given");
  for (const auto& d : dists) {
    ExperimentConfig run = base;
    run.distribution = d;
    try {
      run.validate();
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("config: {}", e.what()));
    }
    cfg.runs.push_back(std::move(run));
  }
  return cfg;
}

}  // namespace fifogap
