#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fifogap/experiment.hpp"
#include "fifogap/model.hpp"

namespace fifogap {

/// Parsed instance file: header `b g B- B+`, then one `q_tilde gas` pair per
/// line in arrival order. Blank lines and `#` comments are skipped.
struct InstanceFile {
  BlockParams params;
  std::vector<Transaction> transactions;
};

/// Throws ValidationError("line N: ...") on syntax or range errors.
InstanceFile parse_instance_file(std::istream& in);

/// Experiment configuration file: `key = value` lines with the
/// ExperimentConfig field names. `distribution` may repeat; each occurrence
/// yields one run sharing all other keys. `out` names the CSV path.
struct CliConfig {
  std::vector<ExperimentConfig> runs;
  std::optional<std::string> out;
};

/// Parses and validates every run. Throws ValidationError("line N: ...").
CliConfig parse_config_file(std::istream& in);

/// Parses a list of positive reals separated by commas and/or whitespace.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace fifogap
