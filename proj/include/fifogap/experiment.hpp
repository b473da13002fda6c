#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fifogap/dists.hpp"
#include "fifogap/model.hpp"

namespace fifogap {

struct ExperimentConfig {
  UtilityDistribution distribution = Exponential{2.5};
  std::size_t n_transactions = 1000;
  double gas_lo = 1.0;
  double gas_hi = 3.0;
  double gas_price = 0.0;
  std::vector<double> block_sizes;
  std::size_t trials_per_size = 100;
  std::uint64_t master_seed = 0;
  std::size_t exact_solver_limit = 20;
  // Draw one mempool per distribution and only re-permute arrivals per trial.
  bool fixed_mempool = false;

  /// Throws ValidationError on any violated invariant.
  void validate() const;
};

/// 1000 transactions, gas U[1,3], blocks 20..2000, 100 trials per block size.
ExperimentConfig reference_config(UtilityDistribution d, std::uint64_t seed = 0);

/// Seed for one (distribution, block size, trial) cell.
std::uint64_t trial_seed(const ExperimentConfig& cfg, std::size_t block_index, std::size_t trial);

struct TrialRecord {
  std::string distribution;
  double block_size = 0.0;
  std::size_t trial = 0;
  std::uint64_t sub_seed = 0;
  std::size_t n = 0;
  double p0 = 0.0;
  double r_star = 0.0;
  double p_fifo = 0.0;
  std::optional<double> p_star;
  std::size_t k_bar = 0;
  std::optional<std::uint64_t> m;  // unset for an empty instance (m = +∞)
  std::optional<double> gap_lower;
  std::optional<double> ratio_lb;     // p0 / p_fifo
  std::optional<double> ratio_ub;     // r_star / p_fifo
  std::optional<double> bound_ratio;  // L_worst / U
  bool condition_holds = false;

  bool operator==(const TrialRecord&) const = default;
};

/// Thrown when a record violates p0 ≤ p★ ≤ r★ or p^FIFO ≤ p★ beyond
/// relative slack 1e-9. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kSandwichSlack = 1e-9;

/// true iff lhs ≤ rhs up to kSandwichSlack relative slack.
bool le_with_slack(double lhs, double rhs);

/// The arrival-ordered instance a trial packs (sampled, filtered, permuted).
ProblemInstance build_trial_instance(const ExperimentConfig& cfg, std::size_t block_index,
                                     std::size_t trial);

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t block_index, std::size_t trial);

/// Records ordered by (block index, trial). Trials run on up to `threads`
/// OpenMP threads (0 = runtime default); the output does not depend on it.
std::vector<TrialRecord> run_sweep(const ExperimentConfig& cfg, int threads = 0);

/// Single-threaded reference for run_sweep.
std::vector<TrialRecord> run_sweep_serial(const ExperimentConfig& cfg);

struct SummaryStat {
  std::size_t count = 0;
  std::optional<double> mean;
  std::optional<double> stddev;  // sample standard deviation; 0 for one value
};

struct BlockSummary {
  std::string distribution;
  double block_size = 0.0;
  std::size_t trials = 0;
  std::size_t undefined_ratio_count = 0;  // records with p_fifo = 0
  SummaryStat ratio_lb;
  SummaryStat ratio_ub;
  SummaryStat bound_ratio;
  SummaryStat gap_lower;
};

/// Groups by (distribution, block_size) in first-appearance order.
/// Throws ValidationError on empty input.
std::vector<BlockSummary> aggregate(const std::vector<TrialRecord>& records);

SummaryStat summarize(const std::vector<double>& values);

}  // namespace fifogap
