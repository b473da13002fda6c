#include "fifogap/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <utility>

#include <fmt/format.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "fifogap/bounds.hpp"
#include "fifogap/error.hpp"
#include "fifogap/model.hpp"
#include "fifogap/packing.hpp"

namespace fifogap {
namespace {

constexpr std::uint64_t kFixedMempoolKey = 0xf1f0'0000'0000'0001ULL;

std::vector<Transaction> draw_mempool(const ExperimentConfig& cfg, RandomStream& rng) {
  const auto utilities = sample(cfg.distribution, cfg.n_transactions, rng);
  const auto gas = sample_gas(cfg.gas_lo, cfg.gas_hi, cfg.n_transactions, rng);
  std::vector<Transaction> txs(cfg.n_transactions);
  for (std::size_t j = 0; j < txs.size(); ++j) txs[j] = {utilities[j], gas[j]};
  return txs;
}

std::optional<double> safe_ratio(double num, double den) {
  if (!(den > 0.0)) return std::nullopt;
  return num / den;
}

void check_sandwich(const TrialRecord& r) {
  auto fail = [&](const char* what) {
    throw InvariantViolation(fmt::format("{} violated for {} block {} trial {} (seed {})", what,
                                         r.distribution, r.block_size, r.trial, r.sub_seed));
  };
  if (!le_with_slack(r.p0, r.r_star)) fail("p0 <= r_star");
  if (!le_with_slack(r.p_fifo, r.r_star)) fail("p_fifo <= r_star");
  if (r.p_star) {
    if (!le_with_slack(r.p0, *r.p_star)) fail("p0 <= p_star");
    if (!le_with_slack(*r.p_star, r.r_star)) fail("p_star <= r_star");
    if (!le_with_slack(r.p_fifo, *r.p_star)) fail("p_fifo <= p_star");
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  fifogap::validate(distribution);
  if (n_transactions < 1) throw ValidationError("n_transactions must be at least 1");
  if (trials_per_size < 1) throw ValidationError("trials_per_size must be at least 1");
  if (block_sizes.empty()) throw ValidationError("block_sizes must not be empty");
  for (double b : block_sizes) {
    if (!(b > 0.0) || !std::isfinite(b)) {
      throw ValidationError(fmt::format("block size {} must be positive", b));
    }
  }
  if (!(gas_lo > 0.0) || !(gas_hi >= gas_lo) || !std::isfinite(gas_hi)) {
    throw ValidationError(fmt::format("gas range needs 0 < gas_lo <= gas_hi, got [{}, {}]", gas_lo,
                                      gas_hi));
  }
  if (!(gas_price >= 0.0) || !std::isfinite(gas_price)) {
    throw ValidationError("gas_price must be nonnegative");
  }
}

ExperimentConfig reference_config(UtilityDistribution d, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.distribution = d;
  cfg.n_transactions = 1000;
  cfg.gas_lo = 1.0;
  cfg.gas_hi = 3.0;
  cfg.block_sizes = {20, 50, 100, 200, 500, 1000, 2000};
  cfg.trials_per_size = 100;
  cfg.master_seed = seed;
  return cfg;
}

std::uint64_t trial_seed(const ExperimentConfig& cfg, std::size_t block_index, std::size_t trial) {
  return derive_seed(cfg.master_seed, {family_index(cfg.distribution), block_index, trial});
}

bool le_with_slack(double lhs, double rhs) {
  return lhs <= rhs + kSandwichSlack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

ProblemInstance build_trial_instance(const ExperimentConfig& cfg, std::size_t block_index,
                                     std::size_t trial) {
  const double block_size = cfg.block_sizes.at(block_index);
  RandomStream rng(trial_seed(cfg, block_index, trial));
  std::vector<Transaction> txs;
  if (cfg.fixed_mempool) {
    RandomStream pool_rng(
        derive_seed(cfg.master_seed, {family_index(cfg.distribution), kFixedMempoolKey}));
    txs = draw_mempool(cfg, pool_rng);
  } else {
    txs = draw_mempool(cfg, rng);
  }
  const BlockParams params{block_size, cfg.gas_price, cfg.gas_lo, cfg.gas_hi};
  return permute(build_instance(txs, params), rng);
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t block_index, std::size_t trial) {
  TrialRecord rec;
  rec.distribution = to_string(cfg.distribution);
  rec.block_size = cfg.block_sizes.at(block_index);
  rec.trial = trial;
  rec.sub_seed = trial_seed(cfg, block_index, trial);

  const ProblemInstance inst = build_trial_instance(cfg, block_index, trial);
  rec.n = inst.size();

  const GreedyResult greedy = greedy_pack(inst);
  const RelaxationSolution relax = solve_relaxation(inst);
  const Packing fifo = fifo_pack(inst);
  rec.p0 = greedy.packing.objective;
  rec.r_star = relax.objective;
  rec.p_fifo = fifo.objective;
  rec.k_bar = greedy.packing.count();
  if (greedy.certificate.m != ApproxCertificate::kUnbounded) rec.m = greedy.certificate.m;
  if (inst.size() <= cfg.exact_solver_limit) {
    rec.p_star = exact_pack(inst, cfg.exact_solver_limit).objective;
  }
  if (!inst.empty()) {
    const GapBounds g = compute_gap_bounds(inst, greedy.packing);
    rec.gap_lower = g.gap_lower;
    rec.bound_ratio = g.ratio_bound;
    rec.condition_holds = g.condition_holds;
  }
  rec.ratio_lb = safe_ratio(rec.p0, rec.p_fifo);
  rec.ratio_ub = safe_ratio(rec.r_star, rec.p_fifo);
  check_sandwich(rec);
  return rec;
}

std::vector<TrialRecord> run_sweep_serial(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<TrialRecord> out;
  out.reserve(cfg.block_sizes.size() * cfg.trials_per_size);
  for (std::size_t bi = 0; bi < cfg.block_sizes.size(); ++bi) {
    for (std::size_t t = 0; t < cfg.trials_per_size; ++t) out.push_back(run_trial(cfg, bi, t));
  }
  return out;
}

std::vector<TrialRecord> run_sweep(const ExperimentConfig& cfg, int threads) {
  cfg.validate();
  const std::size_t trials = cfg.trials_per_size;
  const auto total = static_cast<std::int64_t>(cfg.block_sizes.size() * trials);
  std::vector<TrialRecord> out(static_cast<std::size_t>(total));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));

#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
#endif
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto cell = static_cast<std::size_t>(idx);
    try {
      out[cell] = run_trial(cfg, cell / trials, cell % trials);
    } catch (...) {
      errors[cell] = std::current_exception();
    }
  }
  (void)threads;
  // Rethrow the first failure in record order so errors are deterministic too.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

SummaryStat summarize(const std::vector<double>& values) {
  SummaryStat s;
  s.count = values.size();
  if (values.empty()) return s;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  s.mean = mean;
  s.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
  return s;
}

std::vector<BlockSummary> aggregate(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw ValidationError("cannot aggregate an empty record set");

  struct Bucket {
    std::size_t trials = 0;
    std::size_t undefined = 0;
    std::vector<double> lb, ub, bound, gap;
  };
  std::vector<std::pair<std::string, double>> keys;
  std::map<std::pair<std::string, double>, Bucket> buckets;
  for (const auto& r : records) {
    auto key = std::make_pair(r.distribution, r.block_size);
    auto [it, inserted] = buckets.try_emplace(key);
    if (inserted) keys.push_back(key);
    Bucket& b = it->second;
    ++b.trials;
    if (!(r.p_fifo > 0.0)) ++b.undefined;
    if (r.ratio_lb) b.lb.push_back(*r.ratio_lb);
    if (r.ratio_ub) b.ub.push_back(*r.ratio_ub);
    if (r.bound_ratio) b.bound.push_back(*r.bound_ratio);
    if (r.gap_lower) b.gap.push_back(*r.gap_lower);
  }

  std::vector<BlockSummary> out;
  out.reserve(keys.size());
  for (const auto& key : keys) {
    const Bucket& b = buckets.at(key);
    BlockSummary s;
    s.distribution = key.first;
    s.block_size = key.second;
    s.trials = b.trials;
    s.undefined_ratio_count = b.undefined;
    s.ratio_lb = summarize(b.lb);
    s.ratio_ub = summarize(b.ub);
    s.bound_ratio = summarize(b.bound);
    s.gap_lower = summarize(b.gap);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace fifogap
