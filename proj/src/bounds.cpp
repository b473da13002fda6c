#include "fifogap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <fmt/format.h>

#include "fifogap/error.hpp"
#include "fifogap/packing.hpp"

namespace fifogap {

GapBounds evaluate_gap_bounds(const GapInputs& in) {
  if (in.n == 0) throw ValidationError("gap bounds need at least one transaction");
  if (in.k_bar > in.n) {
    throw ValidationError(fmt::format("k_bar {} exceeds n {}", in.k_bar, in.n));
  }
  if (!(in.min_tx_gas > 0.0) || !(in.min_tx_gas <= in.max_tx_gas) || !(in.gas_limit > 0.0)) {
    throw ValidationError("gap bounds need 0 < B- <= B+ and b > 0");
  }
  const double n = static_cast<double>(in.n);
  const double k = static_cast<double>(in.k_bar);
  const double b = in.gas_limit;
  const double lo = in.min_tx_gas;
  const double hi = in.max_tx_gas;

  GapBounds g;
  g.n = in.n;
  g.k_bar = in.k_bar;
  g.q_plus = in.k_bar > 0 ? in.included_sum / k : 0.0;
  g.q_minus = in.k_bar < in.n ? in.excluded_sum / (n - k) : 0.0;
  g.eta = hi / lo;
  g.L = in.included_sum;
  g.L_worst = (b / hi) * g.q_plus;
  g.U = (b / lo) * ((k / n) * g.q_plus + (1.0 - k / n) * g.q_minus);
  g.gap_lower = g.L_worst - g.U;
  // q⁺(1 − k̄η/n) > ηq⁻(1 − k̄/n), multiplied through by n·B⁻·k̄ (and with
  // q⁺k̄ = S⁺, q⁻(n − k̄) = S⁻) so that no division is rounded.
  g.condition_holds = in.included_sum * (n * lo - k * hi) > k * hi * in.excluded_sum;
  if (g.U > 0.0) g.ratio_bound = g.L_worst / g.U;
  return g;
}

GapBounds compute_gap_bounds(const ProblemInstance& inst, const Packing& greedy) {
  if (inst.empty()) throw ValidationError("gap bounds need a nonempty instance");
  if (greedy.included.size() != inst.size()) {
    throw ValidationError("greedy packing does not match the instance");
  }
  const auto q = inst.net_utilities();
  GapInputs in;
  in.n = inst.size();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (greedy.included[i]) {
      ++in.k_bar;
      in.included_sum += q[i];
    } else {
      in.excluded_sum += q[i];
    }
  }
  in.gas_limit = inst.gas_limit();
  in.min_tx_gas = inst.params().min_tx_gas;
  in.max_tx_gas = inst.params().max_tx_gas;

  GapBounds g = evaluate_gap_bounds(in);
  const auto [mn, mx] = std::minmax_element(inst.gas().begin(), inst.gas().end());
  g.realized_min_gas = *mn;
  g.realized_max_gas = *mx;
  return g;
}

std::optional<double> ratio_bound_closed_form(const GapBounds& g) {
  const double k = static_cast<double>(g.k_bar);
  const double n = static_cast<double>(g.n);
  const double denom = (g.q_plus - g.q_minus) * k / n + g.q_minus;
  if (!(denom > 0.0)) return std::nullopt;
  return (g.q_plus / g.eta) / denom;
}

SoundnessReport check_gap_soundness(const ProblemInstance& inst, std::size_t num_permutations,
                                    RandomStream& rng) {
  if (num_permutations == 0) throw ValidationError("need at least one permutation");
  const GreedyResult greedy = greedy_pack(inst);
  SoundnessReport r;
  r.bounds = compute_gap_bounds(inst, greedy.packing);
  r.permutations = num_permutations;

  // Welford running mean/variance.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t t = 0; t < num_permutations; ++t) {
    const double v = fifo_pack(permute(inst, rng)).objective;
    const double delta = v - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (v - mean);
  }
  r.mean_fifo = mean;
  if (num_permutations > 1) {
    const double var = m2 / static_cast<double>(num_permutations - 1);
    r.std_error = std::sqrt(var / static_cast<double>(num_permutations));
  }
  r.fifo_within_upper = r.mean_fifo - 3.0 * r.std_error <= r.bounds.U;
  r.p0 = greedy.packing.objective;
  r.p0_equals_lower = r.p0 == r.bounds.L;
  return r;
}

double exhaustive_expected_fifo(const ProblemInstance& inst) {
  if (inst.size() > kMaxExhaustivePermutationSize) {
    throw InstanceTooLarge(fmt::format("exhaustive permutation limited to n <= {}, got {}",
                                       kMaxExhaustivePermutationSize, inst.size()));
  }
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  double total = 0.0;
  std::size_t count = 0;
  do {
    total += fifo_pack(inst.reordered(order)).objective;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(count);
}

}  // namespace fifogap
