#pragma once

#include <cstddef>
#include <optional>

#include "fifogap/model.hpp"
#include "fifogap/rng.hpp"

namespace fifogap {

/// Sufficient statistics of a greedy packing for the gap analysis.
struct GapInputs {
  std::size_t n = 0;
  std::size_t k_bar = 0;
  double included_sum = 0.0;  // Σ q over the greedy set
  double excluded_sum = 0.0;  // Σ q over the rest
  double gas_limit = 0.0;
  double min_tx_gas = 0.0;
  double max_tx_gas = 0.0;
};

/// Analytic FIFO-vs-optimal gap quantities.
///
/// `L` is the greedy block utility k̄·q⁺ (equal to p0). `L_worst` is the
/// size-bound form (b/B⁺)·q⁺ that only uses the largest permitted transaction
/// size; `gap_lower`, `condition_holds` and `ratio_bound` are built from it,
/// which makes
///   condition_holds  ⟺  q⁺(1 − k̄η/n) > η·q⁻(1 − k̄/n)  ⟺  L_worst > U.
/// `U` bounds the *expected* FIFO utility under a uniformly random arrival
/// order; it is not a bound on a single realization.
struct GapBounds {
  std::size_t n = 0;
  std::size_t k_bar = 0;
  double q_plus = 0.0;   // 0 when k̄ = 0
  double q_minus = 0.0;  // 0 when k̄ = n
  double eta = 1.0;
  double L = 0.0;
  double L_worst = 0.0;
  double U = 0.0;
  double gap_lower = 0.0;  // L_worst − U
  bool condition_holds = false;
  std::optional<double> ratio_bound;  // L_worst / U, unset when U = 0

  // Diagnostics only; bounds use the configured B⁻/B⁺.
  double realized_min_gas = 0.0;
  double realized_max_gas = 0.0;
};

/// Throws ValidationError for n = 0, k̄ > n or invalid size bounds.
GapBounds evaluate_gap_bounds(const GapInputs& in);

/// `greedy` must be greedy_pack(inst).packing. Throws ValidationError on an
/// empty instance.
GapBounds compute_gap_bounds(const ProblemInstance& inst, const Packing& greedy);

/// Closed form of the ratio bound, (q⁺/η) / ((q⁺ − q⁻)·k̄/n + q⁻).
std::optional<double> ratio_bound_closed_form(const GapBounds& g);

struct SoundnessReport {
  GapBounds bounds;
  std::size_t permutations = 0;
  double mean_fifo = 0.0;   // Monte Carlo E[p^FIFO]
  double std_error = 0.0;
  bool fifo_within_upper = false;  // mean_fifo − 3·std_error ≤ U
  double p0 = 0.0;
  bool p0_equals_lower = false;    // p0 == L
};

/// Monte Carlo check of the FIFO upper bound over `num_permutations` uniform
/// arrival orders drawn from `rng`.
SoundnessReport check_gap_soundness(const ProblemInstance& inst, std::size_t num_permutations,
                                    RandomStream& rng);

inline constexpr std::size_t kMaxExhaustivePermutationSize = 10;

/// E[p^FIFO] averaged over all n! arrival orders. n ≤ 10.
double exhaustive_expected_fifo(const ProblemInstance& inst);

}  // namespace fifogap
