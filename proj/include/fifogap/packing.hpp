#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "fifogap/model.hpp"
#include "fifogap/rng.hpp"

namespace fifogap {

/// Closed-form optimum of the LP relaxation (0 ≤ x ≤ 1).
struct RelaxationSolution {
  std::vector<double> x;
  double objective = 0.0;               // r★
  double gas_used = 0.0;
  std::vector<double> efficiencies;     // b·q_i/a_i
  std::vector<std::size_t> sort_order;  // τ: nonincreasing efficiency, ties by index
  std::optional<std::size_t> fractional_index;

  Packing as_packing() const;
};

/// m/(m-1) approximation certificate for the greedy-rounded packing.
struct ApproxCertificate {
  static constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t m = 0;  // floor(b / max a_i); kUnbounded for an empty instance
  double p0 = 0.0;
  double upper_bound = std::numeric_limits<double>::infinity();

  bool applicable() const { return m >= 2; }
};

struct GreedyResult {
  Packing packing;
  ApproxCertificate certificate;
};

/// Efficiency order τ: indices sorted by b·q_i/a_i nonincreasing, stable.
std::vector<std::size_t> efficiency_order(const ProblemInstance& inst);

RelaxationSolution solve_relaxation(const ProblemInstance& inst);

/// Relaxation with its (at most one) fractional entry rounded down.
GreedyResult greedy_pack(const ProblemInstance& inst);

/// m = floor(b / max a_i), certificate bound m/(m-1)·p0 when m ≥ 2.
ApproxCertificate make_certificate(const ProblemInstance& inst, double p0);

inline constexpr std::size_t kDefaultExactLimit = 30;

/// Depth-first branch and bound in efficiency order, LP-bounded, seeded with
/// the greedy incumbent. Throws InstanceTooLarge if inst.size() > limit_n.
Packing exact_pack(const ProblemInstance& inst, std::size_t limit_n = kDefaultExactLimit);

/// Best arrival-order prefix: max over k of Σ_{i<k} q_i s.t. Σ_{i<k} a_i ≤ b.
Packing fifo_pack(const ProblemInstance& inst);

/// Uniform Fisher–Yates permutation of {0..n-1} drawn from rng.
std::vector<std::size_t> random_permutation(std::size_t n, RandomStream& rng);

/// q and a reordered jointly by a uniform random permutation.
ProblemInstance permute(const ProblemInstance& inst, RandomStream& rng);

}  // namespace fifogap
