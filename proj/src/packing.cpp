#include "fifogap/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

// Fills items order[begin..] greedily into `capacity`. Returns the LP value of
// that fill; the last partially fitting item (if any) contributes its
// fractional share. Used both for the relaxation and as the B&B bound.
struct Fill {
  double value = 0.0;
  double gas = 0.0;
  std::size_t full_end = 0;  // items order[begin, full_end) are fully included
  std::optional<double> fraction;
};

Fill fractional_fill(std::span<const double> q, std::span<const double> a,
                     std::span<const std::size_t> order, std::size_t begin, double capacity) {
  Fill f;
  f.full_end = begin;
  double remaining = capacity;
  for (std::size_t pos = begin; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    if (a[i] <= remaining) {
      f.value += q[i];
      f.gas += a[i];
      remaining -= a[i];
      f.full_end = pos + 1;
      if (remaining == 0.0) break;
      continue;
    }
    const double t = remaining / a[i];
    if (t > 0.0) {
      f.fraction = t;
      f.value += t * q[i];
      f.gas += remaining;
    }
    break;
  }
  return f;
}

}  // namespace

std::vector<std::size_t> efficiency_order(const ProblemInstance& inst) {
  const auto q = inst.net_utilities();
  const auto a = inst.gas();
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // q_i/a_j vs q_j/a_i compared by division, matching the reported efficiencies.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return q[i] / a[i] > q[j] / a[j]; });
  return order;
}

Packing RelaxationSolution::as_packing() const {
  Packing p;
  p.kind = PackingKind::RelaxationFractional;
  p.included.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p.included[i] = x[i] == 1.0 && fractional_index != i;
  p.objective = objective;
  p.gas_used = gas_used;
  p.fractional_index = fractional_index;
  if (fractional_index) p.fractional_value = x[*fractional_index];
  return p;
}

RelaxationSolution solve_relaxation(const ProblemInstance& inst) {
  const auto q = inst.net_utilities();
  const auto a = inst.gas();
  const double b = inst.gas_limit();

  RelaxationSolution sol;
  sol.x.assign(inst.size(), 0.0);
  sol.efficiencies.resize(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) sol.efficiencies[i] = b * q[i] / a[i];
  sol.sort_order = efficiency_order(inst);

  const Fill fill = fractional_fill(q, a, sol.sort_order, 0, b);
  for (std::size_t pos = 0; pos < fill.full_end; ++pos) sol.x[sol.sort_order[pos]] = 1.0;
  if (fill.fraction) {
    const std::size_t i = sol.sort_order[fill.full_end];
    sol.x[i] = *fill.fraction;
    sol.fractional_index = i;
  }
  // Index-order sums so an unconstrained relaxation matches p0 and p_fifo bit for bit.
  for (std::size_t i = 0; i < inst.size(); ++i) {
    sol.objective += q[i] * sol.x[i];
    sol.gas_used += a[i] * sol.x[i];
  }
  return sol;
}

ApproxCertificate make_certificate(const ProblemInstance& inst, double p0) {
  ApproxCertificate cert;
  cert.p0 = p0;
  if (inst.empty()) {
    cert.m = ApproxCertificate::kUnbounded;
    cert.upper_bound = 0.0;
    return cert;
  }
  const auto a = inst.gas();
  const double max_gas = *std::max_element(a.begin(), a.end());
  const double ratio = std::floor(inst.gas_limit() / max_gas);
  constexpr double cap = static_cast<double>(ApproxCertificate::kUnbounded - 1);
  cert.m = ratio >= cap ? ApproxCertificate::kUnbounded - 1 : static_cast<std::uint64_t>(ratio);
  if (cert.m >= 2) {
    const double m = static_cast<double>(cert.m);
    cert.upper_bound = m / (m - 1.0) * p0;
  } else {
    cert.upper_bound = std::numeric_limits<double>::infinity();
  }
  return cert;
}

GreedyResult greedy_pack(const ProblemInstance& inst) {
  const RelaxationSolution relax = solve_relaxation(inst);
  std::vector<bool> included(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    included[i] = relax.x[i] == 1.0 && relax.fractional_index != i;
  }
  GreedyResult out;
  out.packing = make_packing(inst, std::move(included), PackingKind::GreedyRounded);
  out.certificate = make_certificate(inst, out.packing.objective);
  return out;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const ProblemInstance& inst, std::vector<std::size_t> order)
      : q_(inst.net_utilities()), a_(inst.gas()), order_(std::move(order)),
        chosen_(inst.size(), false) {}

  void seed(const Packing& incumbent) {
    best_value_ = incumbent.objective;
    best_ = incumbent.included;
  }

  void run(double capacity) { descend(0, 0.0, capacity); }

  const std::vector<bool>& best() const { return best_; }

 private:
  bool prunable(double bound) const {
    return bound <= best_value_ + 1e-13 * (1.0 + std::abs(best_value_));
  }

  void descend(std::size_t depth, double value, double capacity) {
    if (depth == order_.size()) {
      if (value > best_value_) {
        best_value_ = value;
        best_ = chosen_;
      }
      return;
    }
    const Fill fill = fractional_fill(q_, a_, order_, depth, capacity);
    if (!fill.fraction && fill.full_end == order_.size()) {
      // Everything remaining fits: the LP bound is attained by an integer point.
      const double total = value + fill.value;
      if (total > best_value_) {
        best_value_ = total;
        best_ = chosen_;
        for (std::size_t pos = depth; pos < order_.size(); ++pos) best_[order_[pos]] = true;
      }
      return;
    }
    if (prunable(value + fill.value)) return;

    const std::size_t i = order_[depth];
    if (a_[i] <= capacity) {
      chosen_[i] = true;
      descend(depth + 1, value + q_[i], capacity - a_[i]);
      chosen_[i] = false;
    }
    descend(depth + 1, value, capacity);
  }

  std::span<const double> q_;
  std::span<const double> a_;
  std::vector<std::size_t> order_;
  std::vector<bool> chosen_;
  std::vector<bool> best_;
  double best_value_ = 0.0;
};

}  // namespace

Packing exact_pack(const ProblemInstance& inst, std::size_t limit_n) {
  if (inst.size() > limit_n) {
    throw InstanceTooLarge(fmt::format(
        "exact solver limited to {} transactions, instance has {}", limit_n, inst.size()));
  }
  BranchAndBound bnb(inst, efficiency_order(inst));
  bnb.seed(greedy_pack(inst).packing);
  bnb.run(inst.gas_limit());
  return make_packing(inst, bnb.best(), PackingKind::Exact);
}

Packing fifo_pack(const ProblemInstance& inst) {
  const auto q = inst.net_utilities();
  const auto a = inst.gas();
  const double b = inst.gas_limit();
  double gas = 0.0;
  double value = 0.0;
  double best_value = 0.0;  // k = 0
  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= inst.size(); ++k) {
    gas += a[k - 1];
    if (gas > b) break;  // every longer prefix is infeasible too
    value += q[k - 1];
    if (value >= best_value) {
      best_value = value;
      best_k = k;
    }
  }
  std::vector<bool> included(inst.size(), false);
  std::fill_n(included.begin(), best_k, true);
  return make_packing(inst, std::move(included), PackingKind::Fifo);
}

std::vector<std::size_t> random_permutation(std::size_t n, RandomStream& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

ProblemInstance permute(const ProblemInstance& inst, RandomStream& rng) {
  const auto perm = random_permutation(inst.size(), rng);
  return inst.reordered(perm);
}

}  // namespace fifogap
