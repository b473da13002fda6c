#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fifogap {

/// One mempool entry: gross utility q̃ and gas a, in arrival order.
struct Transaction {
  double gross_utility = 0.0;
  double gas = 0.0;
};

/// Block-level parameters. `min_tx_gas`/`max_tx_gas` are the assumed size
/// bounds B⁻/B⁺ that every transaction must respect.
struct BlockParams {
  double gas_limit = 0.0;
  double gas_price = 0.0;
  double min_tx_gas = 0.0;
  double max_tx_gas = 0.0;

  /// Throws ValidationError unless 0 < B⁻ ≤ B⁺, b > 0 and g ≥ 0.
  void validate() const;
  double eta() const { return max_tx_gas / min_tx_gas; }
};

/// A block-building problem: maximize qᵀx s.t. aᵀx ≤ b, x binary.
/// Index order is arrival order (index 0 = earliest). Immutable once built.
class ProblemInstance {
 public:
  ProblemInstance() = default;

  /// Validating constructor. Rejects mismatched lengths, negative utilities
  /// and any gas outside [B⁻, B⁺].
  ProblemInstance(std::vector<double> net_utilities, std::vector<double> gas,
                  BlockParams params);

  std::size_t size() const { return net_utilities_.size(); }
  bool empty() const { return net_utilities_.empty(); }
  std::span<const double> net_utilities() const { return net_utilities_; }
  std::span<const double> gas() const { return gas_; }
  const BlockParams& params() const { return params_; }
  double gas_limit() const { return params_.gas_limit; }

  double total_gas() const;
  double total_utility() const;

  /// Same params, entries reordered so that entry i of the result is entry
  /// order[i] of this instance.
  ProblemInstance reordered(std::span<const std::size_t> order) const;

 private:
  std::vector<double> net_utilities_;
  std::vector<double> gas_;
  BlockParams params_;
};

/// Net utilities q = q̃ − g·a. Transactions with negative net utility are
/// dropped; zero is kept. Survivors keep their relative arrival order.
ProblemInstance build_instance(std::span<const Transaction> txs,
                               const BlockParams& params);

enum class PackingKind { Exact, GreedyRounded, Fifo, RelaxationFractional };

const char* to_string(PackingKind kind);

/// Output of a packing procedure. `included` is binary; for
/// RelaxationFractional the single fractional coordinate is carried
/// separately and contributes to `objective` and `gas_used`.
struct Packing {
  PackingKind kind = PackingKind::Exact;
  std::vector<bool> included;
  double objective = 0.0;
  double gas_used = 0.0;
  std::optional<std::size_t> fractional_index;
  std::optional<double> fractional_value;

  std::size_t count() const;
};

/// Builds a binary Packing whose objective/gas are computed in index order.
Packing make_packing(const ProblemInstance& inst, std::vector<bool> included,
                     PackingKind kind);

}  // namespace fifogap
