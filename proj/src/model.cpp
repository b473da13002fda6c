#include "fifogap/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "fifogap/error.hpp"

namespace fifogap {

void BlockParams::validate() const {
  if (!(gas_limit > 0.0) || !std::isfinite(gas_limit)) {
    throw ValidationError(fmt::format("gas limit must be positive and finite, got {}", gas_limit));
  }
  if (!(gas_price >= 0.0) || !std::isfinite(gas_price)) {
    throw ValidationError(fmt::format("gas price must be nonnegative, got {}", gas_price));
  }
  if (!(min_tx_gas > 0.0) || !(min_tx_gas <= max_tx_gas) || !std::isfinite(max_tx_gas)) {
    throw ValidationError(fmt::format("size bounds need 0 < B- <= B+, got B-={} B+={}",
                                      min_tx_gas, max_tx_gas));
  }
}

ProblemInstance::ProblemInstance(std::vector<double> net_utilities, std::vector<double> gas,
                                 BlockParams params)
    : net_utilities_(std::move(net_utilities)), gas_(std::move(gas)), params_(params) {
  params_.validate();
  if (net_utilities_.size() != gas_.size()) {
    throw ValidationError(fmt::format("{} utilities but {} gas values", net_utilities_.size(),
                                      gas_.size()));
  }
  for (std::size_t i = 0; i < gas_.size(); ++i) {
    if (!(net_utilities_[i] >= 0.0) || !std::isfinite(net_utilities_[i])) {
      throw ValidationError(fmt::format("net utility {} at index {} is not a nonnegative number",
                                        net_utilities_[i], i));
    }
    if (!(gas_[i] >= params_.min_tx_gas && gas_[i] <= params_.max_tx_gas)) {
      throw ValidationError(fmt::format("gas {} at index {} outside size bounds [{}, {}]", gas_[i],
                                        i, params_.min_tx_gas, params_.max_tx_gas));
    }
  }
}

double ProblemInstance::total_gas() const {
  return std::accumulate(gas_.begin(), gas_.end(), 0.0);
}

double ProblemInstance::total_utility() const {
  return std::accumulate(net_utilities_.begin(), net_utilities_.end(), 0.0);
}

ProblemInstance ProblemInstance::reordered(std::span<const std::size_t> order) const {
  if (order.size() != size()) {
    throw ValidationError("permutation length does not match instance size");
  }
  ProblemInstance out;
  out.params_ = params_;
  out.net_utilities_.reserve(size());
  out.gas_.reserve(size());
  for (std::size_t src : order) {
    out.net_utilities_.push_back(net_utilities_.at(src));
    out.gas_.push_back(gas_.at(src));
  }
  return out;
}

ProblemInstance build_instance(std::span<const Transaction> txs, const BlockParams& params) {
  params.validate();
  std::vector<double> q;
  std::vector<double> a;
  q.reserve(txs.size());
  a.reserve(txs.size());
  for (std::size_t j = 0; j < txs.size(); ++j) {
    const auto& tx = txs[j];
    if (!(tx.gas >= params.min_tx_gas && tx.gas <= params.max_tx_gas)) {
      throw ValidationError(fmt::format("transaction {} has gas {} outside size bounds [{}, {}]", j,
                                        tx.gas, params.min_tx_gas, params.max_tx_gas));
    }
    if (!(tx.gross_utility >= 0.0) || !std::isfinite(tx.gross_utility)) {
      throw ValidationError(
          fmt::format("transaction {} has invalid gross utility {}", j, tx.gross_utility));
    }
    const double net = tx.gross_utility - params.gas_price * tx.gas;
    if (net < 0.0) continue;
    q.push_back(net);
    a.push_back(tx.gas);
  }
  return ProblemInstance(std::move(q), std::move(a), params);
}

const char* to_string(PackingKind kind) {
  switch (kind) {
    case PackingKind::Exact: return "exact";
    case PackingKind::GreedyRounded: return "greedy";
    case PackingKind::Fifo: return "fifo";
    case PackingKind::RelaxationFractional: return "relaxation";
  }
  return "unknown";
}

std::size_t Packing::count() const {
  return static_cast<std::size_t>(std::count(included.begin(), included.end(), true));
}

Packing make_packing(const ProblemInstance& inst, std::vector<bool> included, PackingKind kind) {
  Packing p;
  p.kind = kind;
  const auto q = inst.net_utilities();
  const auto a = inst.gas();
  for (std::size_t i = 0; i < included.size(); ++i) {
    if (included[i]) {
      p.objective += q[i];
      p.gas_used += a[i];
    }
  }
  p.included = std::move(included);
  return p;
}

}  // namespace fifogap
