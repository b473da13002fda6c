#include "fifogap/bounds.hpp"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "fifogap/error.hpp"
#include "fifogap/packing.hpp"
#include "oracles.hpp"

namespace fifogap {
namespace {

using Rational = boost::multiprecision::cpp_rational;

ProblemInstance make(std::vector<double> q, std::vector<double> a, BlockParams p) {
  return ProblemInstance(std::move(q), std::move(a), p);
}

GapBounds bounds_of(const ProblemInstance& inst) {
  return compute_gap_bounds(inst, greedy_pack(inst).packing);
}

TEST(GapBoundsTest, WorkedExample) {
  const auto inst = make({10, 10, 1, 1}, {1, 1, 1, 1}, {2, 0, 1, 1});
  const auto g = bounds_of(inst);
  EXPECT_EQ(g.k_bar, 2u);
  EXPECT_EQ(g.q_plus, 10.0);
  EXPECT_EQ(g.q_minus, 1.0);
  EXPECT_EQ(g.eta, 1.0);
  EXPECT_EQ(g.L, 20.0);
  EXPECT_EQ(g.L_worst, 20.0);
  EXPECT_EQ(g.U, 11.0);
  EXPECT_EQ(g.gap_lower, 9.0);
  EXPECT_TRUE(g.condition_holds);
  ASSERT_TRUE(g.ratio_bound.has_value());
  EXPECT_DOUBLE_EQ(*g.ratio_bound, 20.0 / 11.0);
  EXPECT_LE(g.L, testing::brute_force_optimum(inst).value);
}

TEST(GapBoundsTest, FlatUtilitiesGiveNoGap) {
  const auto g = bounds_of(make({3, 3, 3, 3, 3}, {1, 1, 1, 1, 1}, {2, 0, 1, 1}));
  EXPECT_EQ(g.k_bar, 2u);
  EXPECT_FALSE(g.condition_holds);
}

TEST(GapBoundsTest, FullInclusionDegenerateCase) {
  const auto g = bounds_of(make({4, 2}, {1, 2}, {10, 0, 1, 2}));
  EXPECT_EQ(g.k_bar, 2u);
  EXPECT_EQ(g.q_minus, 0.0);
  EXPECT_DOUBLE_EQ(g.U, 10.0 * 3.0);
  EXPECT_FALSE(g.condition_holds);
}

TEST(GapBoundsTest, ZeroUtilitiesLeaveRatioUndefined) {
  const auto g = bounds_of(make({0, 0, 0}, {1, 1, 1}, {2, 0, 1, 1}));
  EXPECT_EQ(g.U, 0.0);
  EXPECT_FALSE(g.ratio_bound.has_value());
  EXPECT_FALSE(g.condition_holds);
}

TEST(GapBoundsTest, EtaUsesConfiguredBoundsNotSample) {
  const auto g = bounds_of(make({5, 1, 1}, {2, 2, 2}, {4, 0, 1, 3}));
  EXPECT_EQ(g.eta, 3.0);
  EXPECT_EQ(g.realized_min_gas, 2.0);
  EXPECT_EQ(g.realized_max_gas, 2.0);
}

TEST(GapBoundsTest, RejectsEmptyInstance) {
  const auto inst = make({}, {}, {2, 0, 1, 1});
  EXPECT_THROW(compute_gap_bounds(inst, greedy_pack(inst).packing), ValidationError);
  EXPECT_THROW(evaluate_gap_bounds(GapInputs{0, 0, 0, 0, 1, 1, 1}), ValidationError);
  EXPECT_THROW(evaluate_gap_bounds(GapInputs{2, 3, 0, 0, 1, 1, 1}), ValidationError);
}

// Exact oracle: the condition and L_worst > U in rational arithmetic, each
// written the way it is stated (means, no cross-multiplication).
struct ExactVerdict {
  bool condition;
  bool l_worst_exceeds_u;
};

ExactVerdict exact_verdict(long n, long k, long s_plus, long s_minus, long b, long lo, long hi) {
  const Rational qp = k > 0 ? Rational(s_plus, k) : Rational(0);
  const Rational qm = k < n ? Rational(s_minus, n - k) : Rational(0);
  const Rational eta(hi, lo);
  const Rational kn(k, n);
  const bool cond = qp * (1 - kn * eta) > eta * qm * (1 - kn);
  const Rational lw = Rational(b, hi) * qp;
  const Rational u = Rational(b, lo) * (kn * qp + (1 - kn) * qm);
  return {cond, lw > u};
}

TEST(GapBoundsPropertyTest, ConditionMatchesExactOracleOnIntegerData) {
  std::mt19937_64 gen(4242);
  std::uniform_int_distribution<long> n_dist(1, 60);
  std::uniform_int_distribution<long> val(0, 30);
  std::uniform_int_distribution<long> gas(1, 4);
  int positives = 0;
  for (int iter = 0; iter < 20000; ++iter) {
    const long n = n_dist(gen);
    const long k = std::uniform_int_distribution<long>(0, n)(gen);
    const long lo = gas(gen);
    const long hi = lo * std::uniform_int_distribution<long>(1, 3)(gen);
    // Integer means keep exact ties common.
    const long mean_plus = val(gen);
    const long mean_minus = val(gen) / 3;
    const long b = std::uniform_int_distribution<long>(1, 200)(gen);
    GapInputs in{static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                 static_cast<double>(mean_plus * k), static_cast<double>(mean_minus * (n - k)),
                 static_cast<double>(b), static_cast<double>(lo), static_cast<double>(hi)};
    const auto g = evaluate_gap_bounds(in);
    const auto exact = exact_verdict(n, k, mean_plus * k, mean_minus * (n - k), b, lo, hi);
    ASSERT_EQ(exact.condition, exact.l_worst_exceeds_u) << "identity must hold in exact arithmetic";
    ASSERT_EQ(g.condition_holds, exact.condition)
        << "n=" << n << " k=" << k << " q+=" << mean_plus << " q-=" << mean_minus;
    positives += g.condition_holds;
  }
  EXPECT_GT(positives, 1000);
  EXPECT_LT(positives, 19000);
}

TEST(GapBoundsPropertyTest, ConditionEquivalentToWorstCaseGapOnRealData) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int iter = 0; iter < 20000; ++iter) {
    GapInputs in;
    in.n = 1 + gen() % 500;
    in.k_bar = gen() % (in.n + 1);
    in.included_sum = 50.0 * unit(gen) * static_cast<double>(in.k_bar);
    in.excluded_sum = 5.0 * unit(gen) * static_cast<double>(in.n - in.k_bar);
    in.min_tx_gas = 0.5 + unit(gen);
    in.max_tx_gas = in.min_tx_gas * (1.0 + 3.0 * unit(gen));
    in.gas_limit = 1.0 + 500.0 * unit(gen);
    const auto g = evaluate_gap_bounds(in);
    ASSERT_EQ(g.condition_holds, g.L_worst > g.U);
    ASSERT_EQ(g.condition_holds, g.gap_lower > 0.0);
    if (g.U > 0.0) {
      ASSERT_TRUE(g.ratio_bound.has_value());
      ASSERT_EQ(g.condition_holds, *g.ratio_bound > 1.0);
      const auto closed = ratio_bound_closed_form(g);
      ASSERT_TRUE(closed.has_value());
      ASSERT_LE(testing::relative_gap(*closed, *g.ratio_bound), 1e-12);
    }
    ASSERT_GE(g.eta, 1.0);
    ASSERT_EQ(g.L, in.included_sum);
  }
}

TEST(GapBoundsPropertyTest, GreedyCountRespectsSizeBounds) {
  // Rounding only guarantees k̄·B⁺ ≥ min(b, Σa) − B⁺, not k̄ ≥ b/B⁺.
  const auto counter = bounds_of(make({1, 1}, {3, 3}, {5, 0, 1, 3}));
  EXPECT_EQ(counter.k_bar, 1u);
  EXPECT_LT(counter.L, 5.0 / 3.0 * counter.q_plus);

  std::mt19937_64 gen(5);
  for (int iter = 0; iter < 500; ++iter) {
    const auto inst = testing::random_instance(gen, Exponential{2.5}, 1 + gen() % 40, 0.5);
    const auto g = bounds_of(inst);
    EXPECT_GE(g.k_bar * 3.0, std::min(inst.gas_limit(), inst.total_gas()) - 3.0);
    if (inst.gas_limit() <= inst.total_gas()) {
      EXPECT_LE(g.L_worst, g.L + g.q_plus + 1e-9 * (1 + g.L));
    }
  }
}

TEST(SoundnessTest, GammaNonnegativeAndExpectedFifoBelowU) {
  std::mt19937_64 gen(321);
  const auto dists = testing::reference_distributions();
  for (int iter = 0; iter < 150; ++iter) {
    const auto& d = dists[iter % dists.size()];
    const auto inst = testing::random_instance(gen, d, 1 + iter % 7, 0.15 + 0.01 * (iter % 90));
    const auto g = bounds_of(inst);
    const double expected = exhaustive_expected_fifo(inst);
    // Rounding slack only; the inequality is exact in real arithmetic.
    EXPECT_LE(expected, g.U * (1 + 1e-12)) << to_string(d);
    EXPECT_GE(exact_pack(inst).objective - fifo_pack(inst).objective, 0.0);
  }
}

TEST(SoundnessTest, ExhaustiveFourTransactionExample) {
  const auto inst = make({10, 10, 1, 1}, {1, 1, 1, 1}, {2, 0, 1, 1});
  // Every ordered pair is equally likely in the first two slots.
  EXPECT_DOUBLE_EQ(exhaustive_expected_fifo(inst), 11.0);
  RandomStream rng(1);
  const auto report = check_gap_soundness(inst, 20000, rng);
  EXPECT_TRUE(report.fifo_within_upper);
  EXPECT_TRUE(report.p0_equals_lower);
  EXPECT_NEAR(report.mean_fifo, 11.0, 5 * report.std_error + 1e-12);
}

TEST(SoundnessTest, SingleTransaction) {
  const auto inst = make({7}, {1}, {2, 0, 1, 1});
  RandomStream rng(1);
  const auto report = check_gap_soundness(inst, 10, rng);
  EXPECT_EQ(report.mean_fifo, 7.0);
  EXPECT_EQ(report.std_error, 0.0);
  EXPECT_EQ(report.bounds.U, 14.0);
  EXPECT_TRUE(report.fifo_within_upper);
  EXPECT_TRUE(report.p0_equals_lower);
}

TEST(SoundnessTest, GreedyUtilityEqualsLowerBound) {
  std::mt19937_64 gen(8);
  for (int iter = 0; iter < 50; ++iter) {
    const auto inst = testing::random_instance(gen, Pareto{0.5}, 1 + iter, 0.4);
    RandomStream rng(iter);
    const auto report = check_gap_soundness(inst, 200, rng);
    EXPECT_TRUE(report.p0_equals_lower);
    EXPECT_TRUE(report.fifo_within_upper);
  }
}

TEST(SoundnessTest, ExhaustiveRejectsLargeInstances) {
  std::vector<double> q(11, 1.0);
  const auto inst = make(q, q, {5, 0, 1, 1});
  EXPECT_THROW(exhaustive_expected_fifo(inst), InstanceTooLarge);
}

}  // namespace
}  // namespace fifogap
