#include "fifogap/model.hpp"

#include <random>

#include <gtest/gtest.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

const BlockParams kParams{10.0, 1.0, 1.0, 5.0};

TEST(BuildInstanceTest, SubtractsGasFees) {
  const std::vector<Transaction> txs{{5.0, 2.0}};
  const auto inst = build_instance(txs, kParams);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.net_utilities()[0], 3.0);
  EXPECT_EQ(inst.gas()[0], 2.0);
}

TEST(BuildInstanceTest, DropsNegativeNetUtility) {
  const std::vector<Transaction> txs{{1.0, 2.0}};
  EXPECT_TRUE(build_instance(txs, kParams).empty());
}

TEST(BuildInstanceTest, ZeroGasPriceIsIdentity) {
  BlockParams p = kParams;
  p.gas_price = 0.0;
  const std::vector<Transaction> txs{{4.0, 2.0}, {6.0, 3.0}};
  const auto inst = build_instance(txs, p);
  EXPECT_EQ(std::vector<double>(inst.net_utilities().begin(), inst.net_utilities().end()),
            (std::vector<double>{4.0, 6.0}));
  EXPECT_EQ(std::vector<double>(inst.gas().begin(), inst.gas().end()),
            (std::vector<double>{2.0, 3.0}));
}

TEST(BuildInstanceTest, KeepsZeroNetUtility) {
  const std::vector<Transaction> txs{{2.0, 2.0}};
  const auto inst = build_instance(txs, kParams);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.net_utilities()[0], 0.0);
}

TEST(BuildInstanceTest, RejectsGasOutsideSizeBounds) {
  const std::vector<Transaction> small{{5.0, 0.5}};
  const std::vector<Transaction> large{{5.0, 6.0}};
  EXPECT_THROW(build_instance(small, kParams), ValidationError);
  EXPECT_THROW(build_instance(large, kParams), ValidationError);
}

TEST(BuildInstanceTest, RejectsBadParams) {
  const std::vector<Transaction> txs{{5.0, 2.0}};
  BlockParams p = kParams;
  p.gas_limit = 0.0;
  EXPECT_THROW(build_instance(txs, p), ValidationError);
  p = kParams;
  p.min_tx_gas = 6.0;
  EXPECT_THROW(build_instance(txs, p), ValidationError);
  p = kParams;
  p.min_tx_gas = 0.0;
  EXPECT_THROW(build_instance(txs, p), ValidationError);
}

TEST(ProblemInstanceTest, ValidatesDirectConstruction) {
  EXPECT_THROW(ProblemInstance({1.0}, {}, kParams), ValidationError);
  EXPECT_THROW(ProblemInstance({-1.0}, {2.0}, kParams), ValidationError);
  EXPECT_NO_THROW(ProblemInstance({}, {}, kParams));
}

// Random transaction lists: output satisfies every instance invariant and is
// the order-preserving subsequence of nonnegative-net inputs.
TEST(BuildInstanceTest, PropertySurvivorsFormOrderedSubsequence) {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> util(0.0, 10.0);
  std::uniform_real_distribution<double> gas(1.0, 5.0);
  std::uniform_int_distribution<int> len(0, 40);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Transaction> txs(static_cast<std::size_t>(len(gen)));
    for (auto& t : txs) t = {util(gen), gas(gen)};
    const auto inst = build_instance(txs, kParams);
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      EXPECT_GE(inst.net_utilities()[i], 0.0);
      EXPECT_GE(inst.gas()[i], kParams.min_tx_gas);
      EXPECT_LE(inst.gas()[i], kParams.max_tx_gas);
      while (cursor < txs.size() &&
             !(txs[cursor].gas == inst.gas()[i] &&
               txs[cursor].gross_utility - kParams.gas_price * txs[cursor].gas ==
                   inst.net_utilities()[i])) {
        EXPECT_LT(txs[cursor].gross_utility - kParams.gas_price * txs[cursor].gas, 0.0)
            << "a nonnegative transaction was skipped";
        ++cursor;
      }
      ASSERT_LT(cursor, txs.size());
      ++cursor;
    }
    for (; cursor < txs.size(); ++cursor) {
      EXPECT_LT(txs[cursor].gross_utility - kParams.gas_price * txs[cursor].gas, 0.0);
    }
  }
}

TEST(PackingTest, MakePackingSumsIncludedEntries) {
  const ProblemInstance inst({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}, kParams);
  const auto p = make_packing(inst, {true, false, true}, PackingKind::Fifo);
  EXPECT_EQ(p.objective, 4.0);
  EXPECT_EQ(p.gas_used, 4.0);
  EXPECT_EQ(p.count(), 2u);
  EXPECT_STREQ(to_string(p.kind), "fifo");
}

}  // namespace
}  // namespace fifogap
