#include "fifogap/records_csv.hpp"

#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

TEST(FormatDoubleTest, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(1e300), "1.0000000000000001e+300");
}

TEST(CsvTest, HeaderMatchesSchema) {
  std::ostringstream out;
  write_records_csv(out, {});
  EXPECT_EQ(out.str(),
            "distribution,block_size,trial,sub_seed,n,p0,r_star,p_fifo,p_star,k_bar,m,gap_lower,"
            "ratio_lb,ratio_ub,bound_ratio,condition_holds\n");
}

TEST(CsvTest, EmptyOptionalsAndQuoting) {
  TrialRecord r;
  r.distribution = "LogNormal(1,1)";
  r.block_size = 20;
  r.p0 = 1.5;
  std::ostringstream out;
  write_records_csv(out, {r});
  const std::string body = out.str().substr(out.str().find('\n') + 1);
  EXPECT_EQ(body, "\"LogNormal(1,1)\",20,0,0,0,1.5,0,0,,0,,,,,,false\n");
}

// Property: arbitrary records survive write → read bit-exactly.
TEST(CsvTest, PropertyRoundTripIsExact) {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> real(-1e6, 1e6);
  std::vector<TrialRecord> recs(300);
  for (auto& r : recs) {
    r.distribution = gen() % 2 ? "Levy(0,1)" : "Pareto(0.5)";
    r.block_size = std::abs(real(gen));
    r.trial = gen() % 100;
    r.sub_seed = gen();
    r.n = gen() % 1000;
    r.p0 = real(gen);
    r.r_star = real(gen) * 1e-200;
    r.p_fifo = real(gen);
    if (gen() % 2) r.p_star = real(gen);
    r.k_bar = gen() % 1000;
    if (gen() % 2) r.m = gen();
    if (gen() % 2) r.gap_lower = real(gen);
    if (gen() % 2) r.ratio_lb = real(gen);
    if (gen() % 2) r.ratio_ub = std::numeric_limits<double>::denorm_min();
    if (gen() % 2) r.bound_ratio = real(gen);
    r.condition_holds = gen() % 2;
  }
  std::stringstream io;
  write_records_csv(io, recs);
  EXPECT_EQ(read_records_csv(io), recs);
}

TEST(CsvTest, HeaderKeyedColumnOrder) {
  std::istringstream in(
      "condition_holds,bound_ratio,ratio_ub,ratio_lb,gap_lower,m,k_bar,p_star,p_fifo,r_star,p0,n,"
      "sub_seed,trial,block_size,distribution\n"
      "true,2,1.5,1.25,3,4,5,,6,7,8,9,10,11,20,\"Levy(0,1)\"\n");
  const auto recs = read_records_csv(in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].distribution, "Levy(0,1)");
  EXPECT_EQ(recs[0].block_size, 20.0);
  EXPECT_EQ(recs[0].trial, 11u);
  EXPECT_EQ(recs[0].m, 4u);
  EXPECT_FALSE(recs[0].p_star.has_value());
  EXPECT_TRUE(recs[0].condition_holds);
}

TEST(CsvTest, RejectsSchemaViolations) {
  std::istringstream missing("distribution,block_size\nX,1\n");
  EXPECT_THROW(read_records_csv(missing), ValidationError);
  std::istringstream empty("");
  EXPECT_THROW(read_records_csv(empty), ValidationError);

  std::ostringstream good;
  TrialRecord r;
  r.distribution = "X";
  write_records_csv(good, {r});
  std::string text = good.str();
  const std::string header = text.substr(0, text.find('\n') + 1);
  std::istringstream short_row(header + "X,1,2\n");
  EXPECT_THROW(read_records_csv(short_row), ValidationError);
  std::istringstream bad_number(header + "X,abc,0,0,0,0,0,0,,0,,,,,,false\n");
  try {
    read_records_csv(bad_number);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(SplitCsvLineTest, QuotedCommasAndEscapes) {
  EXPECT_EQ(split_csv_line("a,\"b,c\",\"d\"\"e\","),
            (std::vector<std::string>{"a", "b,c", "d\"e", ""}));
  EXPECT_THROW(split_csv_line("\"open"), ValidationError);
}

}  // namespace
}  // namespace fifogap
