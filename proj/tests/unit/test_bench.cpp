#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "reference_results.hpp"
#include "scalab/bench.hpp"
#include "scalab/errors.hpp"
#include "scalab/laws.hpp"
#include "scalab/lu_oracle.hpp"

using namespace scalab;
using namespace scalab::bench;

TEST(Partition, CoversRangeWithoutOverlap) {
  for (std::size_t total : {0u, 1u, 7u, 64u, 1000u, 1023u}) {
    for (int parts : {1, 2, 3, 4, 7, 16}) {
      const auto ch = partition(total, parts);
      ASSERT_EQ(ch.size(), static_cast<std::size_t>(parts));
      std::size_t pos = 0;
      for (const auto& r : ch) {
        EXPECT_EQ(r.begin, pos);
        EXPECT_GE(r.end, r.begin);
        EXPECT_LE(r.end - r.begin, total / parts + 1);
        pos = r.end;
      }
      EXPECT_EQ(pos, total);
    }
  }
  EXPECT_THROW(partition(5, 0), ValidationError);
}

TEST(RandomMatrix, DeterministicAndInRange) {
  const auto a = random_int_matrix(17, 9, 123, -1000, 1000);
  const auto b = random_int_matrix(17, 9, 123, -1000, 1000);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, random_int_matrix(17, 9, 124, -1000, 1000));
  for (auto v : a) {
    EXPECT_GE(v, -1000);
    EXPECT_LE(v, 1000);
  }
  const auto l1 = random_lu_batch(3, 8, 5, 1, 1000);
  const auto l2 = random_lu_batch(3, 8, 5, 1, 1000);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(std::memcmp(l1[k].data(), l2[k].data(), l1[k].size() * sizeof(double)), 0);
  }
}

TEST(Matmul, MatchesSequentialProduct) {
  const std::size_t r = 12, k = 7, c = 5;
  const auto a = random_int_matrix(r, k, 1, -1000, 1000);
  const auto b = random_int_matrix(k, c, 2, -1000, 1000);
  std::vector<std::int64_t> ref(r * c, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t q = 0; q < k; ++q) ref[i * c + j] += a[i * k + q] * b[q * c + j];
  for (int w : {1, 2, 3, 4, 12}) EXPECT_EQ(matmul_parallel(a, b, r, k, c, w), ref);
}

TEST(Lu, MultiplyBackReproducesInput) {
  const auto batch = random_lu_batch(4, 8, 77, 1, 1000);
  for (int w : {1, 2, 4}) {
    const auto f = lu_parallel(batch, 8, w);
    for (std::size_t d = 0; d < batch.size(); ++d) {
      const auto back = lu_multiply_back(f[d]);
      for (std::size_t e = 0; e < back.size(); ++e) {
        EXPECT_LE(std::abs(back[e] - batch[d][e]), 1e-6 * std::abs(batch[d][e]));
      }
      for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(f[d].l[i * 8 + i], 1.0);
        for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(f[d].u[i * 8 + j], 0.0);
        for (std::size_t j = i + 1; j < 8; ++j) EXPECT_EQ(f[d].l[i * 8 + j], 0.0);
      }
    }
  }
}

TEST(Lu, ParallelBitwiseEqualsSequential) {
  for (std::size_t z : {2u, 5u, 16u, 33u}) {
    const auto batch = random_lu_batch(5, z, z, 1, 1000);
    for (int w : {1, 2, 3, 4}) {
      const auto par = lu_parallel(batch, z, w);
      for (std::size_t d = 0; d < batch.size(); ++d) {
        const auto seq = lu_sequential(batch[d], z);
        ASSERT_EQ(std::memcmp(seq.l.data(), par[d].l.data(), z * z * sizeof(double)), 0);
        ASSERT_EQ(std::memcmp(seq.u.data(), par[d].u.data(), z * z * sizeof(double)), 0);
      }
    }
  }
}

TEST(DeriveColumns, PrintedMatmulRow) {
  std::vector<BenchRow> rows(1);
  rows[0].n = 2;
  rows[0].t_total = 953760;
  rows[0].t_baseline = 1529020;
  derive_columns(rows);
  EXPECT_TRUE(oracle::match_decimals("1.603150", rows[0].s_comp).exact);
  EXPECT_TRUE(oracle::match_decimals("0.801575", rows[0].e_comp).exact);
  EXPECT_DOUBLE_EQ(rows[0].s_comp * rows[0].t_total, rows[0].t_baseline);
  EXPECT_DOUBLE_EQ(rows[0].e_comp * 2, rows[0].s_comp);
}

TEST(DeriveColumns, EqualTimesAndLuRow) {
  std::vector<BenchRow> rows{{2, 5.0, 0, 0, 0, 0, 5.0}, {2, 10, 0, 0, 0, 0, 21}};
  derive_columns(rows);
  EXPECT_EQ(rows[0].s_comp, 1.0);
  EXPECT_EQ(rows[0].e_comp, 0.5);
  EXPECT_DOUBLE_EQ(rows[1].s_comp, 2.1);
  std::vector<BenchRow> bad{{2, 0.0, 0, 0, 0, 0, 1}};
  EXPECT_THROW(derive_columns(bad), ComputationError);
}

TEST(TheoreticalOverlay, PrintedValues) {
  EXPECT_NEAR(speedup(laws::amdahl(testdata::kMatmulS), 16), 11.817493, 1e-6);
  EXPECT_NEAR(lu::lu_speedup_theoretical(0.01, 100, 64), 63.999844, 1e-5);
}

TEST(Config, ParsesAndValidates) {
  const auto c = parse_config(
      R"({"experiment":"lu_variable","thread_counts":[1,2],"lu":{"z1":8,"m":2},"seed":9,"repetitions":1})");
  EXPECT_EQ(c.experiment, Experiment::LuVariable);
  EXPECT_EQ(c.lu.z1, 8u);
  EXPECT_EQ(c.range(), (std::pair<std::int64_t, std::int64_t>{1, 1000}));
  EXPECT_EQ(parse_config(to_json(c)).lu.m, 2u);
  EXPECT_THROW(parse_config(R"({"thread_counts":[2,4]})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"bogus":1})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"thread_counts":[1,3],"matmul":{"rows_a":10}})"), ValidationError);
  EXPECT_THROW(parse_config("not json"), ValidationError);
  EXPECT_THROW(parse_config(R"({"experiment":"lu_variable","lu":{"z1":1}})"), ValidationError);
}

TEST(Run, SmallMatmul) {
  BenchConfig c;
  c.thread_counts = {1, 2};
  c.matmul = {16, 8, 16};
  c.repetitions = 1;
  const auto r = run_matmul(c);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].s_comp, 1.0);
  EXPECT_EQ(r.rows[0].e_comp, 1.0);
  EXPECT_EQ(r.rows[0].s_theor, 1.0);
  EXPECT_GT(r.s_measured, 0.0);
  for (const auto& row : r.rows) EXPECT_DOUBLE_EQ(row.s_comp * row.t_total, row.t_baseline);
}

TEST(Run, SmallLuUsesFloor) {
  BenchConfig c;
  c.experiment = Experiment::LuVariable;
  c.thread_counts = {1, 2};
  c.lu = {4, 2, 0.5};
  c.repetitions = 1;
  const auto r = run_lu(c);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_GE(r.s_used, 0.5);
  EXPECT_NEAR(r.rows[1].s_theor, lu::lu_speedup_theoretical(r.s_used, 4, 2), 1e-15);
}

TEST(Report, CsvRoundTripIsByteIdentical) {
  BenchResult r;
  r.environment = {{"experiment", "matmul_fixed"}, {"note", "a: b"}};
  r.rows = {{1, 1529020, 1, 1, 1, 1, 1529020}, {2, 953760, 0, 0, 1.953898, 0.976949, 1529020}};
  derive_columns(r.rows);
  std::ostringstream a;
  write_csv(a, r);
  std::istringstream in(a.str());
  const auto back = parse_csv(in);
  std::ostringstream b;
  write_csv(b, back);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("2,953760.000000,1.603150,0.801575,1.953898,0.976949,1529020.000000"), std::string::npos);
}

TEST(Report, EmptyResultIsAnError) {
  std::ostringstream os;
  EXPECT_THROW(write_csv(os, BenchResult{}), ValidationError);
  EXPECT_THROW(write_svg(os, BenchResult{}), ValidationError);
  std::istringstream in("N,t_total,S_comp,E_comp,S_theor,E_theor,t_baseline\n");
  EXPECT_THROW(parse_csv(in), ValidationError);
}

TEST(Report, SvgHasTwoSeries) {
  BenchResult r;
  r.rows = {{1, 10, 1, 1, 1, 1, 10}, {2, 6, 1.6, 0.8, 1.9, 0.95, 10}};
  std::ostringstream os;
  write_svg(os, r);
  const auto s = os.str();
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
  std::size_t count = 0;
  for (std::size_t p = s.find("<polyline"); p != std::string::npos; p = s.find("<polyline", p + 1)) ++count;
  EXPECT_EQ(count, 2u);
}
