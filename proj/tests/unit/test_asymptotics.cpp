#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "json.hpp"
#include "scalab/asymptotics.hpp"
#include "scalab/laws.hpp"
#include "scalab/lu_oracle.hpp"

using namespace scalab;
using Kind = LimitValue::Kind;
using Bound = LimitValue::Bound;

namespace {

ScalabilityModel mk(double s, double cf, double af, double cg, double ag, double ch, double ah) {
  return {WorkloadSplit(s), PowerLaw(cf, af), PowerLaw(cg, ag), PowerLaw(ch, ah)};
}

ScalabilityModel exps(double af, double ag, double ah, double s = 0.3) { return mk(s, 1, af, 1, ag, 1, ah); }

}  // namespace

TEST(ClassifySpeedup, AmdahlIsUpperBoundedByOneOverS) {
  const auto r = classify_speedup(laws::amdahl(0.023595));
  EXPECT_EQ(r.kase, SpeedupCase::A);
  EXPECT_EQ(r.limit.kind, Kind::Finite);
  EXPECT_NEAR(r.limit.value, 42.3818, 1e-4);
  EXPECT_EQ(r.limit.bound, Bound::UpperBound);
}

TEST(ClassifySpeedup, GustafsonGrowsLinearly) {
  const auto r = classify_speedup(laws::gustafson(0.5));
  EXPECT_EQ(r.kase, SpeedupCase::D);
  EXPECT_EQ(r.limit.kind, Kind::Unbounded);
  EXPECT_DOUBLE_EQ(r.limit.growth_exponent, 1.0);
}

TEST(ClassifySpeedup, ShrinkingParallelWorkloadTendsToOne) {
  for (double ah : {0.0, 0.5, 2.0}) {
    const auto r = classify_speedup(exps(1.0, 0.5, ah));
    EXPECT_EQ(r.kase, SpeedupCase::C);
    EXPECT_DOUBLE_EQ(r.limit.value, 1.0);
    EXPECT_EQ(r.limit.bound, Bound::LowerBound);
  }
}

TEST(ClassifySpeedup, ConstantHCases) {
  const auto b = classify_speedup(mk(0.25, 1, 1, 1, 1, 2, 0));
  EXPECT_EQ(b.kase, SpeedupCase::B);
  EXPECT_NEAR(b.limit.value, 1.0 / (0.25 + 0.75 / 2), 1e-15);
  const auto f = classify_speedup(mk(0.25, 1, 0, 1, 1, 3, 0));
  EXPECT_EQ(f.kase, SpeedupCase::F);
  EXPECT_DOUBLE_EQ(f.limit.value, 3.0);
  EXPECT_EQ(f.limit.bound, Bound::UpperBound);
  EXPECT_EQ(classify_speedup(mk(0.25, 1, 0, 1, 1, 0.5, 0)).limit.bound, Bound::LowerBound);
  EXPECT_EQ(classify_speedup(mk(0.25, 1, 0, 1, 1, 1, 0)).limit.bound, Bound::TwoSided);
}

TEST(ClassifySpeedup, DAndEDependOnExponentGap) {
  EXPECT_EQ(classify_speedup(exps(0, 3, 2)).kase, SpeedupCase::D);
  EXPECT_EQ(classify_speedup(exps(0, 2, 2)).kase, SpeedupCase::D);
  const auto e = classify_speedup(exps(0, 0.5, 0.8));
  EXPECT_EQ(e.kase, SpeedupCase::E);
  EXPECT_DOUBLE_EQ(e.limit.growth_exponent, 0.5);
}

TEST(ClassifyEfficiency, Examples) {
  const auto g = classify_efficiency(laws::gustafson(0.5));
  EXPECT_EQ(g.kase, EfficiencyCase::C);
  EXPECT_DOUBLE_EQ(g.limit.value, 0.5);
  EXPECT_EQ(g.limit.bound, Bound::LowerBound);

  const auto a = classify_efficiency(laws::amdahl(0.2));
  EXPECT_EQ(a.kase, EfficiencyCase::A);
  EXPECT_EQ(a.limit.value, 0.0);
  EXPECT_EQ(a.limit.bound, Bound::LowerBound);

  const auto h = classify_efficiency(exps(0, 3, 2));
  EXPECT_EQ(h.kase, EfficiencyCase::H);
  EXPECT_EQ(h.limit.kind, Kind::Unbounded);
  EXPECT_DOUBLE_EQ(h.limit.growth_exponent, 1.0);
  EXPECT_EQ(h.limit.bound, Bound::UpperBound);
}

TEST(ClassifyEfficiency, AllCases) {
  EXPECT_EQ(classify_efficiency(exps(0, 0.5, 1)).kase, EfficiencyCase::A);
  EXPECT_EQ(classify_efficiency(exps(0, 1, 0.5)).kase, EfficiencyCase::B);
  EXPECT_EQ(classify_efficiency(exps(0, 1, 1)).kase, EfficiencyCase::C);
  const auto d = classify_efficiency(mk(0.2, 2, 0, 3, 1, 1, 1.5));
  EXPECT_EQ(d.kase, EfficiencyCase::D);
  EXPECT_NEAR(d.limit.value, 0.8 * 3 / (0.2 * 2), 1e-14);
  EXPECT_EQ(classify_efficiency(exps(0, 2, 0)).kase, EfficiencyCase::E);
  EXPECT_EQ(classify_efficiency(exps(0, 2, 0.5)).kase, EfficiencyCase::E);
  const auto f = classify_efficiency(mk(0.2, 1, 0, 1, 2, 0.7, 1));
  EXPECT_EQ(f.kase, EfficiencyCase::F);
  EXPECT_DOUBLE_EQ(f.limit.value, 0.7);
  const auto g = classify_efficiency(exps(0, 1.5, 2));
  EXPECT_EQ(g.kase, EfficiencyCase::G);
  EXPECT_DOUBLE_EQ(g.limit.growth_exponent, 0.5);
  EXPECT_EQ(classify_efficiency(exps(0, 3, 1.5)).kase, EfficiencyCase::H);
}

TEST(ClassifyEfficiency, HEnvelopeStartsAtCeilOfInverseCh) {
  const auto h = classify_efficiency(mk(0.2, 1, 0, 1, 3, 0.25, 2));
  EXPECT_EQ(h.kase, EfficiencyCase::H);
  EXPECT_EQ(h.limit.valid_from, 4);
  EXPECT_DOUBLE_EQ(h.limit.envelope_coeff, 0.25);
}

TEST(Classify, EveryScalabilityCaseIsReachable) {
  using SC = ScalabilityCase;
  const std::vector<std::pair<ScalabilityModel, SC>> cases = {
      {exps(1, 0.5, 1), SC::A},      {exps(0, 0, 1), SC::B},      {exps(0, 0, 0), SC::C},
      {exps(0, 2, 0), SC::D},        {exps(0, 2, 0.5), SC::E},    {exps(0, 0.8, 0.5), SC::EExtended},
      {exps(0, 3, 2), SC::F},        {exps(0, 1, 1), SC::G},      {exps(0, 2, 1), SC::H},
      {exps(0, 1.5, 2), SC::I},      {exps(0, 0.5, 1), SC::J},    {exps(0, 1, 1.5), SC::K},
  };
  for (const auto& [m, sc] : cases) {
    const auto c = classify(m);
    EXPECT_EQ(c.scalability_case, sc) << to_string(sc);
    EXPECT_TRUE(consistent(c.scalability_case, c.speedup_case, c.efficiency_case));
    EXPECT_EQ(c.type_label, type_label(sc));
  }
}

TEST(Classify, PresetExamples) {
  const auto sn = classify(laws::sun_ni(0.4, 2.0));
  EXPECT_EQ(sn.scalability_case, ScalabilityCase::H);
  EXPECT_EQ(sn.type_with_values(), "(∞_h, γ_h=1)");
  const auto gs = classify(laws::generalized_scaled(0.4));
  EXPECT_EQ(gs.scalability_case, ScalabilityCase::J);
  EXPECT_EQ(gs.type_label, "(∞_{f,g}, 0)");
  EXPECT_EQ(classify(lu::lu_model(0.01, 100)).scalability_case, ScalabilityCase::H);
}

TEST(Classify, ExtendedRegionIsFlagged) {
  const auto c = classify(exps(0, 0.5, 0.3));
  EXPECT_EQ(c.scalability_case, ScalabilityCase::EExtended);
  EXPECT_EQ(c.speedup_case, SpeedupCase::D);
  EXPECT_EQ(c.efficiency_case, EfficiencyCase::A);
  EXPECT_EQ(c.type_label, "(∞_h, 0)");
  EXPECT_FALSE(c.notices.empty());
}

TEST(Classify, ExponentToleranceIsConfigurable) {
  const auto m = exps(0, 1.0 + 1e-13, 1.0);
  EXPECT_EQ(classify(m).scalability_case, ScalabilityCase::G);
  EXPECT_EQ(classify(m, ClassifierOptions{0.0}).scalability_case, ScalabilityCase::H);
}

TEST(Classify, SZeroIsDegenerate) {
  const auto c = classify(mk(0.0, 1, 0, 1, 0, 1, 1));
  EXPECT_TRUE(c.degenerate);
  EXPECT_EQ(c.speedup_case, SpeedupCase::A);
  EXPECT_EQ(c.speedup_limit.kind, Kind::Degenerate);
  EXPECT_FALSE(c.notices.empty());
  const auto k = classify(mk(0.0, 1, 0, 1, 1, 1, 2));
  EXPECT_EQ(k.efficiency_limit.kind, Kind::Degenerate);
}

TEST(Classify, SOneIsConstantSpeedup) {
  const auto c = classify(mk(1.0, 1, 0, 1, 3, 1, 2));
  EXPECT_EQ(c.speedup_case, SpeedupCase::C);
  EXPECT_EQ(c.scalability_case, ScalabilityCase::A);
  EXPECT_DOUBLE_EQ(c.speedup_limit.value, 1.0);
  EXPECT_TRUE(c.degenerate);
}

TEST(Classify, JsonReport) {
  const auto j = nlohmann::json::parse(to_json(classify(laws::gustafson(0.5))));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["speedup_case"], "D_S");
  EXPECT_EQ(j["efficiency_case"], "C_E");
  EXPECT_EQ(j["scalability_case"], "G_SC");
  EXPECT_EQ(j["type"], "(∞_h, γ_{s,f,g,h})");
  EXPECT_EQ(j["efficiency_limit"]["value"], 0.5);
  EXPECT_TRUE(j["conditions"].is_array());
  EXPECT_FALSE(j["conditions"].empty());
}

TEST(Classify, TotalAndConsistentOnRandomParameters) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> a(0, 5), c(1e-9, 10), s(0.01, 0.99);
  std::map<ScalabilityCase, int> seen;
  for (int t = 0; t < 100000; ++t) {
    const auto m = mk(s(rng), c(rng), a(rng), c(rng), a(rng), c(rng), a(rng));
    const auto cl = classify(m);
    ASSERT_TRUE(consistent(cl.scalability_case, cl.speedup_case, cl.efficiency_case));
    ++seen[cl.scalability_case];
  }
  // continuous sampling only hits the open regions
  for (auto sc : {ScalabilityCase::A, ScalabilityCase::E, ScalabilityCase::EExtended, ScalabilityCase::F,
                  ScalabilityCase::I, ScalabilityCase::J}) {
    EXPECT_GT(seen[sc], 0) << to_string(sc);
  }
}

TEST(Classify, FiniteBoundsHoldOnGrid) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> half(0, 8);
  std::uniform_real_distribution<double> lc(std::log(0.5), std::log(2.0)), s(0.05, 0.95);
  for (int t = 0; t < 3000; ++t) {
    const auto m = mk(s(rng), std::exp(lc(rng)), half(rng) * 0.5, std::exp(lc(rng)), half(rng) * 0.5,
                      std::exp(lc(rng)), half(rng) * 0.5);
    const auto cl = classify(m);
    for (auto [lim, q] : {std::pair{cl.speedup_limit, Quantity::Speedup},
                          std::pair{cl.efficiency_limit, Quantity::Efficiency}}) {
      if (!lim.is_finite()) continue;
      const double slack = 1e-12 * std::max(1.0, lim.value);
      for (PuCount n = 2; n <= (1 << 17); n *= 2) {
        if (n < lim.valid_from) continue;
        const double v = q == Quantity::Speedup ? speedup(m, n) : efficiency(m, n);
        if (lim.bound == Bound::UpperBound) ASSERT_LE(v, lim.value + slack);
        if (lim.bound == Bound::LowerBound) ASSERT_GE(v, lim.value - slack);
        if (lim.bound == Bound::TwoSided) ASSERT_NEAR(v, lim.value, slack);
      }
    }
  }
}

TEST(VerifyGrowth, Examples) {
  const auto a = laws::amdahl(0.023595);
  const auto ra = verify_growth(a, LimitValue::finite(1 / 0.023595, Bound::UpperBound), 1'000'000, 1e-3);
  EXPECT_TRUE(ra.passed);
  EXPECT_LT(ra.deviation, 1e-3);

  const auto rg = verify_growth(laws::gustafson(0.5), LimitValue::unbounded(1.0), 1'000'000, 1e-6);
  EXPECT_TRUE(rg.passed);

  const auto gap = exps(0, 0.5, 0.3);
  // N^-0.2 correction: about 3e-3 off at 10^6
  const auto rgap = verify_growth(gap, classify(gap).speedup_limit, 1'000'000, 1e-2);
  EXPECT_TRUE(rgap.passed);
  EXPECT_NEAR(rgap.deviation, 3.29e-3, 1e-4);
  EXPECT_FALSE(verify_growth(gap, classify(gap).speedup_limit, 1'000'000, 1e-3).passed);
  EXPECT_NEAR(rgap.expected, std::pow(2.0, 0.3), 1e-15);
}

TEST(VerifyGrowth, RejectsWrongClaims) {
  EXPECT_FALSE(verify_growth(laws::gustafson(0.5), LimitValue::unbounded(2.0), 1'000'000, 1e-2).passed);
  EXPECT_FALSE(
      verify_growth(laws::amdahl(0.5), LimitValue::finite(1.5, Bound::LowerBound), 1'000'000, 1e-2).passed);
  EXPECT_FALSE(verify_growth(laws::amdahl(0.5), LimitValue::degenerate("x"), 1000, 1).passed);
}

TEST(LimitValue, Invariants) {
  EXPECT_ANY_THROW(LimitValue::unbounded(0.0));
  EXPECT_ANY_THROW(LimitValue::finite(-1.0, Bound::UpperBound));
  EXPECT_ANY_THROW(LimitValue::finite(INFINITY, Bound::UpperBound));
}
