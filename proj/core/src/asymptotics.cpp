#include "scalab/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "json.hpp"
#include "scalab/errors.hpp"

namespace scalab {

namespace {

using Bound = LimitValue::Bound;

constexpr PuCount kNeverN = std::numeric_limits<PuCount>::max() / 4;

int compare(double x, double y, double tol) {
  if (std::abs(x - y) <= tol) return 0;
  return x < y ? -1 : 1;
}

/// Smallest integer N >= 1 with N >= x.
PuCount ceil_n(double x) {
  if (!(x > 1.0)) return 1;
  if (!std::isfinite(x) || x >= static_cast<double>(kNeverN)) return kNeverN;
  return static_cast<PuCount>(std::ceil(x));
}

struct Exponents {
  double af, ag, ah, d;
  double tol;

  explicit Exponents(const ScalabilityModel& m, double tol)
      : af(m.f().exponent()),
        ag(m.g().exponent()),
        ah(m.h().exponent()),
        d(m.g().exponent() - m.f().exponent()),
        tol(tol) {}

  int d_vs(double v) const { return compare(d, v, tol); }
  int ah_vs(double v) const { return compare(ah, v, tol); }
  int ah_vs_d() const { return compare(ah, d, tol); }
};

const char* rel(int c) {
  switch (c) {
    case -1:
      return "<";
    case 0:
      return "=";
    default:
      return ">";
  }
}

std::string cond_d(int c, std::string_view rhs) {
  return fmt::format("alpha_g - alpha_f {} {}", rel(c), rhs);
}
std::string cond_h(int c, std::string_view rhs) {
  return fmt::format("alpha_h {} {}", rel(c), rhs);
}

bool s_is_one(const ScalabilityModel& m) { return m.s() == 1.0; }
bool s_is_zero(const ScalabilityModel& m) { return m.s() == 0.0; }

constexpr const char* kDivBySNote =
    "degenerate: unbounded coefficient (limit formula divides by s * c_f with s = 0)";

}  // namespace

std::string_view to_string(SpeedupCase c) {
  static constexpr std::string_view names[] = {"A_S", "B_S", "C_S", "D_S", "E_S", "F_S"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(EfficiencyCase c) {
  static constexpr std::string_view names[] = {"A_E", "B_E", "C_E", "D_E",
                                               "E_E", "F_E", "G_E", "H_E"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(ScalabilityCase c) {
  static constexpr std::string_view names[] = {"A_SC", "B_SC", "C_SC", "D_SC",
                                               "E_SC", "F_SC", "G_SC", "H_SC",
                                               "I_SC", "J_SC", "K_SC", "E_SC_extended"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(LimitValue::Kind k) {
  switch (k) {
    case LimitValue::Kind::Finite:
      return "finite";
    case LimitValue::Kind::Unbounded:
      return "unbounded";
    case LimitValue::Kind::Degenerate:
      return "degenerate";
  }
  return "?";
}

std::string_view to_string(LimitValue::Bound b) {
  switch (b) {
    case Bound::UpperBound:
      return "upper";
    case Bound::LowerBound:
      return "lower";
    case Bound::TwoSided:
      return "two-sided";
    case Bound::NotABound:
      return "none";
  }
  return "?";
}

LimitValue LimitValue::finite(double value, Bound bound, PuCount valid_from) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ComputationError("finite limit must be a nonnegative real");
  }
  LimitValue v;
  v.kind = Kind::Finite;
  v.value = value;
  v.bound = bound;
  v.valid_from = valid_from;
  return v;
}

LimitValue LimitValue::unbounded(double growth_exponent) {
  if (!(growth_exponent > 0.0)) {
    throw ComputationError("unbounded limit requires a positive growth exponent");
  }
  LimitValue v;
  v.kind = Kind::Unbounded;
  v.growth_exponent = growth_exponent;
  return v;
}

LimitValue LimitValue::degenerate(std::string note) {
  LimitValue v;
  v.kind = Kind::Degenerate;
  v.note = std::move(note);
  return v;
}

SpeedupClass classify_speedup(const ScalabilityModel& m, const ClassifierOptions& opts) {
  const double sf = m.s() * m.f().coeff();
  const double pg = m.p() * m.g().coeff();
  const double ch = m.h().coeff();

  if (s_is_one(m)) {
    return {SpeedupCase::C, LimitValue::finite(1.0, Bound::TwoSided), {"s = 1"}};
  }

  const Exponents x(m, opts.exponent_tol);
  const int dc = x.d_vs(0.0);
  const int hc = x.ah_vs(0.0);

  if (dc == 0) {
    if (hc > 0) {
      auto limit = s_is_zero(m) ? LimitValue::degenerate(kDivBySNote)
                                : LimitValue::finite((sf + pg) / sf, Bound::UpperBound);
      return {SpeedupCase::A, limit, {cond_d(0, "0"), cond_h(1, "0")}};
    }
    return {SpeedupCase::B,
            LimitValue::finite((sf + pg) / (sf + pg / ch), Bound::UpperBound),
            {cond_d(0, "0"), cond_h(0, "0")}};
  }

  if (dc < 0) {
    // S >= 1 exactly when h(N) >= 1.
    LimitValue limit;
    if (ch >= 1.0) {
      limit = LimitValue::finite(1.0, Bound::LowerBound);
    } else if (hc > 0) {
      limit = LimitValue::finite(1.0, Bound::LowerBound, ceil_n(std::pow(1.0 / ch, 1.0 / x.ah)));
    } else {
      limit = LimitValue::finite(1.0, Bound::UpperBound);
    }
    return {SpeedupCase::C, limit, {cond_d(-1, "0")}};
  }

  if (hc == 0) {
    // S <= c_h exactly when c_h >= 1.
    const Bound b = ch > 1.0 ? Bound::UpperBound : (ch < 1.0 ? Bound::LowerBound : Bound::TwoSided);
    return {SpeedupCase::F, LimitValue::finite(ch, b), {cond_d(1, "0"), cond_h(0, "0")}};
  }

  if (x.ah_vs_d() <= 0) {
    return {SpeedupCase::D,
            LimitValue::unbounded(x.ah),
            {cond_d(1, "0"), cond_h(1, "0"), "alpha_g - alpha_h - alpha_f >= 0"}};
  }
  return {SpeedupCase::E,
          LimitValue::unbounded(x.d),
          {cond_d(1, "0"), cond_h(1, "0"), "alpha_g - alpha_h - alpha_f < 0"}};
}

EfficiencyClass classify_efficiency(const ScalabilityModel& m, const ClassifierOptions& opts) {
  const double sf = m.s() * m.f().coeff();
  const double pg = m.p() * m.g().coeff();
  const double ch = m.h().coeff();

  if (s_is_one(m)) {
    return {EfficiencyCase::A, LimitValue::finite(0.0, Bound::LowerBound), {"s = 1"}};
  }

  const Exponents x(m, opts.exponent_tol);
  const int d1 = x.d_vs(1.0);
  const int h1 = x.ah_vs(1.0);

  if (d1 < 0) {
    return {EfficiencyCase::A, LimitValue::finite(0.0, Bound::LowerBound), {cond_d(-1, "1")}};
  }

  if (d1 == 0) {
    if (h1 < 0) {
      return {EfficiencyCase::B,
              LimitValue::finite(0.0, Bound::LowerBound),
              {cond_d(0, "1"), "0 <= alpha_h < 1"}};
    }
    if (h1 == 0) {
      return {EfficiencyCase::C,
              LimitValue::finite(pg / (sf + pg / ch), Bound::LowerBound),
              {cond_d(0, "1"), cond_h(0, "1")}};
    }
    std::vector<std::string> conds{cond_d(0, "1"), cond_h(1, "1")};
    if (s_is_zero(m)) {
      return {EfficiencyCase::D, LimitValue::degenerate(kDivBySNote), conds};
    }
    // sign(E - p*c_g/(s*c_f)) = sign(K - N^(2 - alpha_h)), K = (s c_f)^2 c_h / (p c_g)^2.
    const double k = sf * sf * ch / (pg * pg);
    const int h2 = x.ah_vs(2.0);
    LimitValue limit;
    if (h2 < 0) {
      limit = LimitValue::finite(pg / sf, Bound::UpperBound, ceil_n(std::pow(k, 1.0 / (2.0 - x.ah))));
    } else if (h2 > 0) {
      limit = LimitValue::finite(pg / sf, Bound::LowerBound,
                                 ceil_n(std::pow(k, -1.0 / (x.ah - 2.0))));
    } else {
      const Bound b = k > 1.0 ? Bound::LowerBound : (k < 1.0 ? Bound::UpperBound : Bound::TwoSided);
      limit = LimitValue::finite(pg / sf, b);
    }
    return {EfficiencyCase::D, limit, conds};
  }

  if (h1 < 0) {
    return {EfficiencyCase::E,
            LimitValue::finite(0.0, Bound::LowerBound),
            {cond_d(1, "1"), "0 <= alpha_h < 1"}};
  }
  if (h1 == 0) {
    // E <= c_h exactly when c_h * N >= 1.
    return {EfficiencyCase::F,
            LimitValue::finite(ch, Bound::UpperBound, ceil_n(1.0 / ch)),
            {cond_d(1, "1"), cond_h(0, "1")}};
  }
  if (x.ah_vs_d() > 0) {
    return {EfficiencyCase::G,
            LimitValue::unbounded(x.d - 1.0),
            {cond_d(1, "1"), cond_h(1, "1"), "alpha_h > alpha_g - alpha_f"}};
  }
  auto limit = LimitValue::unbounded(x.ah - 1.0);
  limit.bound = Bound::UpperBound;
  limit.envelope_coeff = ch;
  limit.valid_from = ceil_n(1.0 / ch);
  return {EfficiencyCase::H, limit,
          {cond_d(1, "1"), cond_h(1, "1"), "alpha_h <= alpha_g - alpha_f"}};
}

std::string_view type_label(ScalabilityCase c) {
  switch (c) {
    case ScalabilityCase::A:
      return "(1, 0)";
    case ScalabilityCase::B:
      return "(β_{s,f,g}, 0)";
    case ScalabilityCase::C:
      return "(β_{s,f,g,h}, 0)";
    case ScalabilityCase::D:
      return "(β_h, 0)";
    case ScalabilityCase::E:
    case ScalabilityCase::EExtended:
      return "(∞_h, 0)";
    case ScalabilityCase::F:
      return "(∞_h, ∞_h)";
    case ScalabilityCase::G:
      return "(∞_h, γ_{s,f,g,h})";
    case ScalabilityCase::H:
      return "(∞_h, γ_h)";
    case ScalabilityCase::I:
      return "(∞_{f,g}, ∞_{f,g})";
    case ScalabilityCase::J:
      return "(∞_{f,g}, 0)";
    case ScalabilityCase::K:
      return "(∞_{f,g}, γ_{s,f,g})";
  }
  return "?";
}

bool consistent(ScalabilityCase sc, SpeedupCase s, EfficiencyCase e) {
  using SC = ScalabilityCase;
  using S = SpeedupCase;
  using E = EfficiencyCase;
  switch (sc) {
    case SC::A:
      return s == S::C && e == E::A;
    case SC::B:
      return s == S::A && e == E::A;
    case SC::C:
      return s == S::B && e == E::A;
    case SC::D:
      // 0 < alpha_g - alpha_f < 1 with alpha_h = 0 lands in A_E as well.
      return s == S::F && (e == E::E || e == E::B || e == E::A);
    case SC::E:
      return s == S::D && (e == E::E || e == E::B);
    case SC::EExtended:
      return s == S::D && e == E::A;
    case SC::F:
      return s == S::D && e == E::H;
    case SC::G:
      return s == S::D && e == E::C;
    case SC::H:
      return s == S::D && e == E::F;
    case SC::I:
      return s == S::E && e == E::G;
    case SC::J:
      return s == S::E && e == E::A;
    case SC::K:
      return s == S::E && e == E::D;
  }
  return false;
}

Classification classify(const ScalabilityModel& m, const ClassifierOptions& opts) {
  auto sp = classify_speedup(m, opts);
  auto ef = classify_efficiency(m, opts);

  Classification out;
  out.speedup_case = sp.kase;
  out.efficiency_case = ef.kase;
  out.speedup_limit = std::move(sp.limit);
  out.efficiency_limit = std::move(ef.limit);

  if (s_is_one(m)) {
    out.scalability_case = ScalabilityCase::A;
    out.conditions = {"s = 1"};
    out.notices.emplace_back("degenerate: s = 1, speedup is identically 1");
    out.degenerate = true;
    out.type_label = std::string(type_label(out.scalability_case));
    return out;
  }

  const Exponents x(m, opts.exponent_tol);
  const int d0 = x.d_vs(0.0);
  const int d1 = x.d_vs(1.0);
  const int h0 = x.ah_vs(0.0);
  const int h1 = x.ah_vs(1.0);
  const int hd = x.ah_vs_d();

  using SC = ScalabilityCase;
  SC sc;
  std::vector<std::string> conds;
  if (d0 < 0) {
    sc = SC::A;
    conds = {"alpha_g - alpha_f < 0"};
  } else if (d0 == 0) {
    sc = h0 > 0 ? SC::B : SC::C;
    conds = {h0 > 0 ? "0 = alpha_g - alpha_f < alpha_h" : "0 = alpha_g - alpha_f = alpha_h"};
  } else if (h0 == 0) {
    sc = SC::D;
    conds = {"0 = alpha_h < alpha_g - alpha_f"};
  } else if (h1 < 0 && d1 >= 0) {
    sc = SC::E;
    conds = {"0 < alpha_h < 1 <= alpha_g - alpha_f"};
  } else if (d1 < 0 && hd <= 0) {
    sc = SC::EExtended;
    conds = {"0 < alpha_h <= alpha_g - alpha_f < 1"};
  } else if (d1 < 0) {
    sc = SC::J;
    conds = {"0 < alpha_g - alpha_f < min{1, alpha_h}"};
  } else if (d1 == 0 && h1 == 0) {
    sc = SC::G;
    conds = {"alpha_h = alpha_g - alpha_f = 1"};
  } else if (h1 == 0) {
    sc = SC::H;
    conds = {"1 = alpha_h < alpha_g - alpha_f"};
  } else if (d1 == 0) {
    sc = SC::K;
    conds = {"1 = alpha_g - alpha_f < alpha_h"};
  } else if (hd <= 0) {
    sc = SC::F;
    conds = {"1 < alpha_h <= alpha_g - alpha_f"};
  } else {
    sc = SC::I;
    conds = {"1 < alpha_g - alpha_f < alpha_h"};
  }

  if (!consistent(sc, out.speedup_case, out.efficiency_case)) {
    throw ComputationError(fmt::format("internal classification mismatch: {} with ({}, {})",
                                       to_string(sc), to_string(out.speedup_case),
                                       to_string(out.efficiency_case)));
  }

  out.scalability_case = sc;
  out.type_label = std::string(type_label(sc));
  out.conditions = std::move(conds);
  out.conditions.insert(out.conditions.end(), sp.conditions.begin(), sp.conditions.end());
  out.conditions.insert(out.conditions.end(), ef.conditions.begin(), ef.conditions.end());

  if (sc == SC::EExtended) {
    out.notices.emplace_back(
        "region 0 < alpha_h <= alpha_g - alpha_f < 1 has no row of its own in the case table; "
        "labelled E_SC_extended (speedup D_S, efficiency A_E)");
  }
  if (s_is_zero(m)) {
    out.degenerate = true;
    out.notices.emplace_back(
        "degenerate: s = 0, speedup equals h(N) exactly; limits derived for s > 0");
  }
  if (out.speedup_case == SpeedupCase::F && m.h().coeff() < 1.0) {
    out.notices.emplace_back("c_h < 1: speedup converges to a value below 1");
  }
  if (out.speedup_limit.kind == LimitValue::Kind::Degenerate ||
      out.efficiency_limit.kind == LimitValue::Kind::Degenerate) {
    out.degenerate = true;
  }
  return out;
}

std::string Classification::type_with_values() const {
  auto fmt_value = [](const LimitValue& v) -> std::string {
    if (v.kind != LimitValue::Kind::Finite) return "?";
    return fmt::format("{:g}", v.value);
  };
  switch (scalability_case) {
    case ScalabilityCase::B:
      return fmt::format("(β_{{s,f,g}}={}, 0)", fmt_value(speedup_limit));
    case ScalabilityCase::C:
      return fmt::format("(β_{{s,f,g,h}}={}, 0)", fmt_value(speedup_limit));
    case ScalabilityCase::D:
      return fmt::format("(β_h={}, 0)", fmt_value(speedup_limit));
    case ScalabilityCase::G:
      return fmt::format("(∞_h, γ_{{s,f,g,h}}={})", fmt_value(efficiency_limit));
    case ScalabilityCase::H:
      return fmt::format("(∞_h, γ_h={})", fmt_value(efficiency_limit));
    case ScalabilityCase::K:
      return fmt::format("(∞_{{f,g}}, γ_{{s,f,g}}={})", fmt_value(efficiency_limit));
    default:
      return type_label;
  }
}

namespace {

nlohmann::json limit_json(const LimitValue& v) {
  nlohmann::json j{{"kind", to_string(v.kind)}};
  switch (v.kind) {
    case LimitValue::Kind::Finite:
      j["value"] = v.value;
      j["bound"] = to_string(v.bound);
      j["valid_from_n"] = v.valid_from;
      break;
    case LimitValue::Kind::Unbounded:
      j["growth_exponent"] = v.growth_exponent;
      if (v.bound == Bound::UpperBound) {
        j["bound"] = to_string(v.bound);
        j["envelope_coeff"] = v.envelope_coeff;
        j["valid_from_n"] = v.valid_from;
      }
      break;
    case LimitValue::Kind::Degenerate:
      j["note"] = v.note;
      break;
  }
  return j;
}

}  // namespace

std::string to_json(const Classification& c) {
  nlohmann::json j{
      {"schema", 1},
      {"speedup_case", to_string(c.speedup_case)},
      {"efficiency_case", to_string(c.efficiency_case)},
      {"scalability_case", to_string(c.scalability_case)},
      {"type", c.type_label},
      {"type_with_values", c.type_with_values()},
      {"speedup_limit", limit_json(c.speedup_limit)},
      {"efficiency_limit", limit_json(c.efficiency_limit)},
      {"conditions", c.conditions},
      {"notices", c.notices},
      {"degenerate", c.degenerate},
  };
  return j.dump(2);
}

GrowthReport verify_growth(const ScalabilityModel& m, const LimitValue& claimed, PuCount n_probe,
                           double tolerance, Quantity quantity) {
  auto q = [&](PuCount n) { return quantity == Quantity::Speedup ? speedup(m, n) : efficiency(m, n); };
  GrowthReport r;
  const double at_n = q(n_probe);
  const double at_2n = q(2 * n_probe);

  switch (claimed.kind) {
    case LimitValue::Kind::Degenerate:
      r.passed = false;
      r.direction_ok = false;
      r.detail = "degenerate limit cannot be verified numerically";
      return r;

    case LimitValue::Kind::Unbounded: {
      r.observed = at_2n / at_n;
      r.expected = std::exp2(claimed.growth_exponent);
      r.deviation = std::abs(r.observed / r.expected - 1.0);
      if (claimed.bound == Bound::UpperBound && n_probe >= claimed.valid_from) {
        const auto env = [&](PuCount n) {
          return claimed.envelope_coeff * std::pow(static_cast<double>(n), claimed.growth_exponent);
        };
        const double slack = 1e-12;
        r.direction_ok = at_n <= env(n_probe) * (1 + slack) && at_2n <= env(2 * n_probe) * (1 + slack);
      }
      r.passed = r.deviation <= tolerance && r.direction_ok;
      r.detail = fmt::format("Q(2N)/Q(N) = {:.9g} vs 2^{:g} = {:.9g}", r.observed,
                             claimed.growth_exponent, r.expected);
      return r;
    }

    case LimitValue::Kind::Finite: {
      const double v = claimed.value;
      r.observed = at_n;
      r.expected = v;
      r.deviation = v == 0.0 ? std::abs(at_n) : std::abs(at_n - v) / std::abs(v);
      const double slack = 1e-12 * std::max(1.0, std::abs(v));
      bool side_ok = true;
      if (n_probe >= claimed.valid_from) {
        switch (claimed.bound) {
          case Bound::UpperBound:
            side_ok = at_n <= v + slack && at_2n <= v + slack;
            break;
          case Bound::LowerBound:
            side_ok = at_n >= v - slack && at_2n >= v - slack;
            break;
          case Bound::TwoSided:
            side_ok = std::abs(at_n - v) <= slack && std::abs(at_2n - v) <= slack;
            break;
          case Bound::NotABound:
            break;
        }
      }
      const bool approaching = std::abs(at_2n - v) <= std::abs(at_n - v) * (1 + 1e-9) + slack;
      r.direction_ok = side_ok && approaching;
      r.passed = r.deviation <= tolerance && r.direction_ok;
      r.detail = fmt::format("Q({}) = {:.9g}, limit {:.9g} ({})", n_probe, at_n, v,
                             to_string(claimed.bound));
      return r;
    }
  }
  return r;
}

}  // namespace scalab
