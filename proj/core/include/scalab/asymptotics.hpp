#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scalab/model.hpp"

namespace scalab {

enum class SpeedupCase { A, B, C, D, E, F };
enum class EfficiencyCase { A, B, C, D, E, F, G, H };
/// EExtended covers 0 < alpha_h <= alpha_g - alpha_f < 1 (speedup D_S,
/// efficiency A_E), a region with no row of its own in the case table.
enum class ScalabilityCase { A, B, C, D, E, F, G, H, I, J, K, EExtended };

std::string_view to_string(SpeedupCase c);
std::string_view to_string(EfficiencyCase c);
std::string_view to_string(ScalabilityCase c);

/// Asymptotic limit of speedup or efficiency.
///
/// Finite limits carry the side from which the quantity is bounded, valid
/// for every N >= valid_from. Unbounded limits carry the growth exponent e of
/// Theta(N^e); when bound is UpperBound the quantity is additionally bounded
/// by envelope_coeff * N^e for N >= valid_from. Degenerate limits are formula
/// values that cannot be evaluated (division by s * c_f with s = 0).
struct LimitValue {
  enum class Kind { Finite, Unbounded, Degenerate };
  enum class Bound { UpperBound, LowerBound, TwoSided, NotABound };

  Kind kind = Kind::Finite;
  double value = 0.0;
  Bound bound = Bound::NotABound;
  double growth_exponent = 0.0;
  double envelope_coeff = 0.0;
  PuCount valid_from = 1;
  std::string note;

  static LimitValue finite(double value, Bound bound, PuCount valid_from = 1);
  static LimitValue unbounded(double growth_exponent);
  static LimitValue degenerate(std::string note);

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_unbounded() const { return kind == Kind::Unbounded; }
};

std::string_view to_string(LimitValue::Kind k);
std::string_view to_string(LimitValue::Bound b);

struct ClassifierOptions {
  /// Absolute tolerance for treating two exponents (or an exponent and 0/1)
  /// as equal.
  double exponent_tol = 1e-12;
};

struct SpeedupClass {
  SpeedupCase kase;
  LimitValue limit;
  std::vector<std::string> conditions;
};

struct EfficiencyClass {
  EfficiencyCase kase;
  LimitValue limit;
  std::vector<std::string> conditions;
};

struct Classification {
  SpeedupCase speedup_case;
  EfficiencyCase efficiency_case;
  ScalabilityCase scalability_case;
  LimitValue speedup_limit;
  LimitValue efficiency_limit;
  /// Generic type of the case, e.g. "(∞_h, γ_h)".
  std::string type_label;
  std::vector<std::string> conditions;
  /// Degeneracy and domain remarks (s = 0, s = 1, c_h < 1 with F_S).
  std::vector<std::string> notices;
  bool degenerate = false;

  /// type_label with the finite limit values substituted, e.g.
  /// "(∞_h, γ_h=1)".
  std::string type_with_values() const;
};

SpeedupClass classify_speedup(const ScalabilityModel& model, const ClassifierOptions& opts = {});
EfficiencyClass classify_efficiency(const ScalabilityModel& model,
                                    const ClassifierOptions& opts = {});
Classification classify(const ScalabilityModel& model, const ClassifierOptions& opts = {});

std::string_view type_label(ScalabilityCase c);

/// Whether (speedup case, efficiency case) is a combination listed for the
/// scalability case.
bool consistent(ScalabilityCase sc, SpeedupCase s, EfficiencyCase e);

/// Serializes the classification report (JSON, "schema": 1).
std::string to_json(const Classification& c);

enum class Quantity { Speedup, Efficiency };

struct GrowthReport {
  bool passed = false;
  /// Finite: relative distance of Q(N_probe) to the limit (absolute when the
  /// limit is 0). Unbounded: |Q(2N)/Q(N) / 2^e - 1|.
  double deviation = 0.0;
  double observed = 0.0;
  double expected = 0.0;
  /// Bound side and approach direction agree with the claimed flag.
  bool direction_ok = true;
  std::string detail;
};

/// Numeric cross-check of a classified limit at N_probe (and 2*N_probe).
GrowthReport verify_growth(const ScalabilityModel& model, const LimitValue& claimed,
                           PuCount n_probe, double tolerance,
                           Quantity quantity = Quantity::Speedup);

}  // namespace scalab
