#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scalab/model.hpp"

namespace scalab {

/// z(N) = c_z * N^alpha_z, or c_z * N^alpha_z - c_z when shifted (z(1) = 0).
class OverheadPoly {
 public:
  OverheadPoly(double c_z, double alpha_z, bool shifted);

  double c_z() const { return c_z_; }
  double alpha_z() const { return alpha_z_; }
  bool shifted() const { return shifted_; }

  double operator()(double n) const;
  double d1(double n) const;
  double d2(double n) const;

  friend bool operator==(const OverheadPoly&, const OverheadPoly&) = default;

 private:
  double c_z_;
  double alpha_z_;
  bool shifted_;
};

/// serial_time / (parallel_time + z(N)). N = 1 needs c_h = 1 and z(1) = 0.
double overhead_speedup(const ScalabilityModel& model, const OverheadPoly& z, PuCount n);
/// Closed form with the denominator multiplied by N.
double overhead_efficiency(const ScalabilityModel& model, const OverheadPoly& z, PuCount n);

/// General-form model with z attached.
GeneralModel with_overhead(const ScalabilityModel& model, const OverheadPoly& z);

struct FlattKennedyReport {
  bool smooth = false;           // 1: twice differentiable
  bool zero_at_one = false;      // 2: z(1) = 0
  bool increasing = false;       // 3: z'(N) > 0
  bool convexity = false;        // 4: N z'' + 2 z' > 0
  bool reaches_one = false;      // 5: some N_1 >= 1 with z(N_1) = 1
  std::optional<double> n1;
  /// Set when conditions were only probed numerically.
  bool approximate = false;
  std::vector<std::string> notes;

  bool all() const { return smooth && zero_at_one && increasing && convexity && reaches_one; }
};

/// Analytic check for the polynomial family, confirmed on the grid 1..n_max.
FlattKennedyReport check_flatt_kennedy(const OverheadPoly& z, PuCount n_max);
/// Finite-difference check for an arbitrary mapping; always approximate.
FlattKennedyReport check_flatt_kennedy(const std::function<double(double)>& z, PuCount n_max);

enum class Objective { Time, Speedup, Efficiency };

struct OptimalN {
  PuCount n_star = 1;
  double value = 0.0;
};

/// Exhaustive scan over N in 1..n_max of the general-form time (min),
/// speedup (max) or efficiency (max). Ties go to the smaller N.
OptimalN optimal_n(const ScalabilityModel& model, const OverheadPoly& z, Objective objective,
                   PuCount n_max);

}  // namespace scalab
