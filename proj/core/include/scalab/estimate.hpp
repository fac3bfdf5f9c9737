#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalab/model.hpp"

namespace scalab {

struct SplitEstimate {
  double s = 0.0;
  /// Value before the floor was applied.
  double raw_s = 0.0;
  bool floored = false;
  std::vector<std::string> warnings;
};

/// s = t_seq / (t_seq + t_par). t_seq = 0 gives s = 0 with a warning; an
/// optional floor replaces smaller estimates and is recorded.
SplitEstimate estimate_s(double t_seq, double t_par, std::optional<double> s_floor = {});

enum class Weighting {
  Uniform,
  /// w = 1 + ln x, favouring large-N samples.
  Log,
};

struct PowerFit {
  PowerLaw law{1.0, 0.0};
  double rms_log_residual = 0.0;
  /// Unconstrained exponent was negative and got clamped to 0.
  bool clamped = false;
  double raw_exponent = 0.0;
  std::size_t points = 0;
};

/// Weighted least squares on (ln x, ln y).
PowerFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                       Weighting weighting = Weighting::Uniform);

struct TimingSample {
  PuCount n = 1;
  double t_total;
};

struct TimingRun {
  std::vector<TimingSample> samples;
  /// (t_seq, t_par) measured at N = 1.
  std::optional<std::pair<double, double>> split_sample;

  /// Strictly increasing N >= 1, positive times, at least one sample.
  void validate() const;
};

struct HSample {
  PuCount n = 1;
  double h_hat = 0.0;
  bool ok = false;
  std::string problem;
};

struct HInference {
  std::vector<HSample> samples;
  /// Fit over the usable samples with N >= 2; empty when fewer than two.
  std::optional<PowerFit> fit;
  std::vector<std::string> warnings;
};

/// Inverts the model's parallel time for h, with s, f and g known. T(1) sets
/// the time unit: T(N) is rescaled so that T(1) = s*f(1) + p*g(1).
HInference infer_h(const TimingRun& run, const WorkloadSplit& split, const PowerLaw& f,
                   const PowerLaw& g, Weighting weighting = Weighting::Uniform);

/// Header "N,t_total" (milliseconds).
TimingRun parse_timing_csv(std::istream& in);
/// Single row "t_seq,t_par", with or without that header.
std::pair<double, double> parse_split_csv(std::istream& in);

}  // namespace scalab
