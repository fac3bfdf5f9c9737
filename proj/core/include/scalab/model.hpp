#pragma once

#include <cstdint>
#include <functional>

namespace scalab {

/// Number of processing units.
using PuCount = std::int64_t;

/// N -> coeff * N^exponent with coeff > 0 and exponent >= 0.
class PowerLaw {
 public:
  PowerLaw(double coeff, double exponent);

  /// Constant 1 (coeff 1, exponent 0).
  static PowerLaw unit() { return {1.0, 0.0}; }
  /// Identity N -> N.
  static PowerLaw linear() { return {1.0, 1.0}; }

  double coeff() const { return coeff_; }
  double exponent() const { return exponent_; }

  double operator()(double n) const;

  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;

 private:
  double coeff_;
  double exponent_;
};

/// Sequential / parallelizable split normalized to s + p = 1. Only s is
/// stored; p is always derived.
class WorkloadSplit {
 public:
  explicit WorkloadSplit(double s);

  double s() const { return s_; }
  double p() const { return 1.0 - s_; }

  friend bool operator==(const WorkloadSplit&, const WorkloadSplit&) = default;

 private:
  double s_;
};

/// Power-law scalability model: split plus workload scaling f (sequential),
/// g (parallelizable) and the parallel time-reduction h.
class ScalabilityModel {
 public:
  ScalabilityModel(WorkloadSplit split, PowerLaw f, PowerLaw g, PowerLaw h);

  const WorkloadSplit& split() const { return split_; }
  double s() const { return split_.s(); }
  double p() const { return split_.p(); }
  const PowerLaw& f() const { return f_; }
  const PowerLaw& g() const { return g_; }
  const PowerLaw& h() const { return h_; }

  /// N = 1 is only meaningful when h(1) = c_h = 1.
  bool evaluable_at(PuCount n) const;

  friend bool operator==(const ScalabilityModel&, const ScalabilityModel&) = default;

 private:
  WorkloadSplit split_;
  PowerLaw f_;
  PowerLaw g_;
  PowerLaw h_;
};

/// Single-PU execution time of the N-scaled workload: s*f(N) + p*g(N).
double serial_time(const ScalabilityModel& model, PuCount n);

/// s*f(N) + p*g(N)/h(N). Throws ValidationError for N < 1, and for N = 1
/// unless c_h = 1.
double parallel_time(const ScalabilityModel& model, PuCount n);

double speedup(const ScalabilityModel& model, PuCount n);

/// Evaluated through its own closed form (denominator multiplied by N), not
/// as speedup / N.
double efficiency(const ScalabilityModel& model, PuCount n);

/// Arbitrary workload functions plus an additive overhead z.
struct GeneralModel {
  WorkloadSplit split;
  std::function<double(PuCount)> f;
  std::function<double(PuCount)> g;
  std::function<double(PuCount)> h;
  std::function<double(PuCount)> z;
};

/// (s*f(1) + p*g(1)) / (s*f(N) + p*g(N)/h(N) + z(N)).
double general_speedup(const GeneralModel& model, PuCount n);
double general_efficiency(const GeneralModel& model, PuCount n);

/// Wraps a power-law model as a general model with z = 0.
GeneralModel to_general(const ScalabilityModel& model);

}  // namespace scalab
