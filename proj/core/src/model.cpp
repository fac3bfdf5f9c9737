#include "scalab/model.hpp"

#include <cmath>
#include <string>

#include "scalab/errors.hpp"

namespace scalab {

namespace {

void require_n(PuCount n) {
  if (n < 1) {
    throw ValidationError("number of processing units must be >= 1, got " + std::to_string(n));
  }
}

void require_evaluable(const ScalabilityModel& model, PuCount n) {
  require_n(n);
  if (!model.evaluable_at(n)) {
    throw ValidationError(
        "N = 1 requires c_h = 1: the power-law model is defined for N > 1 unless h(1) = 1");
  }
}

}  // namespace

PowerLaw::PowerLaw(double coeff, double exponent) : coeff_(coeff), exponent_(exponent) {
  if (!std::isfinite(coeff) || !(coeff > 0.0)) {
    throw ValidationError("power-law coefficient must be finite and > 0");
  }
  if (!std::isfinite(exponent) || exponent < 0.0) {
    throw ValidationError("power-law exponent must be finite and >= 0");
  }
}

double PowerLaw::operator()(double n) const {
  if (exponent_ == 0.0) return coeff_;
  return coeff_ * std::pow(n, exponent_);
}

WorkloadSplit::WorkloadSplit(double s) : s_(s) {
  if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
    throw ValidationError("sequential fraction s must lie in [0, 1]");
  }
}

ScalabilityModel::ScalabilityModel(WorkloadSplit split, PowerLaw f, PowerLaw g, PowerLaw h)
    : split_(split), f_(f), g_(g), h_(h) {}

bool ScalabilityModel::evaluable_at(PuCount n) const {
  if (n > 1) return true;
  return n == 1 && h_.coeff() == 1.0;
}

double serial_time(const ScalabilityModel& model, PuCount n) {
  require_n(n);
  const auto x = static_cast<double>(n);
  return model.s() * model.f()(x) + model.p() * model.g()(x);
}

double parallel_time(const ScalabilityModel& model, PuCount n) {
  require_evaluable(model, n);
  const auto x = static_cast<double>(n);
  const double scaled_parallel = model.p() * model.g().coeff() / model.h().coeff();
  return model.s() * model.f()(x) +
         scaled_parallel * std::pow(x, model.g().exponent() - model.h().exponent());
}

double speedup(const ScalabilityModel& model, PuCount n) {
  return serial_time(model, n) / parallel_time(model, n);
}

double efficiency(const ScalabilityModel& model, PuCount n) {
  require_evaluable(model, n);
  const auto x = static_cast<double>(n);
  const auto& f = model.f();
  const auto& g = model.g();
  const auto& h = model.h();
  const double numer = model.s() * f(x) + model.p() * g(x);
  const double denom = model.s() * f.coeff() * std::pow(x, f.exponent() + 1.0) +
                       (model.p() * g.coeff() / h.coeff()) *
                           std::pow(x, g.exponent() - h.exponent() + 1.0);
  return numer / denom;
}

double general_speedup(const GeneralModel& model, PuCount n) {
  require_n(n);
  const double s = model.split.s();
  const double p = model.split.p();
  const double numer = s * model.f(1) + p * model.g(1);
  const double hn = model.h(n);
  if (!(hn > 0.0)) throw ComputationError("h(N) must be > 0");
  const double denom = s * model.f(n) + p * model.g(n) / hn + (model.z ? model.z(n) : 0.0);
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw ComputationError("general speedup denominator is not positive at N = " +
                           std::to_string(n));
  }
  return numer / denom;
}

double general_efficiency(const GeneralModel& model, PuCount n) {
  return general_speedup(model, n) / static_cast<double>(n);
}

GeneralModel to_general(const ScalabilityModel& model) {
  return GeneralModel{
      model.split(),
      [f = model.f()](PuCount n) { return f(static_cast<double>(n)); },
      [g = model.g()](PuCount n) { return g(static_cast<double>(n)); },
      [h = model.h()](PuCount n) { return h(static_cast<double>(n)); },
      [](PuCount) { return 0.0; },
  };
}

}  // namespace scalab
