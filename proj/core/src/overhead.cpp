#include "scalab/overhead.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "scalab/errors.hpp"

namespace scalab {

OverheadPoly::OverheadPoly(double c_z, double alpha_z, bool shifted)
    : c_z_(c_z), alpha_z_(alpha_z), shifted_(shifted) {
  if (!std::isfinite(c_z) || !(c_z > 0.0)) throw ValidationError("c_z must be finite and > 0");
  if (!std::isfinite(alpha_z) || alpha_z < 0.0) {
    throw ValidationError("alpha_z must be finite and >= 0");
  }
}

double OverheadPoly::operator()(double n) const {
  const double v = c_z_ * std::pow(n, alpha_z_);
  return shifted_ ? v - c_z_ : v;
}

double OverheadPoly::d1(double n) const {
  if (alpha_z_ == 0.0) return 0.0;
  return c_z_ * alpha_z_ * std::pow(n, alpha_z_ - 1.0);
}

double OverheadPoly::d2(double n) const {
  if (alpha_z_ == 0.0 || alpha_z_ == 1.0) return 0.0;
  return c_z_ * alpha_z_ * (alpha_z_ - 1.0) * std::pow(n, alpha_z_ - 2.0);
}

namespace {

void require_n1(const ScalabilityModel& model, const OverheadPoly& z, PuCount n) {
  if (n == 1 && z(1.0) != 0.0) {
    throw ValidationError("N = 1 with overhead requires z(1) = 0");
  }
  if (!model.evaluable_at(n)) {
    throw ValidationError(
        n < 1 ? "number of processing units must be >= 1"
              : "N = 1 requires c_h = 1: the power-law model is defined for N > 1 unless h(1) = 1");
  }
}

}  // namespace

double overhead_speedup(const ScalabilityModel& model, const OverheadPoly& z, PuCount n) {
  require_n1(model, z, n);
  const double zn = z(static_cast<double>(n));
  if (zn == 0.0) return speedup(model, n);
  return serial_time(model, n) / (parallel_time(model, n) + zn);
}

double overhead_efficiency(const ScalabilityModel& model, const OverheadPoly& z, PuCount n) {
  require_n1(model, z, n);
  const auto x = static_cast<double>(n);
  if (z(x) == 0.0) return efficiency(model, n);
  const double denom = x * parallel_time(model, n) + z.c_z() * std::pow(x, z.alpha_z() + 1.0) -
                       (z.shifted() ? z.c_z() * x : 0.0);
  return serial_time(model, n) / denom;
}

GeneralModel with_overhead(const ScalabilityModel& model, const OverheadPoly& z) {
  auto g = to_general(model);
  g.z = [z](PuCount n) { return z(static_cast<double>(n)); };
  return g;
}

FlattKennedyReport check_flatt_kennedy(const OverheadPoly& z, PuCount n_max) {
  if (n_max < 2) throw ValidationError("N_max must be >= 2");
  FlattKennedyReport r;
  r.smooth = true;

  r.zero_at_one = z(1.0) == 0.0;
  if (!r.zero_at_one) {
    r.notes.push_back(fmt::format("z(1) = {:g}, not 0 (unshifted polynomial)", z(1.0)));
  }

  const double a = z.alpha_z();
  // z'(N) = c a N^(a-1); N z'' + 2 z' = c a (a+1) N^(a-1). Both > 0 iff a > 0.
  bool inc = a > 0.0;
  bool conv = a > 0.0;
  for (PuCount n = 1; n <= n_max && (inc || conv); ++n) {
    const auto x = static_cast<double>(n);
    if (!(z.d1(x) > 0.0)) inc = false;
    if (!(x * z.d2(x) + 2.0 * z.d1(x) > 0.0)) conv = false;
  }
  r.increasing = inc;
  r.convexity = conv;
  if (a == 0.0) r.notes.emplace_back("alpha_z = 0: z is constant, z' = 0");

  if (a > 0.0) {
    const double base = z.shifted() ? (z.c_z() + 1.0) / z.c_z() : 1.0 / z.c_z();
    if (base >= 1.0) {
      r.n1 = std::pow(base, 1.0 / a);
      r.reaches_one = true;
    } else {
      r.notes.emplace_back("z(N) > 1 for every N >= 1 (c_z > 1, unshifted)");
    }
  } else if (!z.shifted() && z.c_z() == 1.0) {
    r.n1 = 1.0;
    r.reaches_one = true;
  } else {
    r.notes.emplace_back("z never equals 1");
  }
  return r;
}

FlattKennedyReport check_flatt_kennedy(const std::function<double(double)>& z, PuCount n_max) {
  if (n_max < 2) throw ValidationError("N_max must be >= 2");
  FlattKennedyReport r;
  r.approximate = true;
  r.notes.emplace_back("checked by finite differences on the integer grid");

  const double h = 1e-4;
  bool smooth = true;
  bool inc = true;
  bool conv = true;
  for (PuCount n = 1; n <= n_max; ++n) {
    const auto x = static_cast<double>(n);
    const double zm = z(x - (n == 1 ? 0.0 : h));
    const double z0 = z(x);
    const double zp = z(x + h);
    const double zpp = z(x + 2 * h);
    if (!std::isfinite(zm) || !std::isfinite(z0) || !std::isfinite(zp) || !std::isfinite(zpp)) {
      smooth = false;
      break;
    }
    // one-sided at N = 1
    const double d1 = (zp - z0) / h;
    const double d2 = n == 1 ? (zpp - 2 * zp + z0) / (h * h) : (zp - 2 * z0 + zm) / (h * h);
    if (n > 1) {
      const double left = (z0 - zm) / h;
      if (std::abs(left - d1) > 1e-2 * std::max(1.0, std::abs(d1))) smooth = false;
    }
    if (!(d1 > 0.0)) inc = false;
    if (!(x * d2 + 2.0 * d1 > 0.0)) conv = false;
  }
  r.smooth = smooth;
  r.increasing = inc;
  r.convexity = conv;
  r.zero_at_one = std::abs(z(1.0)) <= 1e-12;

  double lo = 1.0;
  double hi = static_cast<double>(n_max);
  if (z(lo) <= 1.0 && z(hi) >= 1.0) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (z(mid) < 1.0 ? lo : hi) = mid;
    }
    r.n1 = 0.5 * (lo + hi);
    r.reaches_one = true;
  } else {
    r.notes.emplace_back("no N_1 in [1, N_max] with z(N_1) = 1");
  }
  return r;
}

OptimalN optimal_n(const ScalabilityModel& model, const OverheadPoly& z, Objective objective,
                   PuCount n_max) {
  if (n_max < 2) throw ValidationError("N_max must be >= 2");
  const auto gm = with_overhead(model, z);
  const double s = model.s();
  const double p = model.p();

  auto time_at = [&](PuCount n) {
    const double t = s * gm.f(n) + p * gm.g(n) / gm.h(n) + gm.z(n);
    if (!(t > 0.0)) throw ComputationError(fmt::format("execution time not positive at N = {}", n));
    return t;
  };

  const PuCount first = (model.h().coeff() == 1.0 && z(1.0) == 0.0) ? 1 : 2;
  OptimalN best{0, 0.0};
  for (PuCount n = first; n <= n_max; ++n) {
    double v;
    bool better;
    switch (objective) {
      case Objective::Time:
        v = time_at(n);
        better = best.n_star == 0 || v < best.value;
        break;
      case Objective::Speedup:
        v = general_speedup(gm, n);
        better = best.n_star == 0 || v > best.value;
        break;
      case Objective::Efficiency:
      default:
        v = general_efficiency(gm, n);
        better = best.n_star == 0 || v > best.value;
        break;
    }
    if (better) best = {n, v};
  }
  return best;
}

}  // namespace scalab
