#include "scalab/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "scalab/errors.hpp"

namespace scalab {

SplitEstimate estimate_s(double t_seq, double t_par, std::optional<double> s_floor) {
  if (!std::isfinite(t_seq) || !std::isfinite(t_par) || t_seq < 0.0 || t_par < 0.0) {
    throw ValidationError("t_seq and t_par must be finite and >= 0");
  }
  if (t_seq == 0.0 && t_par == 0.0) throw ValidationError("t_seq and t_par are both zero");

  SplitEstimate e;
  e.raw_s = t_seq / (t_seq + t_par);
  e.s = e.raw_s;
  if (t_seq == 0.0) {
    e.warnings.emplace_back("t_seq = 0: s = 0 is degenerate (timer resolution?)");
  }
  if (t_par == 0.0) e.warnings.emplace_back("t_par = 0: s = 1, nothing to parallelize");
  if (s_floor) {
    if (!(*s_floor >= 0.0 && *s_floor < 1.0)) throw ValidationError("s floor must lie in [0, 1)");
    if (e.s < *s_floor) {
      e.s = *s_floor;
      e.floored = true;
      e.warnings.push_back(fmt::format("s raised from {:g} to floor {:g}", e.raw_s, *s_floor));
    }
  }
  return e;
}

PowerFit fit_power_law(const std::vector<std::pair<double, double>>& points, Weighting weighting) {
  std::set<double> xs;
  for (auto [x, y] : points) {
    if (!std::isfinite(x) || x < 1.0) throw ValidationError("fit points need x >= 1");
    if (!std::isfinite(y) || !(y > 0.0)) throw ValidationError("fit points need y > 0");
    xs.insert(x);
  }
  if (xs.size() < 2) throw ValidationError("fit needs at least 2 distinct x values");

  double sw = 0, sx = 0, sy = 0;
  for (auto [x, y] : points) {
    const double w = weighting == Weighting::Log ? 1.0 + std::log(x) : 1.0;
    sw += w;
    sx += w * std::log(x);
    sy += w * std::log(y);
  }
  const double mx = sx / sw;
  const double my = sy / sw;
  double sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    const double w = weighting == Weighting::Log ? 1.0 + std::log(x) : 1.0;
    const double dx = std::log(x) - mx;
    sxx += w * dx * dx;
    sxy += w * dx * (std::log(y) - my);
  }

  PowerFit fit;
  fit.points = points.size();
  fit.raw_exponent = sxy / sxx;
  double alpha = fit.raw_exponent;
  double ln_c = my - alpha * mx;
  if (alpha < 0.0) {
    fit.clamped = true;
    alpha = 0.0;
    ln_c = my;
  }
  // exact noiseless inputs can land a few ulps below zero
  if (std::abs(alpha) < 1e-14) alpha = 0.0;
  fit.law = PowerLaw(std::exp(ln_c), alpha);

  double ss = 0;
  for (auto [x, y] : points) {
    const double r = std::log(y) - ln_c - alpha * std::log(x);
    ss += r * r;
  }
  fit.rms_log_residual = std::sqrt(ss / static_cast<double>(points.size()));
  return fit;
}

void TimingRun::validate() const {
  if (samples.empty()) throw ValidationError("timing run has no samples");
  PuCount prev = 0;
  for (const auto& s : samples) {
    if (s.n < 1) throw ValidationError("timing samples need N >= 1");
    if (s.n <= prev) throw ValidationError("timing samples must have strictly increasing N");
    if (!std::isfinite(s.t_total) || !(s.t_total > 0.0)) {
      throw ValidationError("timing samples need t_total > 0");
    }
    prev = s.n;
  }
  if (split_sample) {
    auto [a, b] = *split_sample;
    if (a < 0.0 || b < 0.0 || !(a + b > 0.0)) throw ValidationError("invalid split sample");
  }
}

HInference infer_h(const TimingRun& run, const WorkloadSplit& split, const PowerLaw& f,
                   const PowerLaw& g, Weighting weighting) {
  run.validate();
  if (run.samples.front().n != 1) throw ValidationError("infer_h needs an N = 1 sample");

  const double s = split.s();
  const double p = split.p();
  if (p == 0.0) throw ValidationError("infer_h needs p > 0");
  const double scale = (s * f(1.0) + p * g(1.0)) / run.samples.front().t_total;

  HInference out;
  std::vector<std::pair<double, double>> pts;
  for (const auto& smp : run.samples) {
    const auto x = static_cast<double>(smp.n);
    const double rest = smp.t_total * scale - s * f(x);
    HSample hs;
    hs.n = smp.n;
    if (rest > 0.0) {
      hs.h_hat = p * g(x) / rest;
      hs.ok = true;
      if (smp.n >= 2) pts.emplace_back(x, hs.h_hat);
    } else {
      hs.problem = fmt::format("normalized T({}) <= s*f(N): s too large for this sample", smp.n);
      out.warnings.push_back(hs.problem);
    }
    out.samples.push_back(std::move(hs));
  }
  std::set<double> distinct;
  for (auto& pt : pts) distinct.insert(pt.first);
  if (distinct.size() >= 2) {
    out.fit = fit_power_law(pts, weighting);
  } else {
    out.warnings.emplace_back("fewer than two usable samples with N >= 2; no fit");
  }
  return out;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(trim(f));
  return out;
}

double to_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(fmt::format("line {}: not a number: '{}'", line_no, s));
  }
}

bool skip(const std::string& line) { return line.empty() || line[0] == '#'; }

}  // namespace

TimingRun parse_timing_csv(std::istream& in) {
  TimingRun run;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (skip(line)) continue;
    auto fields = split_fields(line);
    if (!header) {
      if (fields.size() != 2 || fields[0] != "N" || fields[1] != "t_total") {
        throw ValidationError("timing CSV must start with header 'N,t_total'");
      }
      header = true;
      continue;
    }
    if (fields.size() != 2) throw ValidationError(fmt::format("line {}: expected 2 fields", line_no));
    const double n = to_double(fields[0], line_no);
    if (n != std::floor(n)) throw ValidationError(fmt::format("line {}: N must be an integer", line_no));
    run.samples.push_back({static_cast<PuCount>(n), to_double(fields[1], line_no)});
  }
  if (!header) throw ValidationError("timing CSV is empty");
  run.validate();
  return run;
}

std::pair<double, double> parse_split_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (skip(line)) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ValidationError(fmt::format("line {}: expected 2 fields", line_no));
    if (fields[0] == "t_seq" && fields[1] == "t_par") continue;
    return {to_double(fields[0], line_no), to_double(fields[1], line_no)};
  }
  throw ValidationError("split CSV has no data row");
}

}  // namespace scalab
