// Independent reference computations used by the tests.
#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace scalab::oracle {

using u128 = unsigned __int128;

/// Literal sum over i = 1..z-1 of ceil((z-i)/N) * (z-i+1).
u128 naive_g_reduced(std::int64_t z, std::int64_t n);

/// Speedup from the raw definition T(1)/T(N) in long double, with T(1) the
/// serial time of the N-scaled workload.
long double scaled_speedup(double s, double cf, double af, double cg, double ag, double ch,
                           double ah, std::int64_t n);

/// Root of fn(x) = target on [lo, hi] with fn increasing.
double bisect(const std::function<double(double)>& fn, double target, double lo, double hi);

/// Parses a printed number, dropping thousands separators.
double parse_printed(const std::string& cell);

struct PrintedMatch {
  bool exact;      // value rounds to the printed string
  bool within;     // |value - printed| <= one unit of the last printed digit
  double unit;
};

/// Compares against a cell printed with `sig` significant figures (%g style).
PrintedMatch match_significant(const std::string& cell, double value, int sig = 6);
/// Compares against a cell printed with `dec` decimals.
PrintedMatch match_decimals(const std::string& cell, double value, int dec = 6);

}  // namespace scalab::oracle
