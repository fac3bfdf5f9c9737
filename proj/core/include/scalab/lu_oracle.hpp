#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "scalab/model.hpp"

namespace scalab::lu {

using u128 = unsigned __int128;

/// z^3 stays below 2^127 up to this size.
inline constexpr std::int64_t kMaxZ = 5'000'000'000'000;

/// Exact nonnegative calculation count.
class WorkloadCount {
 public:
  constexpr WorkloadCount() = default;
  constexpr explicit WorkloadCount(u128 v) : value_(v) {}

  constexpr u128 value() const { return value_; }
  double to_double() const { return static_cast<double>(value_); }
  std::string to_string() const;

  friend constexpr bool operator==(WorkloadCount, WorkloadCount) = default;
  friend constexpr auto operator<=>(WorkloadCount a, WorkloadCount b) { return a.value_ <=> b.value_; }

 private:
  u128 value_ = 0;
};

std::ostream& operator<<(std::ostream& os, WorkloadCount c);

/// (z^3 - z) / 3.
WorkloadCount g_hat(std::int64_t z);
/// Literal sum over i of (z-i)(z-i+1); z <= 10^6.
WorkloadCount g_hat_bruteforce(std::int64_t z);
/// Sum over i of ceil((z-i)/N) * (z-i+1), by blocks of equal ceiling.
WorkloadCount g_reduced(std::int64_t z, std::int64_t n);

struct HHat {
  WorkloadCount numerator;    // g_hat(z1*N)
  WorkloadCount denominator;  // g_reduced(z1*N, N)
  double value = 0.0;
};

HHat h_hat(std::int64_t n, std::int64_t z1);

/// g_hat(z1*N) / g_hat(z1) via (z1^3 N^3 - z1 N) / (z1^3 - z1).
double g_bar(std::int64_t n, std::int64_t z1);

/// z1^3 / (z1^3 - z1).
double lu_c_g(std::int64_t z1);

/// (s + p c_g N^3) / (s + p c_g N^2).
double lu_speedup_theoretical(double s, std::int64_t z1, std::int64_t n);
double lu_efficiency_theoretical(double s, std::int64_t z1, std::int64_t n);

/// Power-law model with f = 1, g = c_g N^3, h = N.
ScalabilityModel lu_model(double s, std::int64_t z1);

struct TableRow {
  int i;
  std::int64_t n;
  std::int64_t z;
  WorkloadCount g;
  WorkloadCount g_reduced;
  double h;
  double h_over_n;
};

/// Rows i = 1..i_max with N = 2^i, z = z1*N.
std::vector<TableRow> emit_table(std::int64_t z1, int i_max);

/// CSV "i,N,z,g_hat,g_reduced,h_hat,h_hat_over_N"; counts exact, ratios to
/// six significant figures.
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace scalab::lu
