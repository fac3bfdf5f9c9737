#include "scalab/lu_oracle.hpp"

#include <algorithm>
#include <string>

#include <fmt/format.h>

#include "scalab/errors.hpp"

namespace scalab::lu {

std::string WorkloadCount::to_string() const {
  if (value_ == 0) return "0";
  std::string s;
  for (u128 v = value_; v > 0; v /= 10) s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  std::reverse(s.begin(), s.end());
  return s;
}

std::ostream& operator<<(std::ostream& os, WorkloadCount c) { return os << c.to_string(); }

namespace {

void require_z(std::int64_t z) {
  if (z < 1) throw ValidationError("z must be >= 1");
  if (z > kMaxZ) throw ValidationError(fmt::format("z = {} exceeds the exact-count bound {}", z, kMaxZ));
}

std::int64_t checked_z(std::int64_t z1, std::int64_t n) {
  if (z1 < 2) throw ValidationError("z1 must be >= 2");
  if (n < 1) throw ValidationError("N must be >= 1");
  if (n > kMaxZ / z1) throw ValidationError("z1 * N exceeds the exact-count bound");
  return z1 * n;
}

u128 tri(u128 k) { return k * (k + 1) / 2; }

}  // namespace

WorkloadCount g_hat(std::int64_t z) {
  require_z(z);
  const u128 v = static_cast<u128>(z);
  return WorkloadCount((v * v * v - v) / 3);
}

WorkloadCount g_hat_bruteforce(std::int64_t z) {
  require_z(z);
  if (z > 1'000'000) throw ValidationError("brute-force count limited to z <= 10^6");
  u128 sum = 0;
  for (std::int64_t i = 1; i <= z - 1; ++i) {
    sum += static_cast<u128>(z - i) * static_cast<u128>(z - i + 1);
  }
  return WorkloadCount(sum);
}

WorkloadCount g_reduced(std::int64_t z, std::int64_t n) {
  require_z(z);
  if (n < 1) throw ValidationError("N must be >= 1");
  // k = z - i in [1, z-1]; ceil(k/N) = q on ((q-1)N, qN]
  const u128 kmax = static_cast<u128>(z - 1);
  const u128 bn = static_cast<u128>(n);
  u128 sum = 0;
  for (u128 q = 1; (q - 1) * bn < kmax; ++q) {
    const u128 lo = (q - 1) * bn + 1;
    const u128 hi = std::min(q * bn, kmax);
    // sum of (k + 1) over [lo, hi]
    sum += q * (tri(hi) - tri(lo - 1) + (hi - lo + 1));
  }
  return WorkloadCount(sum);
}

HHat h_hat(std::int64_t n, std::int64_t z1) {
  const auto z = checked_z(z1, n);
  HHat h{g_hat(z), g_reduced(z, n)};
  // z1 >= 2 keeps the denominator positive
  h.value = n == 1 ? 1.0 : h.numerator.to_double() / h.denominator.to_double();
  return h;
}

double g_bar(std::int64_t n, std::int64_t z1) {
  const auto z = checked_z(z1, n);
  if (n == 1) return 1.0;
  return g_hat(z).to_double() / g_hat(z1).to_double();
}

double lu_c_g(std::int64_t z1) {
  if (z1 < 2) throw ValidationError("z1 must be >= 2");
  const double c = static_cast<double>(z1);
  return c * c * c / (c * c * c - c);
}

double lu_speedup_theoretical(double s, std::int64_t z1, std::int64_t n) {
  if (!(s >= 0.0 && s < 1.0)) throw ValidationError("s must lie in [0, 1)");
  if (n < 1) throw ValidationError("N must be >= 1");
  const double p = 1.0 - s;
  const double cg = lu_c_g(z1);
  const double x = static_cast<double>(n);
  return (s + p * cg * x * x * x) / (s + p * cg * x * x);
}

double lu_efficiency_theoretical(double s, std::int64_t z1, std::int64_t n) {
  return lu_speedup_theoretical(s, z1, n) / static_cast<double>(n);
}

ScalabilityModel lu_model(double s, std::int64_t z1) {
  return {WorkloadSplit(s), PowerLaw::unit(), PowerLaw(lu_c_g(z1), 3.0), PowerLaw::linear()};
}

std::vector<TableRow> emit_table(std::int64_t z1, int i_max) {
  if (i_max < 1 || i_max > 62) throw ValidationError("i_max must lie in 1..62");
  std::vector<TableRow> rows;
  for (int i = 1; i <= i_max; ++i) {
    const std::int64_t n = std::int64_t{1} << i;
    const auto h = h_hat(n, z1);
    rows.push_back({i, n, z1 * n, h.numerator, h.denominator, h.value,
                    h.value / static_cast<double>(n)});
  }
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "i,N,z,g_hat,g_reduced,h_hat,h_hat_over_N\n";
  for (const auto& r : rows) {
    os << fmt::format("{},{},{},{},{},{:.6g},{:.6g}\n", r.i, r.n, r.z, r.g.to_string(),
                      r.g_reduced.to_string(), r.h, r.h_over_n);
  }
}

}  // namespace scalab::lu
