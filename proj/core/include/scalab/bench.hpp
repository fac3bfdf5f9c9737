#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scalab::bench {

enum class Experiment { MatmulFixed, LuVariable };

std::string_view to_string(Experiment e);

struct MatmulSize {
  std::size_t rows_a = 1024;
  std::size_t inner_dim = 512;
  std::size_t cols_b = 1024;
};

struct LuSize {
  /// Rows per PU; matrices are (z1*N) x (z1*N).
  std::size_t z1 = 64;
  /// Matrices decomposed per measurement.
  std::size_t m = 8;
  double s_floor = 0.01;
};

struct BenchConfig {
  Experiment experiment = Experiment::MatmulFixed;
  std::vector<int> thread_counts{1, 2, 4};
  MatmulSize matmul;
  LuSize lu;
  std::uint64_t seed = 42;
  /// Defaults to [-1000, 1000] for matmul and [1, 1000] for LU.
  std::optional<std::pair<std::int64_t, std::int64_t>> value_range;
  int repetitions = 3;
  /// Sequential fraction for the theoretical overlay; measured when absent.
  std::optional<double> s_model;

  std::pair<std::int64_t, std::int64_t> range() const;
  /// Throws ValidationError.
  void validate() const;
};

BenchConfig parse_config(std::string_view json);
std::string to_json(const BenchConfig& c);

struct Range {
  std::size_t begin;
  std::size_t end;
};

/// Contiguous chunks; the first total % parts chunks are one longer.
std::vector<Range> partition(std::size_t total, int parts);

/// Row-major rows x cols with integers in [lo, hi], deterministic in seed.
std::vector<std::int64_t> random_int_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                            std::int64_t lo, std::int64_t hi);

/// C = A B with rows of A split over `workers` threads.
std::vector<std::int64_t> matmul_parallel(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b, std::size_t rows_a,
                                          std::size_t inner, std::size_t cols_b, int workers);

struct LuFactors {
  std::size_t z = 0;
  std::vector<double> l;
  std::vector<double> u;
};

/// No pivoting.
LuFactors lu_sequential(const std::vector<double>& a, std::size_t z);
/// The j-loop is split over `workers` threads with a barrier per i; every
/// matrix in the batch is processed inside the same i step.
std::vector<LuFactors> lu_parallel(const std::vector<std::vector<double>>& batch, std::size_t z,
                                   int workers);
std::vector<double> lu_multiply_back(const LuFactors& f);
/// `count` z x z matrices with integer entries in [lo, hi].
std::vector<std::vector<double>> random_lu_batch(std::size_t count, std::size_t z,
                                                 std::uint64_t seed, std::int64_t lo,
                                                 std::int64_t hi);

struct BenchRow {
  std::int64_t n = 1;
  double t_total = 0.0;     // ms
  double s_comp = 1.0;
  double e_comp = 1.0;
  double s_theor = 1.0;
  double e_theor = 1.0;
  double t_baseline = 0.0;  // ms, the 1-PU time of the same workload
};

struct BenchResult {
  Experiment experiment = Experiment::MatmulFixed;
  std::vector<BenchRow> rows;
  /// Ordered key/value pairs written as '#' comment lines.
  std::vector<std::pair<std::string, std::string>> environment;
  std::vector<std::string> warnings;
  double t_seq = 0.0;  // ms at N = 1
  double t_par = 0.0;
  double s_measured = 0.0;
  double s_used = 0.0;
};

/// S_comp = t_baseline / t_total, E_comp = S_comp / N.
void derive_columns(std::vector<BenchRow>& rows);

BenchResult run_matmul(const BenchConfig& config);
BenchResult run_lu(const BenchConfig& config);
BenchResult run(const BenchConfig& config);

/// Header N,t_total,S_comp,E_comp,S_theor,E_theor,t_baseline; six decimals.
void write_csv(std::ostream& os, const BenchResult& r);
/// Inverse of write_csv (environment and rows only).
BenchResult parse_csv(std::istream& in);
/// Speedup vs N, computational and theoretical series.
void write_svg(std::ostream& os, const BenchResult& r);

}  // namespace scalab::bench
