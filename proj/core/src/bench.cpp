#include "scalab/bench.hpp"

#include <algorithm>
#include <barrier>
#include <chrono>
#include <cmath>
#include <ctime>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "scalab/errors.hpp"
#include "scalab/estimate.hpp"
#include "scalab/laws.hpp"
#include "scalab/lu_oracle.hpp"
#include "scalab/model.hpp"

namespace scalab::bench {

using nlohmann::json;

std::string_view to_string(Experiment e) {
  return e == Experiment::MatmulFixed ? "matmul_fixed" : "lu_variable";
}

std::pair<std::int64_t, std::int64_t> BenchConfig::range() const {
  if (value_range) return *value_range;
  return experiment == Experiment::MatmulFixed ? std::pair<std::int64_t, std::int64_t>{-1000, 1000}
                                               : std::pair<std::int64_t, std::int64_t>{1, 1000};
}

void BenchConfig::validate() const {
  if (thread_counts.empty()) throw ValidationError("thread_counts must not be empty");
  std::set<int> seen;
  for (int n : thread_counts) {
    if (n < 1) throw ValidationError("thread counts must be >= 1");
    if (!seen.insert(n).second) throw ValidationError("thread counts must be distinct");
  }
  if (!seen.contains(1)) throw ValidationError("thread_counts must contain 1 (baseline)");
  if (repetitions < 1) throw ValidationError("repetitions must be >= 1");
  auto [lo, hi] = range();
  if (lo > hi) throw ValidationError("value_range low exceeds high");
  if (s_model && !(*s_model >= 0.0 && *s_model < 1.0)) {
    throw ValidationError("s_model must lie in [0, 1)");
  }
  if (experiment == Experiment::MatmulFixed) {
    if (matmul.rows_a == 0 || matmul.inner_dim == 0 || matmul.cols_b == 0) {
      throw ValidationError("matrix dimensions must be positive");
    }
    const int max_n = *seen.rbegin();
    if (matmul.rows_a % static_cast<std::size_t>(max_n) != 0) {
      throw ValidationError(fmt::format("rows_a = {} is not a multiple of the largest thread count {}",
                                        matmul.rows_a, max_n));
    }
  } else {
    if (lu.z1 < 2) throw ValidationError("lu.z1 must be >= 2");
    if (lu.m < 1) throw ValidationError("lu.m must be >= 1");
    if (!(lu.s_floor >= 0.0 && lu.s_floor < 1.0)) throw ValidationError("lu.s_floor must lie in [0, 1)");
    if (lo == 0 && hi == 0) throw ValidationError("LU needs nonzero values");
  }
}

namespace {

void reject_unknown(const json& j, std::initializer_list<std::string_view> keys, std::string_view where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
      throw ValidationError(fmt::format("unknown field '{}' in {}", it.key(), where));
    }
  }
}

}  // namespace

BenchConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("bench config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("bench config must be a JSON object");
  reject_unknown(j, {"schema", "experiment", "thread_counts", "matmul", "lu", "seed", "value_range",
                     "repetitions", "s_model"},
                 "bench config");
  BenchConfig c;
  try {
    if (j.contains("experiment")) {
      const auto e = j.at("experiment").get<std::string>();
      if (e == "matmul_fixed") {
        c.experiment = Experiment::MatmulFixed;
      } else if (e == "lu_variable") {
        c.experiment = Experiment::LuVariable;
      } else {
        throw ValidationError("experiment must be matmul_fixed or lu_variable");
      }
    }
    if (j.contains("thread_counts")) c.thread_counts = j.at("thread_counts").get<std::vector<int>>();
    if (j.contains("matmul")) {
      const auto& m = j.at("matmul");
      reject_unknown(m, {"rows_a", "inner_dim", "cols_b"}, "matmul");
      c.matmul.rows_a = m.value("rows_a", c.matmul.rows_a);
      c.matmul.inner_dim = m.value("inner_dim", c.matmul.inner_dim);
      c.matmul.cols_b = m.value("cols_b", c.matmul.cols_b);
    }
    if (j.contains("lu")) {
      const auto& l = j.at("lu");
      reject_unknown(l, {"z1", "m", "s_floor"}, "lu");
      c.lu.z1 = l.value("z1", c.lu.z1);
      c.lu.m = l.value("m", c.lu.m);
      c.lu.s_floor = l.value("s_floor", c.lu.s_floor);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("value_range")) {
      const auto v = j.at("value_range").get<std::vector<std::int64_t>>();
      if (v.size() != 2) throw ValidationError("value_range must be [low, high]");
      c.value_range = std::pair{v[0], v[1]};
    }
    if (j.contains("repetitions")) c.repetitions = j.at("repetitions").get<int>();
    if (j.contains("s_model")) c.s_model = j.at("s_model").get<double>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bench config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string to_json(const BenchConfig& c) {
  auto [lo, hi] = c.range();
  json j{{"schema", 1},
         {"experiment", to_string(c.experiment)},
         {"thread_counts", c.thread_counts},
         {"matmul", {{"rows_a", c.matmul.rows_a}, {"inner_dim", c.matmul.inner_dim}, {"cols_b", c.matmul.cols_b}}},
         {"lu", {{"z1", c.lu.z1}, {"m", c.lu.m}, {"s_floor", c.lu.s_floor}}},
         {"seed", c.seed},
         {"value_range", {lo, hi}},
         {"repetitions", c.repetitions}};
  if (c.s_model) j["s_model"] = *c.s_model;
  return j.dump(2);
}

std::vector<Range> partition(std::size_t total, int parts) {
  if (parts < 1) throw ValidationError("partition needs at least one part");
  const auto k = static_cast<std::size_t>(parts);
  const std::size_t base = total / k;
  const std::size_t extra = total % k;
  std::vector<Range> out;
  out.reserve(k);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t len = base + (i < extra ? 1 : 0);
    out.push_back({pos, pos + len});
    pos += len;
  }
  return out;
}

namespace {

// Explicit mapping: std::uniform_int_distribution is not portable bit-for-bit.
class IntSource {
 public:
  IntSource(std::uint64_t seed, std::int64_t lo, std::int64_t hi)
      : eng_(seed), lo_(lo), span_(static_cast<std::uint64_t>(hi - lo) + 1) {}

  std::int64_t next() {
    const auto x = static_cast<unsigned __int128>(eng_());
    if (span_ == 0) return lo_ + static_cast<std::int64_t>(x);  // full 64-bit range
    return lo_ + static_cast<std::int64_t>((x * span_) >> 64);
  }

 private:
  std::mt19937_64 eng_;
  std::int64_t lo_;
  std::uint64_t span_;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class F>
void run_workers(int workers, F&& body) {
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back([&body, w] { body(w); });
}

inline void row_step(double* l, double* u, std::size_t z, std::size_t i, std::size_t j) {
  const double lji = u[j * z + i] / u[i * z + i];
  l[j * z + i] = lji;
  const double* ui = u + i * z;
  double* uj = u + j * z;
  for (std::size_t c = i + 1; c < z; ++c) uj[c] -= lji * ui[c];
  // columns < i were cleared in earlier steps
  uj[i] = 0.0;
}

LuFactors init_factors(const std::vector<double>& a, std::size_t z) {
  if (a.size() != z * z) throw ValidationError("matrix size does not match z");
  LuFactors f{z, std::vector<double>(z * z, 0.0), a};
  for (std::size_t k = 0; k < z; ++k) f.l[k * z + k] = 1.0;
  return f;
}

void lu_in_place(std::vector<LuFactors>& mats, std::size_t z, int workers) {
  if (z < 2) return;
  std::barrier sync(workers);
  run_workers(workers, [&](int w) {
    for (std::size_t i = 0; i + 1 < z; ++i) {
      const auto r = partition(z - i - 1, workers)[static_cast<std::size_t>(w)];
      for (auto& f : mats) {
        for (std::size_t j = i + 1 + r.begin; j < i + 1 + r.end; ++j) {
          row_step(f.l.data(), f.u.data(), z, i, j);
        }
      }
      sync.arrive_and_wait();
    }
  });
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void base_environment(BenchResult& r, const BenchConfig& c) {
  const unsigned hw = std::thread::hardware_concurrency();
  auto [lo, hi] = c.range();
  r.environment = {
      {"experiment", std::string(to_string(c.experiment))},
      {"hardware_concurrency", std::to_string(hw)},
      {"timestamp", timestamp_utc()},
      {"repetitions", fmt::format("{} (minimum reported)", c.repetitions)},
      {"seed", std::to_string(c.seed)},
      {"value_range", fmt::format("[{}, {}]", lo, hi)},
      {"units", "milliseconds"},
  };
  for (int n : c.thread_counts) {
    if (hw != 0 && static_cast<unsigned>(n) > hw) {
      r.warnings.push_back(fmt::format("N = {} exceeds hardware concurrency {}", n, hw));
    }
  }
}

std::vector<int> sorted_counts(const BenchConfig& c) {
  auto v = c.thread_counts;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<std::int64_t> random_int_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                            std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ValidationError("low exceeds high");
  IntSource src(seed, lo, hi);
  std::vector<std::int64_t> m(rows * cols);
  for (auto& v : m) v = src.next();
  return m;
}

std::vector<std::int64_t> matmul_parallel(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b, std::size_t rows_a,
                                          std::size_t inner, std::size_t cols_b, int workers) {
  if (a.size() != rows_a * inner || b.size() != inner * cols_b) {
    throw ValidationError("matrix sizes do not match");
  }
  std::vector<std::int64_t> c(rows_a * cols_b, 0);
  const auto chunks = partition(rows_a, workers);
  run_workers(workers, [&](int w) {
    const auto r = chunks[static_cast<std::size_t>(w)];
    for (std::size_t i = r.begin; i < r.end; ++i) {
      for (std::size_t j = 0; j < cols_b; ++j) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < inner; ++k) acc += a[i * inner + k] * b[k * cols_b + j];
        c[i * cols_b + j] = acc;
      }
    }
  });
  return c;
}

LuFactors lu_sequential(const std::vector<double>& a, std::size_t z) {
  auto f = init_factors(a, z);
  for (std::size_t i = 0; i + 1 < z; ++i) {
    for (std::size_t j = i + 1; j < z; ++j) row_step(f.l.data(), f.u.data(), z, i, j);
  }
  return f;
}

std::vector<LuFactors> lu_parallel(const std::vector<std::vector<double>>& batch, std::size_t z,
                                   int workers) {
  if (workers < 1) throw ValidationError("workers must be >= 1");
  std::vector<LuFactors> mats;
  mats.reserve(batch.size());
  for (const auto& a : batch) mats.push_back(init_factors(a, z));
  lu_in_place(mats, z, workers);
  return mats;
}

std::vector<double> lu_multiply_back(const LuFactors& f) {
  const std::size_t z = f.z;
  std::vector<double> a(z * z, 0.0);
  for (std::size_t i = 0; i < z; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      const double lik = f.l[i * z + k];
      for (std::size_t j = k; j < z; ++j) a[i * z + j] += lik * f.u[k * z + j];
    }
  }
  return a;
}

std::vector<std::vector<double>> random_lu_batch(std::size_t count, std::size_t z,
                                                 std::uint64_t seed, std::int64_t lo,
                                                 std::int64_t hi) {
  IntSource src(seed, lo, hi);
  std::vector<std::vector<double>> out(count, std::vector<double>(z * z));
  for (auto& m : out) {
    for (auto& v : m) v = static_cast<double>(src.next());
  }
  return out;
}

void derive_columns(std::vector<BenchRow>& rows) {
  for (auto& r : rows) {
    if (!(r.t_total > 0.0) || !(r.t_baseline > 0.0)) {
      throw ComputationError(fmt::format("nonpositive time at N = {}", r.n));
    }
    r.s_comp = r.t_baseline / r.t_total;
    r.e_comp = r.s_comp / static_cast<double>(r.n);
  }
}

BenchResult run_matmul(const BenchConfig& config) {
  auto cfg = config;
  cfg.experiment = Experiment::MatmulFixed;
  cfg.validate();
  const auto [lo, hi] = cfg.range();
  const auto& d = cfg.matmul;

  BenchResult res;
  res.experiment = cfg.experiment;
  base_environment(res, cfg);
  res.environment.emplace_back("matmul", fmt::format("{}x{} * {}x{}", d.rows_a, d.inner_dim, d.inner_dim, d.cols_b));
  res.environment.emplace_back("sequential_region", "matrix allocation and initialization");

  for (int n : sorted_counts(cfg)) {
    double best = 0.0, best_seq = 0.0, best_par = 0.0;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
      const auto t0 = Clock::now();
      const auto a = random_int_matrix(d.rows_a, d.inner_dim, cfg.seed, lo, hi);
      const auto b = random_int_matrix(d.inner_dim, d.cols_b, cfg.seed + 1, lo, hi);
      const double t_seq = ms_since(t0);
      const auto t1 = Clock::now();
      const auto c = matmul_parallel(a, b, d.rows_a, d.inner_dim, d.cols_b, n);
      const double t_par = ms_since(t1);
      if (c.empty()) throw ComputationError("empty product");
      if (rep == 0 || t_seq + t_par < best) {
        best = t_seq + t_par;
        best_seq = t_seq;
        best_par = t_par;
      }
    }
    if (n == 1) {
      res.t_seq = best_seq;
      res.t_par = best_par;
    }
    res.rows.push_back({n, best});
  }

  const double baseline = res.rows.front().t_total;
  for (auto& r : res.rows) r.t_baseline = baseline;
  derive_columns(res.rows);

  res.s_measured = estimate_s(res.t_seq, res.t_par).s;
  res.s_used = cfg.s_model.value_or(res.s_measured);
  const ScalabilityModel model(WorkloadSplit(res.s_used), PowerLaw::unit(), PowerLaw::unit(),
                               PowerLaw::linear());
  for (auto& r : res.rows) {
    r.s_theor = speedup(model, r.n);
    r.e_theor = efficiency(model, r.n);
  }
  res.environment.emplace_back("t_seq_t_par", fmt::format("{:.6f},{:.6f}", res.t_seq, res.t_par));
  res.environment.emplace_back("s", fmt::format("measured {:.6f}, used {:.6f}", res.s_measured, res.s_used));
  return res;
}

BenchResult run_lu(const BenchConfig& config) {
  auto cfg = config;
  cfg.experiment = Experiment::LuVariable;
  cfg.validate();
  const auto [lo, hi] = cfg.range();
  const auto& d = cfg.lu;

  BenchResult res;
  res.experiment = cfg.experiment;
  base_environment(res, cfg);
  res.environment.emplace_back("lu", fmt::format("z1={}, m={}, z=z1*N, no pivoting, static j-loop ranges",
                                                 d.z1, d.m));
  res.environment.emplace_back("sequential_region", "matrix allocation and initialization");

  auto timed = [&](std::size_t z, int workers, double& t_seq, double& t_par) {
    const auto t0 = Clock::now();
    const auto batch = random_lu_batch(d.m, z, cfg.seed, lo, hi);
    std::vector<LuFactors> mats;
    mats.reserve(batch.size());
    for (const auto& a : batch) mats.push_back(init_factors(a, z));
    t_seq = ms_since(t0);
    const auto t1 = Clock::now();
    lu_in_place(mats, z, workers);
    t_par = ms_since(t1);
  };

  for (int n : sorted_counts(cfg)) {
    const std::size_t z = d.z1 * static_cast<std::size_t>(n);
    double best_n = 0.0, best_1 = 0.0, seq1 = 0.0, par1 = 0.0;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
      double ts = 0, tp = 0;
      timed(z, 1, ts, tp);
      if (rep == 0 || ts + tp < best_1) {
        best_1 = ts + tp;
        seq1 = ts;
        par1 = tp;
      }
      if (n > 1) {
        timed(z, n, ts, tp);
        if (rep == 0 || ts + tp < best_n) best_n = ts + tp;
      }
    }
    if (n == 1) {
      best_n = best_1;
      res.t_seq = seq1;
      res.t_par = par1;
    }
    BenchRow row;
    row.n = n;
    row.t_total = best_n;
    row.t_baseline = best_1;
    res.rows.push_back(row);
  }
  derive_columns(res.rows);

  const auto est = estimate_s(res.t_seq, res.t_par, d.s_floor);
  res.s_measured = est.raw_s;
  res.s_used = cfg.s_model.value_or(est.s);
  for (const auto& w : est.warnings) res.warnings.push_back(w);
  for (auto& r : res.rows) {
    r.s_theor = lu::lu_speedup_theoretical(res.s_used, static_cast<std::int64_t>(d.z1), r.n);
    r.e_theor = r.s_theor / static_cast<double>(r.n);
  }
  res.environment.emplace_back("t_seq_t_par", fmt::format("{:.6f},{:.6f}", res.t_seq, res.t_par));
  res.environment.emplace_back(
      "s", fmt::format("measured {:.6f}, used {:.6f} (floor {:g})", res.s_measured, res.s_used, d.s_floor));
  return res;
}

BenchResult run(const BenchConfig& config) {
  return config.experiment == Experiment::MatmulFixed ? run_matmul(config) : run_lu(config);
}

namespace {
constexpr std::string_view kHeader = "N,t_total,S_comp,E_comp,S_theor,E_theor,t_baseline";
}

void write_csv(std::ostream& os, const BenchResult& r) {
  if (r.rows.empty()) throw ValidationError("empty benchmark result");
  for (const auto& [k, v] : r.environment) os << "# " << k << ": " << v << '\n';
  os << kHeader << '\n';
  for (const auto& row : r.rows) {
    os << fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", row.n, row.t_total, row.s_comp,
                      row.e_comp, row.s_theor, row.e_theor, row.t_baseline);
  }
}

BenchResult parse_csv(std::istream& in) {
  BenchResult r;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header) throw ValidationError("comment line after header");
      const auto body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      const auto colon = body.find(": ");
      if (colon == std::string::npos) {
        r.environment.emplace_back(body, "");
      } else {
        r.environment.emplace_back(body.substr(0, colon), body.substr(colon + 2));
      }
      continue;
    }
    if (!header) {
      if (line != kHeader) throw ValidationError("unexpected benchmark CSV header");
      header = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 7) throw ValidationError("benchmark CSV row needs 7 fields");
    try {
      BenchRow row{std::stoll(f[0]), std::stod(f[1]), std::stod(f[2]), std::stod(f[3]),
                   std::stod(f[4]),  std::stod(f[5]), std::stod(f[6])};
      r.rows.push_back(row);
    } catch (const std::exception&) {
      throw ValidationError("benchmark CSV row is not numeric: " + line);
    }
  }
  if (!header || r.rows.empty()) throw ValidationError("benchmark CSV has no rows");
  for (const auto& [k, v] : r.environment) {
    if (k == "experiment") r.experiment = v == "lu_variable" ? Experiment::LuVariable : Experiment::MatmulFixed;
  }
  return r;
}

void write_svg(std::ostream& os, const BenchResult& r) {
  if (r.rows.empty()) throw ValidationError("empty benchmark result");
  const double w = 640, h = 400, ml = 60, mr = 20, mt = 30, mb = 50;
  double n_max = 1, s_max = 1;
  for (const auto& row : r.rows) {
    n_max = std::max(n_max, static_cast<double>(row.n));
    s_max = std::max({s_max, row.s_comp, row.s_theor});
  }
  const double lx_max = std::max(1.0, std::log2(n_max));
  auto px = [&](double n) { return ml + (w - ml - mr) * std::log2(n) / lx_max; };
  auto py = [&](double s) { return h - mb - (h - mt - mb) * s / (s_max * 1.05); };

  os << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="12">)",
                    w, h)
     << '\n';
  os << fmt::format(R"(<text x="{}" y="18">speedup vs N ({})</text>)", ml, to_string(r.experiment)) << '\n';
  os << fmt::format(R"(<line x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="black"/>)", ml, h - mb, w - mr) << '\n';
  os << fmt::format(R"(<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black"/>)", ml, mt, h - mb) << '\n';
  for (const auto& row : r.rows) {
    const double x = px(static_cast<double>(row.n));
    os << fmt::format(R"(<text x="{:.1f}" y="{}" text-anchor="middle">{}</text>)", x, h - mb + 18, row.n) << '\n';
  }
  for (int k = 0; k <= 4; ++k) {
    const double s = s_max * k / 4.0;
    os << fmt::format(R"(<text x="{}" y="{:.1f}" text-anchor="end">{:.2f}</text>)", ml - 6, py(s) + 4, s) << '\n';
  }
  auto series = [&](auto value, std::string_view color, std::string_view label, int slot) {
    std::string pts;
    for (const auto& row : r.rows) {
      pts += fmt::format("{:.1f},{:.1f} ", px(static_cast<double>(row.n)), py(value(row)));
    }
    os << fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>)", color, pts) << '\n';
    os << fmt::format(R"(<text x="{}" y="{}" fill="{}">{}</text>)", ml + 10, mt + 14 * slot, color, label) << '\n';
  };
  series([](const BenchRow& b) { return b.s_comp; }, "#1f77b4", "computational", 1);
  series([](const BenchRow& b) { return b.s_theor; }, "#d62728", "theoretical", 2);
  os << fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">N (log2 scale)</text>)", (w + ml) / 2, h - 10) << '\n';
  os << "</svg>\n";
}

}  // namespace scalab::bench
