// scalab command-line front end.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "scalab/asymptotics.hpp"
#include "scalab/bench.hpp"
#include "scalab/errors.hpp"
#include "scalab/estimate.hpp"
#include "scalab/laws.hpp"
#include "scalab/lu_oracle.hpp"
#include "scalab/model.hpp"
#include "scalab/model_io.hpp"
#include "scalab/overhead.hpp"

using nlohmann::json;
namespace sc = scalab;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kComputation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sc::ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
std::string json_arg(const std::string& arg) {
  const auto b = arg.find_first_not_of(" \t\n");
  if (b != std::string::npos && arg[b] == '{') return arg;
  return read_file(arg);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json limit_to_json(const sc::LimitValue& v) {
  json j{{"kind", sc::to_string(v.kind)}};
  if (v.is_finite()) {
    j["value"] = v.value;
    j["bound"] = sc::to_string(v.bound);
    j["valid_from_n"] = v.valid_from;
  } else if (v.is_unbounded()) {
    j["growth_exponent"] = v.growth_exponent;
  } else {
    j["note"] = v.note;
  }
  return j;
}

const char* kModelHelp =
    "model JSON: {\"s\": real in [0,1], \"f\": {\"c\": >0, \"alpha\": >=0}, \"g\": {...}, \"h\": {...}}";
const char* kOverheadHelp =
    "overhead JSON (inline or file): {\"c_z\": >0, \"alpha_z\": >=0, \"shifted\": bool}";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalability analysis: speedup/efficiency models, classification, estimation, benchmarks.\n"
               "Times are in milliseconds. JSON outputs carry \"schema\": 1."};
  app.require_subcommand(1);

  // eval
  std::string model_path, overhead_arg;
  sc::PuCount n = 2;
  auto* eval = app.add_subcommand("eval", "evaluate T(1), T(N), S(N), E(N) for a model");
  eval->add_option("--model", model_path, kModelHelp)->required();
  eval->add_option("--n", n, "number of processing units")->required();
  eval->add_option("--overhead", overhead_arg, kOverheadHelp);

  // classify / limits
  bool verify = false;
  sc::PuCount n_probe = 1'000'000;
  double tol = 1e-12;
  auto* classify = app.add_subcommand("classify", "classify a model into speedup/efficiency/scalability cases");
  classify->add_option("--model", model_path, kModelHelp)->required();
  classify->add_flag("--verify", verify, "numerically cross-check the limits");
  classify->add_option("--nprobe", n_probe, "probe N for --verify (>= 1000)");
  classify->add_option("--tol", tol, "exponent equality tolerance");
  auto* limits = app.add_subcommand("limits", "print the asymptotic speedup and efficiency limits");
  limits->add_option("--model", model_path, kModelHelp)->required();

  // laws
  auto* laws = app.add_subcommand("laws", "classical speedup laws as model presets");
  laws->require_subcommand(1);
  auto* laws_list = laws->add_subcommand("list", "list presets with their expected cases");
  std::string law_name;
  double law_s = 0.5;
  auto* laws_show = laws->add_subcommand("show", "emit a preset as model JSON");
  laws_show->add_option("name", law_name, "preset name")->required();
  laws_show->add_option("--s", law_s, "sequential fraction in (0,1)")->required();

  // fit
  std::string csv_path, split_path;
  std::optional<double> s_value, s_floor;
  std::string weighting = "uniform";
  auto* fit = app.add_subcommand("fit", "infer h(N) from timings (CSV header N,t_total in ms)");
  fit->add_option("--csv", csv_path, "timing CSV, header 'N,t_total', milliseconds; must contain N=1")->required();
  fit->add_option("--split", split_path, "CSV with one row 't_seq,t_par' measured at N=1 (ms)");
  fit->add_option("--model", model_path, "model JSON supplying s, f, g (h is ignored); default f=g=1");
  fit->add_option("--s", s_value, "sequential fraction, overrides --split and the model's s");
  fit->add_option("--s-floor", s_floor, "lower bound applied to an estimated s");
  fit->add_option("--weighting", weighting, "uniform | log (w = 1 + ln N)")
      ->check(CLI::IsMember({"uniform", "log"}));

  // oracle
  std::int64_t z1 = 100;
  int imax = 20;
  auto* oracle = app.add_subcommand("oracle", "exact LU workload counts as CSV");
  oracle->add_option("--z1", z1, "rows per PU (>= 2)")->required();
  oracle->add_option("--imax", imax, "rows i = 1..imax with N = 2^i")->required();

  // bench
  std::string config_path, out_path, svg_path;
  auto* bench = app.add_subcommand("bench", "run the matmul or LU benchmark (wall clock in ms)");
  bench->require_subcommand(1);
  auto add_bench = [&](const char* name, const char* desc) {
    auto* c = bench->add_subcommand(name, desc);
    c->add_option("--config", config_path, "BenchConfig JSON (defaults when omitted)");
    c->add_option("--out", out_path, "CSV output; '#' lines hold the environment")->required();
    c->add_option("--svg", svg_path, "SVG chart path (default: beside the CSV)");
    return c;
  };
  auto* bench_mm = add_bench("matmul", "fixed-workload matrix multiplication");
  auto* bench_lu = add_bench("lu", "variable-workload LU decomposition, z = z1*N");

  // optimize
  std::string objective = "time";
  sc::PuCount n_max = 100000;
  auto* optimize = app.add_subcommand("optimize", "optimal N under polynomial overhead (exhaustive scan)");
  optimize->add_option("--model", model_path, kModelHelp)->required();
  optimize->add_option("--overhead", overhead_arg, kOverheadHelp)->required();
  optimize->add_option("--objective", objective, "time | speedup | efficiency")
      ->check(CLI::IsMember({"time", "speedup", "efficiency"}));
  optimize->add_option("--nmax", n_max, "largest N scanned (>= 2)");

  // check-overhead
  double c_z = 1.0, alpha_z = 1.0;
  bool shifted = false;
  sc::PuCount fk_nmax = 1000;
  auto* check = app.add_subcommand("check-overhead", "Flatt-Kennedy requirements for z(N) = c_z N^alpha_z [- c_z]");
  check->add_option("--cz", c_z, "c_z > 0")->required();
  check->add_option("--alphaz", alpha_z, "alpha_z >= 0")->required();
  check->add_flag("--shifted", shifted, "subtract c_z so that z(1) = 0");
  check->add_option("--nmax", fk_nmax, "grid 1..nmax for the numeric check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*eval) {
      const auto m = sc::parse_model_json(read_file(model_path));
      json out{{"schema", 1}, {"N", n}, {"serial_time", sc::serial_time(m, n)},
               {"parallel_time", sc::parallel_time(m, n)}};
      if (!overhead_arg.empty()) {
        const auto z = sc::parse_overhead_json(json_arg(overhead_arg));
        const double zn = z(static_cast<double>(n));
        out["overhead"] = zn;
        out["parallel_time"] = sc::parallel_time(m, n) + zn;
        out["speedup"] = sc::overhead_speedup(m, z, n);
        out["efficiency"] = sc::overhead_efficiency(m, z, n);
      } else {
        out["speedup"] = sc::speedup(m, n);
        out["efficiency"] = sc::efficiency(m, n);
      }
      print(out);
    } else if (*classify) {
      const auto m = sc::parse_model_json(read_file(model_path));
      const auto c = sc::classify(m, sc::ClassifierOptions{tol});
      auto out = json::parse(sc::to_json(c));
      if (verify) {
        if (n_probe < 1000) throw sc::ValidationError("--nprobe must be >= 1000");
        json v;
        auto one = [&](const sc::LimitValue& lim, sc::Quantity q) {
          const auto r = sc::verify_growth(m, lim, n_probe, 1e-2, q);
          return json{{"passed", r.passed}, {"deviation", r.deviation}, {"direction_ok", r.direction_ok},
                      {"detail", r.detail}};
        };
        v["speedup"] = one(c.speedup_limit, sc::Quantity::Speedup);
        v["efficiency"] = one(c.efficiency_limit, sc::Quantity::Efficiency);
        v["n_probe"] = n_probe;
        v["tolerance"] = 1e-2;
        out["verification"] = v;
      }
      print(out);
    } else if (*limits) {
      const auto m = sc::parse_model_json(read_file(model_path));
      const auto c = sc::classify(m);
      print({{"schema", 1},
             {"speedup_limit", limit_to_json(c.speedup_limit)},
             {"efficiency_limit", limit_to_json(c.efficiency_limit)},
             {"type", c.type_with_values()}});
    } else if (*laws_list) {
      json arr = json::array();
      for (const auto& p : sc::laws::presets()) {
        arr.push_back({{"name", p.name}, {"description", p.description},
                       {"expected_case", sc::to_string(p.expected_case)}});
      }
      print({{"schema", 1}, {"laws", arr}});
    } else if (*laws_show) {
      std::cout << sc::model_to_json(sc::laws::preset(law_name).model_for(law_s)) << '\n';
    } else if (*fit) {
      std::ifstream in(csv_path);
      if (!in) throw sc::ValidationError("cannot open " + csv_path);
      auto run = sc::parse_timing_csv(in);
      sc::PowerLaw f = sc::PowerLaw::unit(), g = sc::PowerLaw::unit();
      std::optional<double> s = s_value;
      json provenance;
      if (!model_path.empty()) {
        const auto base = sc::parse_model_json(read_file(model_path));
        f = base.f();
        g = base.g();
        if (!s) {
          s = base.s();
          provenance["s_source"] = "model";
        }
      }
      if (!split_path.empty()) {
        std::ifstream sin(split_path);
        if (!sin) throw sc::ValidationError("cannot open " + split_path);
        run.split_sample = sc::parse_split_csv(sin);
        if (!s_value) {
          const auto est = sc::estimate_s(run.split_sample->first, run.split_sample->second, s_floor);
          s = est.s;
          provenance["s_source"] = "split";
          provenance["s_raw"] = est.raw_s;
          provenance["s_floored"] = est.floored;
          if (s_floor) provenance["s_floor"] = *s_floor;
          provenance["warnings"] = est.warnings;
        }
      }
      if (s_value) provenance["s_source"] = "flag";
      if (!s) throw sc::ValidationError("fit needs s: pass --s, --split or --model");
      const auto inf = sc::infer_h(run, sc::WorkloadSplit(*s), f, g,
                                   weighting == "log" ? sc::Weighting::Log : sc::Weighting::Uniform);
      if (!inf.fit) {
        throw sc::ComputationError("not enough usable samples to fit h");
      }
      json samples = json::array();
      for (const auto& hs : inf.samples) {
        json e{{"N", hs.n}, {"ok", hs.ok}};
        if (hs.ok) e["h_hat"] = hs.h_hat; else e["problem"] = hs.problem;
        samples.push_back(e);
      }
      json block{{"target", "h"},
                 {"method", "least squares on (ln N, ln h_hat), N >= 2"},
                 {"weighting", weighting},
                 {"rms_log_residual", inf.fit->rms_log_residual},
                 {"clamped", inf.fit->clamped},
                 {"raw_exponent", inf.fit->raw_exponent},
                 {"samples", samples},
                 {"warnings", inf.warnings},
                 {"provenance", provenance}};
      const sc::ScalabilityModel out(sc::WorkloadSplit(*s), f, g, inf.fit->law);
      std::cout << sc::model_to_json(out, block.dump()) << '\n';
    } else if (*oracle) {
      sc::lu::write_table_csv(std::cout, sc::lu::emit_table(z1, imax));
    } else if (*bench) {
      sc::bench::BenchConfig cfg;
      if (!config_path.empty()) cfg = sc::bench::parse_config(read_file(config_path));
      cfg.experiment = *bench_mm ? sc::bench::Experiment::MatmulFixed : sc::bench::Experiment::LuVariable;
      (void)bench_lu;
      const auto res = sc::bench::run(cfg);
      for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
      {
        std::ofstream os(out_path);
        if (!os) throw sc::ValidationError("cannot write " + out_path);
        sc::bench::write_csv(os, res);
      }
      if (svg_path.empty()) {
        const auto dot = out_path.rfind('.');
        svg_path = (dot == std::string::npos ? out_path : out_path.substr(0, dot)) + ".svg";
      }
      std::ofstream svg(svg_path);
      if (!svg) throw sc::ValidationError("cannot write " + svg_path);
      sc::bench::write_svg(svg, res);
      sc::bench::write_csv(std::cout, res);
    } else if (*optimize) {
      const auto m = sc::parse_model_json(read_file(model_path));
      const auto z = sc::parse_overhead_json(json_arg(overhead_arg));
      const auto obj = objective == "time"      ? sc::Objective::Time
                       : objective == "speedup" ? sc::Objective::Speedup
                                                : sc::Objective::Efficiency;
      const auto r = sc::optimal_n(m, z, obj, n_max);
      print({{"schema", 1}, {"objective", objective}, {"n_max", n_max}, {"n_star", r.n_star}, {"value", r.value}});
    } else if (*check) {
      const sc::OverheadPoly z(c_z, alpha_z, shifted);
      const auto r = sc::check_flatt_kennedy(z, fk_nmax);
      json out{{"schema", 1},
               {"conditions",
                {{"smooth", r.smooth}, {"zero_at_one", r.zero_at_one}, {"increasing", r.increasing},
                 {"convexity", r.convexity}, {"reaches_one", r.reaches_one}}},
               {"all_pass", r.all()},
               {"approximate", r.approximate},
               {"notes", r.notes}};
      out["N_1"] = r.n1 ? json(*r.n1) : json(nullptr);
      print(out);
    }
  } catch (const sc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const sc::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kComputation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}
