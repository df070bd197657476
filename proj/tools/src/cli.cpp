// Copyright 2026 The rankindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankindep_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "rankindep/rankindep.hpp"

namespace rankindep::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kScalingNote =
    "Scaled statistics share one limit null law: n*D_n for hoeffding, n*R_n for "
    "refined and n*tau*/36 (= n*T_n/3) for taustar. Asymptotic p-values are "
    "right tails of a Monte Carlo sample of that law.";

struct Selected {
  std::string name;
  Statistic stat;
};

const std::map<std::string, Statistic>& statistic_names() {
  static const std::map<std::string, Statistic> names = {
      {"hoeffding", Statistic::hoeffding_d},
      {"refined", Statistic::refined_r},
      {"taustar", Statistic::tau_star},
  };
  return names;
}

std::vector<Selected> select(const std::string& which) {
  if (which != "all") return {{which, statistic_names().at(which)}};
  return {{"hoeffding", Statistic::hoeffding_d},
          {"refined", Statistic::refined_r},
          {"taustar", Statistic::tau_star}};
}

// 17 significant digits, for generated data.
std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shortest text that reads back as the same double, for reports.
std::string format_shortest(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::ties_present:
      return kExitTies;
    case Errc::sample_too_small:
      return kExitTooSmall;
    case Errc::length_mismatch:
    case Errc::non_finite_value:
    case Errc::zero_size:
    case Errc::invalid_argument:
    case Errc::io_error:
    case Errc::non_finite_stat:
      return kExitBadInput;
    default:
      return kExitFailure;
  }
}

struct TestConfig {
  std::string input = "-";
  std::string test = "all";
  std::string pvalue = "none";
  std::size_t resamples = 999;
  std::string ties = "error";
  std::uint64_t seed = 0;
  std::string null_cache;
  std::string format = "json";
};

struct GenerateConfig {
  std::string name;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool mirror = false;
  unsigned depth = 53;
};

struct BenchmarkConfig {
  std::vector<std::size_t> sizes = {100'000, 1'000'000, 10'000'000};
  std::string test = "all";
  std::uint64_t seed = 0;
  std::string format = "tsv";
};

PValueMethod parse_method(const std::string& s) {
  if (s == "asymptotic") return PValueMethod::asymptotic;
  if (s == "permutation") return PValueMethod::permutation;
  return PValueMethod::none;
}

Columns read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return parse_columns(stdin_stream);
  std::ifstream file(path);
  if (!file) throw Error(Errc::io_error, "cannot open input '" + path + "'");
  return parse_columns(file);
}

int run_test_command(const TestConfig& cfg, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  Columns columns;
  try {
    columns = read_input(cfg.input, in);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  const TiePolicy policy =
      cfg.ties == "random" ? TiePolicy::random(cfg.seed) : TiePolicy::error();
  Permutation p = Permutation::identity(1);
  try {
    p = rank_permutation(columns.xs, columns.ys, policy);
  } catch (const Error& e) {
    if (e.code() == Errc::non_finite_value && e.index()) {
      err << "error: line " << columns.lines[*e.index()] << ": non-finite value\n";
    } else if (e.code() == Errc::ties_present && e.index() && e.other_index()) {
      err << "error: TIES_PRESENT: lines " << columns.lines[*e.index()] << " and "
          << columns.lines[*e.other_index()]
          << " hold equal values (use --ties random to break ties)\n";
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return exit_code(e.code());
  }

  const std::vector<Selected> selected = select(cfg.test);
  for (const Selected& s : selected) {
    if (p.size() < minimum_sample_size(s.stat)) {
      err << "error: SAMPLE_TOO_SMALL: " << s.name << " needs n >= "
          << minimum_sample_size(s.stat) << ", got n = " << p.size() << '\n';
      return kExitTooSmall;
    }
  }

  PValueOptions options;
  options.method = parse_method(cfg.pvalue);
  options.resamples = cfg.resamples;
  options.seed = cfg.seed;
  if (options.method == PValueMethod::asymptotic && !cfg.null_cache.empty()) {
    limit_law_table(options.null_spec, cfg.null_cache);
  }

  std::vector<TestResult> results;
  for (const Selected& s : selected) results.push_back(run_test(s.stat, p, options));

  if (cfg.format == "tsv") {
    out << "statistic\tvalue\tscaled\tn\tp_value\tp_method\tseed\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const TestResult& r = results[i];
      out << selected[i].name << '\t' << format_shortest(r.value()) << '\t'
          << format_shortest(r.scaled()) << '\t' << r.n() << '\t'
          << (r.p_value() ? format_shortest(*r.p_value()) : "NA") << '\t'
          << to_string(r.p_method()) << '\t' << cfg.seed << '\n';
    }
  } else {
    Json doc = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const TestResult& r = results[i];
      Json row;
      row["statistic"] = selected[i].name;
      row["value"] = r.value();
      row["scaled"] = r.scaled();
      row["n"] = r.n();
      row["p_value"] = r.p_value() ? Json(*r.p_value()) : Json(nullptr);
      row["p_method"] = std::string(to_string(r.p_method()));
      row["seed"] = cfg.seed;
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int run_generate_command(const GenerateConfig& cfg, std::ostream& out) {
  const GeneratorOptions options{cfg.mirror};
  const SampleSet s = cfg.name == "binary"
                          ? sample_binary_expansion(cfg.n, cfg.seed, cfg.depth, options)
                          : generate(cfg.name, cfg.n, cfg.seed, options);
  std::string line;
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    line = format_double(s.xs[i]);
    line += '\t';
    line += format_double(s.ys[i]);
    line += '\n';
    out << line;
  }
  return kExitOk;
}

double time_statistic(Statistic stat, const Permutation& p) {
  const auto start = std::chrono::steady_clock::now();
  volatile double sink = compute_statistic(stat, p);
  static_cast<void>(sink);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

int run_benchmark_command(const BenchmarkConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.sizes.empty() || !std::is_sorted(cfg.sizes.begin(), cfg.sizes.end())) {
    err << "error: --sizes must be a non-empty ascending list\n";
    return kExitBadInput;
  }
  const std::vector<Selected> selected = select(cfg.test);
  for (const Selected& s : selected) {
    if (cfg.sizes.front() < minimum_sample_size(s.stat)) {
      err << "error: SAMPLE_TOO_SMALL: " << s.name << " needs n >= "
          << minimum_sample_size(s.stat) << '\n';
      return kExitTooSmall;
    }
  }

  std::mt19937_64 rng(cfg.seed);
  // Warm-up: one untimed run of every statistic at the smallest size.
  {
    const Permutation warm = Permutation::random(cfg.sizes.front(), rng);
    for (const Selected& s : selected) time_statistic(s.stat, warm);
  }

  std::vector<std::vector<double>> seconds(selected.size());
  for (const std::size_t n : cfg.sizes) {
    const Permutation p = Permutation::random(n, rng);
    for (std::size_t k = 0; k < selected.size(); ++k) {
      seconds[k].push_back(time_statistic(selected[k].stat, p));
    }
  }

  std::vector<std::optional<double>> slopes;
  for (const auto& t : seconds) {
    slopes.push_back(cfg.sizes.front() < cfg.sizes.back()
                         ? std::optional<double>(loglog_slope(cfg.sizes, t))
                         : std::nullopt);
  }

  if (cfg.format == "json") {
    Json doc;
    doc["timings"] = Json::array();
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
      for (std::size_t k = 0; k < selected.size(); ++k) {
        doc["timings"].push_back(
            {{"n", cfg.sizes[i]}, {"statistic", selected[k].name}, {"seconds", seconds[k][i]}});
      }
    }
    doc["slopes"] = Json::object();
    for (std::size_t k = 0; k < selected.size(); ++k) {
      doc["slopes"][selected[k].name] = slopes[k] ? Json(*slopes[k]) : Json(nullptr);
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "n\tstatistic\tseconds\n";
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
      for (std::size_t k = 0; k < selected.size(); ++k) {
        out << cfg.sizes[i] << '\t' << selected[k].name << '\t' << format_shortest(seconds[k][i])
            << '\n';
      }
    }
    for (std::size_t k = 0; k < selected.size(); ++k) {
      out << "slope\t" << selected[k].name << '\t'
          << (slopes[k] ? format_shortest(*slopes[k]) : "NA") << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

double loglog_slope(std::span<const std::size_t> sizes, std::span<const double> seconds) {
  if (sizes.size() != seconds.size() || sizes.size() < 2) {
    throw Error(Errc::invalid_argument, "slope fit needs at least two (n, seconds) pairs");
  }
  const double m = static_cast<double>(sizes.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    sx += std::log(static_cast<double>(sizes[i]));
    sy += std::log(seconds[i]);
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double dx = std::log(static_cast<double>(sizes[i])) - mx;
    sxy += dx * (std::log(seconds[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw Error(Errc::invalid_argument, "slope fit needs two distinct sizes");
  return sxy / sxx;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rank-based independence tests: Hoeffding's D, the refined statistic R_n and "
               "tau*, all in O(n log n).",
               "rankindep"};
  app.footer(kScalingNote);
  app.require_subcommand(1);

  const std::vector<std::string> tests = {"hoeffding", "refined", "taustar", "all"};
  const std::vector<std::string> formats = {"json", "tsv"};

  TestConfig test_cfg;
  CLI::App* test = app.add_subcommand("test", "Test a paired sample for independence.");
  test->footer(kScalingNote);
  test->add_option("--input", test_cfg.input, "Two-column data file, or - for stdin")
      ->capture_default_str();
  test->add_option("--test", test_cfg.test, "Statistic to compute")
      ->check(CLI::IsMember(tests))
      ->capture_default_str();
  test->add_option("--pvalue", test_cfg.pvalue, "p-value method")
      ->check(CLI::IsMember({"none", "asymptotic", "permutation"}))
      ->capture_default_str();
  test->add_option("--resamples", test_cfg.resamples, "Resamples for --pvalue permutation")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  test->add_option("--ties", test_cfg.ties, "Tie handling: error, or random tie-breaking")
      ->check(CLI::IsMember({"error", "random"}))
      ->capture_default_str();
  test->add_option("--seed", test_cfg.seed, "Seed for tie-breaking and resampling")
      ->capture_default_str();
  test->add_option("--null-cache", test_cfg.null_cache,
                   "File holding the Monte Carlo sample of the null law; created if missing");
  test->add_option("--format", test_cfg.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  GenerateConfig gen_cfg;
  CLI::App* gen = app.add_subcommand("generate", "Write a sample from a bivariate law as x<TAB>y rows.");
  std::string names;
  for (const std::string_view name : generator_names()) {
    if (!names.empty()) names += ", ";
    names += name;
  }
  gen->add_option("generator", gen_cfg.name, "One of: " + names)->required();
  gen->add_option("-n,--size", gen_cfg.n, "Number of rows")->required();
  gen->add_option("--seed", gen_cfg.seed, "Random seed")->capture_default_str();
  gen->add_flag("--mirror", gen_cfg.mirror, "Replace x by (1 +- x)/2 with a random sign");
  gen->add_option("--depth", gen_cfg.depth, "Bits per value for the binary generator (8..62)")
      ->capture_default_str();

  BenchmarkConfig bench_cfg;
  CLI::App* bench = app.add_subcommand(
      "benchmark", "Time each statistic on a random permutation per size and fit log-log slopes.");
  bench->add_option("--sizes", bench_cfg.sizes, "Ascending sample sizes")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--test", bench_cfg.test, "Statistic to time")
      ->check(CLI::IsMember(tests))
      ->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "Seed for the random permutations")
      ->capture_default_str();
  bench->add_option("--format", bench_cfg.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*test) return run_test_command(test_cfg, in, out, err);
    if (*gen) return run_generate_command(gen_cfg, out);
    return run_benchmark_command(bench_cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace rankindep::cli
