// snwalk: command-line front end. Data goes to --out (or stdout); progress,
// the one-line summary and error records go to stderr.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "snwalk/io.hpp"
#include "snwalk/profile.hpp"
#include "snwalk/spectrum.hpp"
#include "snwalk/table_cache.hpp"
#include "snwalk/walk.hpp"

namespace {

using namespace snwalk;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  bool require_cache = false;
  bool timing = false;
  bool quiet = false;
  std::string cache_dir;
};

struct Args {
  int n = 0;
  std::vector<int> n_list;
  int k = 0;
  int k_max = 0;
  double c = 0.0;
  std::vector<double> c_list;
  std::optional<int> M;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  bool expressions = false;
  bool verify = false;
};

struct Result {
  DataTable table;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

void require_range(int value, int lo, int hi, const char* name) {
  require(value >= lo && value <= hi, fmt::format("{} must be in [{}, {}], got {}", name, lo, hi, value));
}

void progress(const Common& common, const std::string& message) {
  if (!common.quiet) std::cerr << message << '\n';
}

TableStore make_store(const Common& common) {
  TableStore::Config config;
  config.cache_dir = common.cache_dir.empty() ? cache_dir_from_env() : std::optional(std::filesystem::path(common.cache_dir));
  config.require_cached = common.require_cache;
  config.build.threads = common.threads;
  if (common.require_cache && !config.cache_dir)
    throw TableUnavailableError(fmt::format("--require-cache needs --cache-dir or {}", kCacheDirEnv));
  return TableStore(std::move(config));
}

std::shared_ptr<const CharacterTable> get_table(TableStore& store, const Common& common, int n) {
  progress(common, fmt::format("preparing character table n={}", n));
  return store.get(n);
}

Result run_spectrum(const Common& common, const Args& args) {
  require_range(args.n, 2, kMaxPartitionN, "--n");
  progress(common, fmt::format("building spectrum n={}", args.n));
  return {spectrum_table(build_spectrum(args.n, common.threads))};
}

Result run_tv_curve(const Common& common, const Args& args) {
  require_range(args.n, 2, kMaxExactN, "--n");
  require(args.k_max >= 0, "--k-max must be nonnegative");
  TableStore store = make_store(common);
  const ExactWalk walk(get_table(store, common, args.n), common.threads);
  std::vector<TvCurvePoint> points;
  for (int k = 0; k <= args.k_max; ++k) {
    const auto start = Clock::now();
    TvCurvePoint point;
    point.n = args.n;
    point.k = k;
    point.tv_exact = walk.tv_to_uniform(k);
    point.ubl_sqrt = std::sqrt(ubl_bound(walk.spectrum(), k));
    if (common.timing) point.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    points.push_back(point);
  }
  return {tv_curve_table(points)};
}

std::vector<int> n_values(const Args& args) {
  if (!args.n_list.empty()) return args.n_list;
  require(args.n != 0, "--n is required");
  return {args.n};
}

Result run_ds_bound(const Common& common, const Args& args) {
  const auto ns = n_values(args);
  require(!args.c_list.empty(), "--c is required");
  for (int n : ns) require_range(n, 4, kMaxPartitionN, "--n");
  for (int n : ns)
    for (double c : args.c_list)
      require(steps_for(n, c) >= 1, fmt::format("c={} gives no steps at n={}", c, n));
  std::vector<DsBoundReport> reports;
  for (int n : ns) {
    progress(common, fmt::format("building spectrum n={}", n));
    const auto spectrum = build_spectrum(n, common.threads);
    for (double c : args.c_list) reports.push_back(ds_bound_report(spectrum, c));
  }
  return {ds_bound_table(reports)};
}

Result run_zones(const Common& common, const Args& args) {
  const auto ns = n_values(args);
  require(args.k >= 1, "--k must be positive");
  for (int n : ns) require_range(n, args.expressions ? 10 : 2, kMaxPartitionN, "--n");
  if (args.expressions) {
    std::vector<ZoneBoundExpressions> rows;
    for (int n : ns) rows.push_back(zone_bound_expressions(n, args.k));
    return {zone_expressions_table(rows)};
  }
  std::vector<ZoneSummary> rows;
  for (int n : ns) {
    progress(common, fmt::format("building spectrum n={}", n));
    const auto summary = summarize_zones(build_spectrum(n, common.threads), args.k);
    rows.insert(rows.end(), summary.begin(), summary.end());
  }
  return {zones_table(rows)};
}

Result run_profile(const Common& common, const Args& args) {
  const auto ns = n_values(args);
  for (int n : ns) {
    require_range(n, 4, kMaxExactN, "--n");
    require(steps_for(n, args.c) >= 1, fmt::format("c={} gives no steps at n={}", args.c, n));
  }
  if (args.M) require(*args.M >= 0, "--M must be nonnegative");
  TableStore store = make_store(common);
  for (int n : ns) get_table(store, common, n);
  return {profile_table(profile_report(args.c, ns, args.M, store, common.threads))};
}

Result run_simulate(const Common& common, const Args& args) {
  require_range(args.n, 2, kMaxExactN, "--n");
  require(args.k >= 0, "--k must be nonnegative");
  require(args.trials >= 1, "--trials must be positive");
  TableStore store = make_store(common);
  const ExactWalk walk(get_table(store, common, args.n), common.threads);
  progress(common, fmt::format("simulating {} trials", args.trials));
  const auto empirical = simulate_shuffle(args.n, args.k, args.trials, args.seed, common.threads);
  const ClassDistribution exact = walk.distribution(args.k);
  std::vector<double> mass;
  for (std::size_t i = 0; i < exact.probs.size(); ++i) mass.push_back(exact.class_mass(i));
  Result result{empirical_table(empirical, mass)};
  result.extra["generator"] = empirical.generator;
  result.extra["seed"] = args.seed;
  result.extra["tv_empirical_exact"] = tv_distance(empirical.dist, exact);
  return result;
}

Result run_table_cache(const Common& common, const Args& args) {
  const auto ns = n_values(args);
  for (int n : ns) require_range(n, 1, kMaxTableN, "--n");
  TableStore store = make_store(common);
  const auto dir = common.cache_dir.empty() ? cache_dir_from_env() : std::optional(std::filesystem::path(common.cache_dir));
  if (!dir) throw UsageError(fmt::format("table-cache needs --cache-dir or {}", kCacheDirEnv));
  DataTable table{{"n", "partitions", "file", "checksum_ok"}, {}};
  for (int n : ns) {
    const auto t = get_table(store, common, n);
    const auto path = *dir / cache_file_name(n);
    bool ok = std::filesystem::exists(path);
    if (args.verify && ok) {
      const CharacterTable fresh = build_table(n, {common.threads});
      const CharacterTable loaded = load_table(path);
      ok = std::equal(loaded.values().begin(), loaded.values().end(), fresh.values().begin(), fresh.values().end());
    }
    table.add_row({std::int64_t{n}, static_cast<std::int64_t>(t->size()), cache_file_name(n).string(),
                   std::int64_t{ok ? 1 : 0}});
    if (!ok) throw TableCacheError(fmt::format("cache file for n={} does not match a fresh build", n));
  }
  return {table};
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_error(const std::string& type, const std::string& message) {
  nlohmann::ordered_json record;
  record["error"] = {{"type", type}, {"message", message}};
  std::cerr << record.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of the random-transposition shuffle"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  Args args;
  app.add_option("--out,-o", common.out, "Output file (default stdout)");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", common.threads, "Worker thread cap (0 = hardware)");
  app.add_option("--cache-dir", common.cache_dir, std::string("Table cache directory (default $") + kCacheDirEnv + ")");
  app.add_flag("--require-cache", common.require_cache, "Fail instead of building a missing table");
  app.add_flag("--timing", common.timing, "Record wall-clock times in the data (breaks byte-identity)");
  app.add_flag("--quiet,-q", common.quiet, "Suppress progress messages");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of every irreducible");
  spectrum->add_option("--n", args.n)->required();

  auto* tv = app.add_subcommand("tv-curve", "Exact TV distance and upper bound for k = 0..k-max");
  tv->add_option("--n", args.n)->required();
  tv->add_option("--k-max", args.k_max)->required();

  auto* ds = app.add_subcommand("ds-bound", "Upper bound at k = n log n / 2 + c n against e^{-2c}");
  ds->add_option("--n", args.n_list)->required()->delimiter(',');
  ds->add_option("--c", args.c_list)->required()->delimiter(',');

  auto* zones = app.add_subcommand("zones", "Per-zone spectral sums");
  zones->add_option("--n", args.n_list)->required()->delimiter(',');
  zones->add_option("--k", args.k)->required();
  zones->add_flag("--expressions", args.expressions, "Closed-form zone bound expressions instead");

  auto* profile = app.add_subcommand("profile", "Exact TV against the limiting profile");
  profile->add_option("--c", args.c)->required();
  profile->add_option("--n", args.n_list)->required()->delimiter(',');
  profile->add_option("--M", args.M, "Truncation width (default adaptive)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo shuffle against the exact distribution");
  simulate->add_option("--n", args.n)->required();
  simulate->add_option("--k", args.k)->required();
  simulate->add_option("--trials", args.trials)->required();
  simulate->add_option("--seed", args.seed);

  auto* cache = app.add_subcommand("table-cache", "Build or verify on-disk character tables");
  cache->add_option("--n", args.n_list)->required()->delimiter(',');
  cache->add_flag("--verify", args.verify, "Rebuild and compare against the cached file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Result result;
    if (command == "spectrum") result = run_spectrum(common, args);
    else if (command == "tv-curve") result = run_tv_curve(common, args);
    else if (command == "ds-bound") result = run_ds_bound(common, args);
    else if (command == "zones") result = run_zones(common, args);
    else if (command == "profile") result = run_profile(common, args);
    else if (command == "simulate") result = run_simulate(common, args);
    else result = run_table_cache(common, args);

    const Format format = common.format == "json" ? Format::Json : Format::Csv;
    if (common.out.empty()) {
      write_table(std::cout, result.table, format);
    } else {
      {
        std::ofstream out(common.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + common.out);
        write_table(out, result.table, format);
      }
      nlohmann::ordered_json meta;
      meta["command"] = command;
      meta["args"] = std::vector<std::string>(argv + 1, argv + argc);
      meta["version"] = kVersion;
      meta["timestamp"] = utc_timestamp();
      meta["rows"] = result.table.rows.size();
      for (const auto& [key, value] : result.extra.items()) meta[key] = value;
      std::ofstream(common.out + ".meta.json") << meta.dump(2) << '\n';
    }
    std::cerr << fmt::format("snwalk {}: {} rows{}", command, result.table.rows.size(),
                             common.out.empty() ? "" : " -> " + common.out)
              << '\n';
    return 0;
  } catch (const UsageError& e) {
    emit_error("invalid_argument", e.what());
    return 2;
  } catch (const ResourceLimitError& e) {
    emit_error("resource_limit", e.what());
    return 3;
  } catch (const TableUnavailableError& e) {
    emit_error("table_unavailable", e.what());
    return 4;
  } catch (const TableCacheError& e) {
    emit_error("table_cache", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    emit_error("invalid_argument", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
}
