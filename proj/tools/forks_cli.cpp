#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forks/constructive.hpp"
#include "forks/coloring.hpp"
#include "forks/generators.hpp"
#include "forks/matching.hpp"
#include "forks/reduction.hpp"
#include "forks/report.hpp"

// Exit codes: 0 ok, 2 parse error, 3 I/O error, 4 precondition violated,
// 5 verification failure. Reports go to stdout, diagnostics to stderr.

namespace {

constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitVerification = 5;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

forks::Coloring load_instance(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    if (std::cin.bad()) throw CliError(kExitIo, "failed to read stdin");
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kExitIo, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw CliError(kExitIo, "failed to read '" + path + "'");
    text = buffer.str();
  }
  return forks::parse_instance(text);
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (n * 1000003ULL + index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Runs fn(i) for i in [0, count) on a small worker pool; results land in a
/// slot per index, so aggregation is deterministic regardless of scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_indexed(int count, int jobs, Fn fn) {
  std::vector<Result> results(count);
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  const int nworkers = std::min(jobs, count);
  workers.reserve(nworkers);
  for (int w = 0; w < nworkers; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) break;
        results[i] = fn(i);
      }
    });
  }
  for (std::thread& t : workers) t.join();
  return results;
}

void enumerate_balanced(int n, const std::function<void(const forks::Coloring&)>& fn) {
  const int cells = n * n;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    forks::Coloring c(n);
    for (int i = 0; i < cells; ++i) {
      if (mask >> i & 1) c.set(i / n, i % n, forks::Color::Black);
    }
    if (forks::is_balanced(c)) fn(c);
  }
}

int cmd_solve(const std::string& path, const std::string& side_flag, bool debug_matching) {
  const forks::Coloring coloring = load_instance(path);
  const auto start = std::chrono::steady_clock::now();

  forks::ForkForest forest;
  if (side_flag == "both") {
    forest = forks::solve_both(coloring).witness;
  } else {
    forest = forks::solve_exact(coloring, side_flag == "x" ? forks::Side::X : forks::Side::Y);
  }
  const double elapsed = ms_since(start);

  if (debug_matching) {
    const forks::Side side = forest.center_side;
    const forks::Reduction reduction = forks::build_reduction(coloring, side);
    const forks::Matching matching = forks::min_weight_perfect_matching(reduction.graph);
    std::cerr << "matching:";
    for (const auto& [u, v] : matching.pairs) std::cerr << " " << u << "-" << v;
    std::cerr << "\n";
  }

  forks::ordered_json report;
  report["side"] = side_flag;
  report["size"] = forest.size();
  report["min_matching_weight"] = coloring.n() - forest.size();
  report["elapsed_ms"] = elapsed;
  report["forest"] = forks::forest_to_json(forest);
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_construct(const std::string& path) {
  const forks::Coloring coloring = load_instance(path);
  if (coloring.n() < 2 || !forks::is_balanced(coloring)) {
    throw CliError(kExitPrecondition,
                   "constructive bound requires a balanced coloring with n >= 2");
  }
  const forks::ConstructiveResult result = forks::constructive_lower_bound(coloring);
  forks::ordered_json report;
  report["case"] = result.case_fired;
  report["certified_size"] = result.certified_size;
  report["bound_floor"] = result.bound_floor;
  report["forest"] = forks::forest_to_json(result.forest);
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct VerifyRow {
  int n = 0;
  std::int64_t bound_floor = 0;
  std::int64_t bound_ceil = 0;
  int min_f = -1;
  int extremal_f = 0;
  int violations = 0;
  std::vector<std::string> dumped;
};

int cmd_verify(int n_max, int samples, std::uint64_t seed, int jobs) {
  std::cout << "n,bound_floor,bound_ceil,min_f_observed,extremal_f,violations\n";
  int total_violations = 0;

  for (int n = 1; n <= n_max; ++n) {
    VerifyRow row;
    row.n = n;
    row.bound_floor = forks::lower_bound_floor(n);
    row.bound_ceil = forks::lower_bound_ceil(n);

    std::vector<forks::Coloring> instances;
    if (n <= 3) {
      enumerate_balanced(n, [&](const forks::Coloring& c) { instances.push_back(c); });
    } else {
      instances.reserve(samples);
      for (int i = 0; i < samples; ++i) {
        instances.push_back(forks::random_balanced(n, mix_seed(seed, n, i)));
      }
    }

    struct InstanceResult {
      int f = 0;
      bool ok = true;
      std::string detail;
    };
    const std::vector<InstanceResult> results = run_indexed<InstanceResult>(
        static_cast<int>(instances.size()), jobs, [&](int i) {
          InstanceResult r;
          const forks::Coloring& c = instances[i];
          r.f = forks::solve_both(c).f_value;
          if (n >= 2) {
            if (r.f < row.bound_ceil) {
              r.ok = false;
              r.detail = "solve_both " + std::to_string(r.f) + " < ceil bound " +
                         std::to_string(row.bound_ceil);
            }
            const forks::ConstructiveResult cr = forks::constructive_lower_bound(c);
            if (cr.certified_size < row.bound_floor) {
              r.ok = false;
              r.detail = "constructive " + std::to_string(cr.certified_size) +
                         " < floor bound " + std::to_string(row.bound_floor);
            }
            if (!forks::validate_forest(c, cr.forest).ok()) {
              r.ok = false;
              r.detail = "constructive forest failed validation";
            }
          }
          return r;
        });

    for (std::size_t i = 0; i < results.size(); ++i) {
      const InstanceResult& r = results[i];
      if (row.min_f < 0 || r.f < row.min_f) row.min_f = r.f;
      if (!r.ok) {
        ++row.violations;
        const std::string file =
            "violation_n" + std::to_string(n) + "_" + std::to_string(i) + ".txt";
        std::ofstream out(file);
        out << forks::format_instance(instances[i]);
        std::cerr << "violation (n=" << n << ", instance " << i << "): " << r.detail
                  << "; instance dumped to " << file << "\n";
      }
    }

    row.extremal_f = n >= 2 ? forks::solve_both(forks::extremal_coloring(n)).f_value : 0;
    total_violations += row.violations;
    std::cout << row.n << "," << row.bound_floor << "," << row.bound_ceil << ","
              << (row.min_f < 0 ? 0 : row.min_f) << "," << row.extremal_f << ","
              << row.violations << "\n";
  }

  if (total_violations > 0) {
    std::cerr << total_violations << " violation(s) found\n";
    return kExitVerification;
  }
  return 0;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, double p) {
  forks::Coloring coloring(1);
  if (family == "extremal") {
    coloring = forks::extremal_coloring(n);
  } else if (family == "balanced") {
    coloring = forks::random_balanced(n, seed);
  } else {
    coloring = forks::random_coloring(n, p, seed);
  }
  std::cout << forks::format_instance(coloring);
  return 0;
}

int cmd_bench(const std::string& n_list, int samples, std::uint64_t seed, int jobs) {
  std::vector<int> sizes;
  std::stringstream ss(n_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const int n = std::stoi(item);
      if (n < 2) throw std::invalid_argument("n");
      sizes.push_back(n);
    } catch (const std::exception&) {
      throw CliError(kExitPrecondition, "--n-list entries must be integers >= 2");
    }
  }

  std::cout << "n,mean_solve_ms,mean_construct_ms\n";
  for (const int n : sizes) {
    std::vector<forks::Coloring> instances;
    instances.reserve(samples);
    for (int i = 0; i < samples; ++i) {
      instances.push_back(forks::random_balanced(n, mix_seed(seed, n, i)));
    }
    struct Times {
      double solve = 0;
      double construct = 0;
    };
    const std::vector<Times> times = run_indexed<Times>(samples, jobs, [&](int i) {
      Times t;
      auto start = std::chrono::steady_clock::now();
      forks::solve_both(instances[i]);
      t.solve = ms_since(start);
      start = std::chrono::steady_clock::now();
      forks::constructive_lower_bound(instances[i]);
      t.construct = ms_since(start);
      return t;
    });
    double solve_total = 0;
    double construct_total = 0;
    for (const Times& t : times) {
      solve_total += t.solve;
      construct_total += t.construct;
    }
    std::cout << n << "," << solve_total / samples << "," << construct_total / samples << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and constructive fork-forest solvers for two-colored K_{n,n}"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string side = "both";
  bool debug_matching = false;
  auto* solve = app.add_subcommand("solve", "maximum fork forest via matching reduction");
  solve->add_option("instance", instance_path, "instance file ('-' for stdin)")->required();
  solve->add_option("--side", side, "center side: x, y, or both")
      ->check(CLI::IsMember({"x", "y", "both"}));
  solve->add_flag("--debug-matching", debug_matching, "dump the optimal matching to stderr");

  std::string construct_path;
  auto* construct = app.add_subcommand("construct", "certified lower-bound forest");
  construct->add_option("instance", construct_path, "instance file ('-' for stdin)")->required();

  int n_max = 10;
  int samples = 100;
  std::uint64_t seed = 12345;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "batch bound verification, CSV on stdout");
  verify->add_option("--n-max", n_max, "largest n (n <= 3 is exhaustive)")
      ->check(CLI::Range(1, 1024));
  verify->add_option("--samples", samples, "random instances per n for n >= 4")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for instance generation");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string family = "balanced";
  int gen_n = 8;
  std::uint64_t gen_seed = 0;
  double p = 0.5;
  auto* gen = app.add_subcommand("gen", "emit an instance on stdout");
  gen->add_option("--family", family, "extremal, balanced, or bernoulli")
      ->check(CLI::IsMember({"extremal", "balanced", "bernoulli"}));
  gen->add_option("--n", gen_n, "side size")->check(CLI::Range(1, 1 << 20));
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--p", p, "black probability (bernoulli)")->check(CLI::Range(0.0, 1.0));

  std::string n_list = "16,32,64";
  int bench_samples = 3;
  std::uint64_t bench_seed = 12345;
  int bench_jobs = 1;
  auto* bench = app.add_subcommand("bench", "timing CSV over a list of sizes");
  bench->add_option("--n-list", n_list, "comma-separated sizes");
  bench->add_option("--samples", bench_samples, "instances per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "seed for instance generation");
  bench->add_option("--jobs", bench_jobs, "worker threads")->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, side, debug_matching);
    if (construct->parsed()) return cmd_construct(construct_path);
    if (verify->parsed()) return cmd_verify(n_max, samples, seed, jobs);
    if (gen->parsed()) return cmd_gen(family, gen_n, gen_seed, p);
    if (bench->parsed()) return cmd_bench(n_list, bench_samples, bench_seed, bench_jobs);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const forks::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
