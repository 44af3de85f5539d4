#ifndef MOEAD_HARNESS_HPP
#define MOEAD_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <moead/algorithm.hpp>
#include <moead/metrics.hpp>
#include <moead/problems.hpp>

namespace moead
{

/// One benchmark instance with its resolved run settings.
struct problem_setting {
    problem_spec spec;
    std::size_t population_size = 0;
    std::size_t t_mating = 0;
    std::size_t t_replacement = 0;
    std::size_t max_evaluations = 0;
    std::optional<std::filesystem::path> instance_file; // read instead of generating
};

struct experiment_config {
    std::vector<problem_setting> problems;
    std::vector<algorithm_variant> algorithms;
    std::size_t runs = 30;
    std::uint64_t base_seed = 1;
    std::uint64_t instance_seed = 1;
    std::size_t workers = 1;
    std::size_t checkpoints = 20;
    reference_mode reference = reference_mode::ideal;
    operator_params operators;
    std::filesystem::path output_dir = "results";
    bool write_fronts = false;
};

/// Defaults: N = 100 (m = 2), 190 (m = 3), 210 (m = 5).
std::size_t default_population_size(std::size_t m);
/// 25000 (ZDT), 100000 (DTLZ), 200000 / 400000 (MOKP, MOTSP with m = 2 / 3).
std::size_t default_budget(problem_family family, std::size_t m);
/// round(0.1 N), at least 2.
std::size_t default_t_mating(std::size_t population_size);
/// ceil(0.05 N).
std::size_t default_t_replacement(std::size_t population_size);

/// key=value overrides applied on top of a config file, e.g. "T_r=1",
/// "runs=11", "p=inf". Keys are the same as the top-level file keys.
using override_list = std::vector<std::string>;

/// Parses the YAML config grammar documented in the README, applies the
/// overrides and resolves all defaults. Throws config_error naming the
/// offending token or the nearest feasible lattice sizes.
experiment_config parse_config_text(const std::string &text, const override_list &overrides = {});
experiment_config parse_config(const std::filesystem::path &path, const override_list &overrides = {});

struct result_row {
    std::string problem;
    std::size_t m = 0;
    std::string algorithm;
    std::string scalarizer;
    double p = 1.0;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t population_size = 0;
    std::size_t t_mating = 0;
    std::size_t t_replacement = 0;
    std::size_t evaluations = 0;
    bool truncated = false;
    std::string status = "ok";
    double hv = 0.0;
    std::vector<double> hv_trajectory;
    double max_gap = 0.0; // largest consecutive gap on the normalized final front
};

struct summary_row {
    std::string problem;
    std::size_t m = 0;
    std::string algorithm;
    std::string scalarizer;
    double p = 1.0;
    std::size_t runs = 0;
    double mean = 0.0;
    double std = 0.0;
    double median = 0.0;
    std::size_t rank = 0;
    std::string mark; // "+", "-", "=" against the baseline, empty for the baseline itself
};

/// Groups rows by (problem, m, p), ranks algorithms by mean I_H (larger is
/// better, ties to the earlier algorithm) and marks each against
/// `baseline` with the rank-sum test. Marks are left empty when a group has
/// no baseline or fewer than five successful runs on either side.
std::vector<summary_row> stats_summary(const std::vector<result_row> &rows,
                                       const std::string &baseline = "MOEA/D-GGR");

struct experiment_result {
    std::vector<result_row> rows;
    std::vector<summary_row> summary;
};

/// Runs every (problem, algorithm, run) cell, writing results.csv,
/// summary.csv, instance files and optional fronts under output_dir.
/// Failed runs are recorded with their error in the status column.
experiment_result run_experiment(const experiment_config &config);

/// Runs without touching the file system.
experiment_result run_experiment_in_memory(const experiment_config &config);

void write_results_csv(std::ostream &out, const std::vector<result_row> &rows, std::size_t checkpoints);
void write_summary_csv(std::ostream &out, const std::vector<summary_row> &rows);

/// Shortest round-trip decimal form.
std::string format_number(double v);

/// Whitespace-separated objective vectors, one per line ('#' comments allowed).
std::vector<objective_vector> read_front(std::istream &in);
void write_front(std::ostream &out, const std::vector<objective_vector> &front);

} // namespace moead

#endif
