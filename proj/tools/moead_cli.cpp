#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <moead/analysis.hpp>
#include <moead/errors.hpp>
#include <moead/harness.hpp>
#include <moead/metrics.hpp>
#include <moead/problems.hpp>

namespace
{

int cmd_run(const std::string &config_path, std::vector<std::string> overrides, const std::optional<std::size_t> &runs,
            const std::optional<std::size_t> &workers, const std::optional<std::string> &output,
            const std::optional<std::uint64_t> &seed)
{
    if (runs) {
        overrides.push_back("runs=" + std::to_string(*runs));
    }
    if (workers) {
        overrides.push_back("workers=" + std::to_string(*workers));
    }
    if (output) {
        overrides.push_back("output=" + *output);
    }
    if (seed) {
        overrides.push_back("seed=" + std::to_string(*seed));
    }
    const auto config = config_path.empty() ? moead::parse_config_text("", overrides)
                                            : moead::parse_config(config_path, overrides);
    const auto result = moead::run_experiment(config);
    moead::write_summary_csv(std::cout, result.summary);
    std::size_t failed = 0;
    for (const auto &row : result.rows) {
        if (row.status != "ok") {
            ++failed;
            std::cerr << row.problem << " m=" << row.m << ' ' << row.algorithm << " run " << row.run << ": "
                      << row.status << '\n';
        }
    }
    std::cerr << "wrote " << (config.output_dir / "results.csv").string() << " and "
              << (config.output_dir / "summary.csv").string() << '\n';
    return failed == 0 ? 0 : 3;
}

int cmd_regions(std::size_t m, std::size_t divisions, const std::string &family, const std::string &p_token,
                std::size_t samples, std::uint64_t seed, double r_min, double r_max, const std::string &output)
{
    const moead::scalarizer scal(moead::parse_family(family), moead::parse_exponent(p_token));
    const auto subproblems = moead::lattice_subproblems(m, divisions);
    moead::rng r(seed);
    const auto labelled = moead::region_map(moead::sample_shell(m, r_min, r_max, samples, r), subproblems, scal);
    if (output.empty() || output == "-") {
        moead::write_region_tsv(std::cout, labelled);
    } else {
        std::ofstream f(output);
        if (!f) {
            throw moead::config_error("cannot write " + output);
        }
        moead::write_region_tsv(f, labelled);
    }
    std::cerr << scal.name() << " passthrough fraction " << moead::passthrough_fraction(subproblems, scal) << '\n';
    return 0;
}

int cmd_verify(std::size_t samples, std::uint64_t seed)
{
    bool all = true;
    for (const auto &check : moead::verify_preference_regions(samples, seed)) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail << ")\n";
        all = all && check.passed;
    }
    return all ? 0 : 1;
}

int cmd_hv(const std::string &front_path, const std::string &problem, std::size_t m, std::vector<double> lower,
           std::vector<double> upper, double reference, bool raw)
{
    std::ifstream in(front_path);
    if (!in) {
        throw moead::config_error("cannot read front file " + front_path);
    }
    const auto front = moead::read_front(in);
    if (front.empty()) {
        std::cout << "0\n";
        return 0;
    }
    const std::size_t dim = front.front().size();
    if (raw) {
        const std::vector<double> ref(dim, reference);
        std::cout << moead::format_number(moead::hypervolume(front, ref)) << '\n';
        return 0;
    }
    moead::objective_bounds bounds;
    if (!problem.empty()) {
        const auto spec = moead::make_spec(moead::parse_problem_family(problem), m);
        const auto known = moead::pf_bounds(spec);
        if (!known) {
            throw moead::config_error(problem + " has no known front; pass --lower and --upper");
        }
        bounds = *known;
    } else if (!lower.empty() && !upper.empty()) {
        bounds = {std::move(lower), std::move(upper)};
    } else {
        bounds = moead::pooled_pf_bounds({front});
    }
    std::cout << moead::format_number(moead::normalized_hypervolume(front, bounds, reference)) << '\n';
    return 0;
}

int cmd_gen(const std::string &problem, std::size_t m, std::uint64_t seed, std::size_t size,
            const std::string &output)
{
    const auto family = moead::parse_problem_family(problem);
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!output.empty() && output != "-") {
        file.open(output);
        if (!file) {
            throw moead::config_error("cannot write " + output);
        }
        out = &file;
    }
    if (family == moead::problem_family::mokp) {
        moead::write_instance(*out, moead::generate_mokp(m, seed, size == 0 ? 250 : size));
    } else if (family == moead::problem_family::motsp) {
        moead::write_instance(*out, moead::generate_motsp(m, seed, size == 0 ? 60 : size));
    } else {
        throw moead::config_error("gen only applies to MOKP and MOTSP");
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Decomposition-based multi-objective optimization experiments"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "Run an experiment from a config file");
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::size_t> runs;
    std::optional<std::size_t> workers;
    std::optional<std::string> output;
    std::optional<std::uint64_t> seed;
    run->add_option("config", config_path, "YAML config file");
    run->add_option("-s,--set", overrides, "key=value override, repeatable");
    run->add_option("--runs", runs, "Independent runs per cell");
    run->add_option("-j,--workers", workers, "Concurrent runs");
    run->add_option("-o,--output", output, "Output directory");
    run->add_option("--seed", seed, "Base seed");

    auto *regions = app.add_subcommand("regions", "Write a preference-region map as TSV");
    std::size_t m = 2;
    std::size_t divisions = 6;
    std::string family = "lp";
    std::string p_token = "1";
    std::size_t samples = 100000;
    std::uint64_t region_seed = 1;
    double r_min = 1.0;
    double r_max = 2.0;
    std::string region_out;
    regions->add_option("-m", m, "Number of objectives")->capture_default_str();
    regions->add_option("-H,--divisions", divisions, "Lattice divisions")->capture_default_str();
    regions->add_option("--scalarizer", family, "lp or glp")->capture_default_str();
    regions->add_option("-p", p_token, "Exponent (number or inf)")->capture_default_str();
    regions->add_option("-n,--samples", samples, "Shell samples")->capture_default_str();
    regions->add_option("--seed", region_seed, "Sampling seed")->capture_default_str();
    regions->add_option("--r-min", r_min, "Inner shell radius")->capture_default_str();
    regions->add_option("--r-max", r_max, "Outer shell radius")->capture_default_str();
    regions->add_option("-o,--output", region_out, "Output TSV (default stdout)");

    auto *verify = app.add_subcommand("verify", "Check the preference-region properties numerically");
    std::size_t verify_samples = 100000;
    std::uint64_t verify_seed = 1;
    verify->add_option("-n,--samples", verify_samples, "Shell samples per map")->capture_default_str();
    verify->add_option("--seed", verify_seed, "Sampling seed")->capture_default_str();

    auto *hv = app.add_subcommand("hv", "Hypervolume of a front file");
    std::string front_path;
    std::string hv_problem;
    std::size_t hv_m = 2;
    std::vector<double> lower;
    std::vector<double> upper;
    double reference = moead::default_hv_reference;
    bool raw = false;
    hv->add_option("front", front_path, "Whitespace-separated objective vectors")->required();
    hv->add_option("--problem", hv_problem, "Normalize with this problem's known front");
    hv->add_option("-m", hv_m, "Objectives for --problem")->capture_default_str();
    hv->add_option("--lower", lower, "Normalization lower bounds");
    hv->add_option("--upper", upper, "Normalization upper bounds");
    hv->add_option("--reference", reference, "Reference value on every axis")->capture_default_str();
    hv->add_flag("--raw", raw, "Skip normalization");

    auto *gen = app.add_subcommand("gen", "Generate a MOKP or MOTSP instance file");
    std::string gen_problem;
    std::size_t gen_m = 2;
    std::uint64_t gen_seed = 1;
    std::size_t gen_size = 0;
    std::string gen_out;
    gen->add_option("problem", gen_problem, "mokp or motsp")->required();
    gen->add_option("-m", gen_m, "Number of objectives")->capture_default_str();
    gen->add_option("--seed", gen_seed, "Instance seed")->capture_default_str();
    gen->add_option("--size", gen_size, "Items or cities (default 250 / 60)");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return cmd_run(config_path, overrides, runs, workers, output, seed);
        }
        if (*regions) {
            return cmd_regions(m, divisions, family, p_token, samples, region_seed, r_min, r_max, region_out);
        }
        if (*verify) {
            return cmd_verify(verify_samples, verify_seed);
        }
        if (*hv) {
            return cmd_hv(front_path, hv_problem, hv_m, lower, upper, reference, raw);
        }
        if (*gen) {
            return cmd_gen(gen_problem, gen_m, gen_seed, gen_size, gen_out);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
