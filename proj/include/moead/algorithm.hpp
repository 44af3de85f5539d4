#ifndef MOEAD_ALGORITHM_HPP
#define MOEAD_ALGORITHM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <moead/core_types.hpp>
#include <moead/decomposition.hpp>
#include <moead/problems.hpp>
#include <moead/rng.hpp>
#include <moead/scalarization.hpp>
#include <moead/variation.hpp>

namespace moead
{

/// vanilla: new solution competes within B_r of the subproblem that produced it.
/// gr: new solution is matched to its best subproblem over all N first.
/// ggr: gr plus boundary subproblems appended to nearby interior B_r.
enum class replacement_strategy { vanilla, gr, ggr };

replacement_strategy parse_strategy(const std::string &token);
std::string to_string(replacement_strategy s);

struct algorithm_variant {
    replacement_strategy strategy = replacement_strategy::ggr;
    scalarizer scal;

    /// Display label, e.g. "MOEA/D-GGR".
    std::string label() const;
};

/// Default pairing: GGR with GLp, vanilla and GR with Lp, all at exponent p.
algorithm_variant make_variant(replacement_strategy strategy, double p);

struct run_config {
    problem_spec problem;
    algorithm_variant variant;
    std::size_t population_size = 100;
    std::optional<std::vector<weight_vector>> weights; // overrides the lattice
    std::size_t t_mating = 10;
    std::size_t t_replacement = 5;
    std::size_t max_evaluations = 25000;
    std::uint64_t seed = 1;
    operator_params operators;
    std::size_t checkpoints = 20;
    reference_mode reference = reference_mode::ideal;
};

struct checkpoint {
    std::size_t evaluations = 0;
    std::vector<objective_vector> objectives; // whole population at that point
};

struct run_result {
    population final_population;
    std::vector<objective_vector> final_front;
    std::vector<checkpoint> trajectory;
    std::size_t evaluations = 0;
    bool truncated = false;
    double wall_seconds = 0.0;
};

struct run_state {
    population pop;
    std::vector<subproblem> subproblems;
    reference_point z;
    std::size_t evaluations = 0;
    std::size_t budget = 0;
    rng random;
    std::vector<std::size_t> checkpoint_at; // evaluation counts, ascending
    std::vector<checkpoint> trajectory;
    bool truncated = false;
    /// Called with (producing subproblem, matched subproblem) on every
    /// GR/GGR matching.
    std::function<void(std::size_t, std::size_t)> on_match;

    bool exhausted() const
    {
        return evaluations >= budget;
    }
};

/// argmin_k scal(f | w_eff^k, z), ties toward the lower index.
/// Throws numeric_error on a non-finite scalarization value.
std::size_t match_subproblem(std::span<const double> f, const std::vector<subproblem> &subproblems,
                             const scalarizer &scal, std::span<const double> z);

/// Replace every x^k, k in `neighbors`, that x_new strictly improves on
/// subproblem k. Returns the number of replacements.
std::size_t replace_in_neighborhood(const individual &x_new, std::span<const std::size_t> neighbors,
                                    population &pop, const std::vector<subproblem> &subproblems,
                                    const scalarizer &scal, std::span<const double> z);

/// Subproblem table for a run: lattice (or user weights), neighborhoods, and
/// the boundary augmentation when the strategy is GGR.
std::vector<subproblem> build_subproblems(const run_config &config);

/// Validates the config, builds subproblems and evaluates the initial
/// population. Throws config_error before any evaluation when invalid.
run_state initialize(const run_config &config, const problem &prob);

/// One generation: one offspring per subproblem in ascending index order.
/// Stops early (flagging truncation) if the budget runs out.
void step(run_state &state, const algorithm_variant &variant, const problem &prob, const operator_params &ops);

/// Full run until the evaluation budget is used up.
run_result run(const run_config &config, const problem &prob);
run_result run(const run_config &config);

/// Evaluation counts at which trajectory snapshots are taken:
/// ceil(k * budget / count) for k = 1..count.
std::vector<std::size_t> checkpoint_schedule(std::size_t budget, std::size_t count);

} // namespace moead

#endif
