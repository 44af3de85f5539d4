#include <moead/algorithm.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>

#include <moead/errors.hpp>

namespace moead
{

replacement_strategy parse_strategy(const std::string &token)
{
    std::string t;
    for (char c : token) {
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (t == "moead" || t == "moea/d" || t == "vanilla") {
        return replacement_strategy::vanilla;
    }
    if (t == "gr" || t == "moead-gr" || t == "moea/d-gr") {
        return replacement_strategy::gr;
    }
    if (t == "ggr" || t == "moead-ggr" || t == "moea/d-ggr") {
        return replacement_strategy::ggr;
    }
    throw config_error("unknown algorithm '" + token + "' (expected moead, gr or ggr)");
}

std::string to_string(replacement_strategy s)
{
    switch (s) {
        case replacement_strategy::vanilla:
            return "MOEA/D";
        case replacement_strategy::gr:
            return "MOEA/D-GR";
        default:
            return "MOEA/D-GGR";
    }
}

std::string algorithm_variant::label() const
{
    return to_string(strategy);
}

algorithm_variant make_variant(replacement_strategy strategy, double p)
{
    const auto family = strategy == replacement_strategy::ggr ? scalarizer_family::glp : scalarizer_family::lp;
    return algorithm_variant{strategy, scalarizer(family, p)};
}

std::size_t match_subproblem(std::span<const double> f, const std::vector<subproblem> &subproblems,
                             const scalarizer &scal, std::span<const double> z)
{
    if (subproblems.empty()) {
        throw config_error("match_subproblem: no subproblems");
    }
    std::size_t best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (const auto &sp : subproblems) {
        const double v = scal(f, sp.weight_eff, z, sp.h);
        if (!std::isfinite(v)) {
            throw numeric_error("non-finite scalarization value on subproblem " + std::to_string(sp.index));
        }
        if (v < best_v) {
            best_v = v;
            best = sp.index;
        }
    }
    return best;
}

std::size_t replace_in_neighborhood(const individual &x_new, std::span<const std::size_t> neighbors,
                                    population &pop, const std::vector<subproblem> &subproblems,
                                    const scalarizer &scal, std::span<const double> z)
{
    std::size_t replaced = 0;
    for (std::size_t k : neighbors) {
        const subproblem &sp = subproblems.at(k);
        const double v_new = scal(x_new.f, sp.weight_eff, z, sp.h);
        const double v_old = scal(pop.at(k).f, sp.weight_eff, z, sp.h);
        if (v_new < v_old) {
            pop[k] = x_new;
            ++replaced;
        }
    }
    return replaced;
}

std::vector<std::size_t> checkpoint_schedule(std::size_t budget, std::size_t count)
{
    std::vector<std::size_t> at;
    for (std::size_t k = 1; k <= count; ++k) {
        at.push_back((k * budget + count - 1) / count);
    }
    return at;
}

std::vector<subproblem> build_subproblems(const run_config &config)
{
    std::vector<weight_vector> weights;
    double minimal_value = 0.0;
    if (config.weights) {
        weights = *config.weights;
        if (weights.size() != config.population_size) {
            throw config_error("weight set size " + std::to_string(weights.size()) + " differs from N = "
                               + std::to_string(config.population_size));
        }
        for (const auto &w : weights) {
            check_same_dimension(w.size(), config.problem.m, "weight vector");
        }
        minimal_value = minimal_entry(weights);
    } else {
        const auto h = lattice_divisions_for(config.problem.m, config.population_size);
        if (!h) {
            const auto [lo, hi] = nearest_lattice_sizes(config.problem.m, config.population_size);
            throw config_error("N = " + std::to_string(config.population_size) + " is not a simplex-lattice size for m = "
                               + std::to_string(config.problem.m) + "; nearest feasible sizes are "
                               + std::to_string(lo) + " and " + std::to_string(hi));
        }
        weights = simplex_lattice_weights(config.problem.m, *h);
    }
    auto subproblems = make_subproblems(weights, config.t_mating, config.t_replacement, minimal_value);
    if (config.variant.strategy == replacement_strategy::ggr) {
        subproblems = augment_boundary_neighborhoods(std::move(subproblems));
    }
    return subproblems;
}

namespace
{

void record_checkpoints(run_state &state)
{
    while (state.trajectory.size() < state.checkpoint_at.size()
           && state.evaluations >= state.checkpoint_at[state.trajectory.size()]) {
        checkpoint cp;
        cp.evaluations = state.evaluations;
        cp.objectives.reserve(state.pop.size());
        for (const auto &ind : state.pop) {
            cp.objectives.push_back(ind.f);
        }
        state.trajectory.push_back(std::move(cp));
    }
}

encoding reproduce(const individual &a, const individual &b, const problem &prob, const operator_params &ops,
                   rng &r)
{
    switch (kind_of(a.x)) {
        case encoding_kind::real: {
            const auto &xa = std::get<real_vector>(a.x);
            const auto &xb = std::get<real_vector>(b.x);
            auto child = sbx_crossover(xa, xb, prob.lower(), prob.upper(), ops.real, r);
            return polynomial_mutation(child, prob.lower(), prob.upper(), ops.real, r);
        }
        case encoding_kind::binary:
            return uniform_crossover_bitflip(std::get<bit_string>(a.x), std::get<bit_string>(b.x), ops.binary, r);
        default:
            return order_crossover_inversion(std::get<permutation>(a.x), std::get<permutation>(b.x), ops.perm, r);
    }
}

} // namespace

run_state initialize(const run_config &config, const problem &prob)
{
    config.operators.validate();
    if (config.problem.family != prob.spec().family || config.problem.m != prob.spec().m) {
        throw config_error("run config problem does not match the supplied problem");
    }
    if (config.max_evaluations < config.population_size) {
        throw config_error("evaluation budget smaller than the population size");
    }
    if (config.checkpoints == 0) {
        throw config_error("at least one checkpoint is required");
    }
    run_state state{
        .pop = {},
        .subproblems = build_subproblems(config),
        .z = reference_point(config.problem.m, config.reference),
        .evaluations = 0,
        .budget = config.max_evaluations,
        .random = rng(config.seed),
        .checkpoint_at = checkpoint_schedule(config.max_evaluations, config.checkpoints),
        .trajectory = {},
        .truncated = false,
        .on_match = {},
    };
    state.pop.reserve(state.subproblems.size());
    for (std::size_t j = 0; j < state.subproblems.size(); ++j) {
        individual ind;
        ind.x = prob.random_solution(state.random);
        ind.f = prob.evaluate(ind.x);
        ++state.evaluations;
        state.z.update(ind.f);
        state.pop.push_back(std::move(ind));
    }
    record_checkpoints(state);
    return state;
}

void step(run_state &state, const algorithm_variant &variant, const problem &prob, const operator_params &ops)
{
    if (state.exhausted()) {
        throw config_error("step called with the evaluation budget exhausted");
    }
    const std::size_t n = state.subproblems.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (state.exhausted()) {
            state.truncated = true;
            return;
        }
        const auto &mating = state.subproblems[j].mating;
        std::size_t first = 0;
        std::size_t second = 0;
        if (mating.size() >= 2) {
            first = state.random.index(mating.size());
            second = state.random.index(mating.size() - 1);
            if (second >= first) {
                ++second;
            }
        }
        individual child;
        child.x = reproduce(state.pop[mating[first]], state.pop[mating[second]], prob, ops, state.random);
        prob.repair(child.x);
        child.f = prob.evaluate(child.x);
        ++state.evaluations;
        state.z.update(child.f);

        std::size_t target = j;
        if (variant.strategy != replacement_strategy::vanilla) {
            target = match_subproblem(child.f, state.subproblems, variant.scal, state.z.values());
            if (state.on_match) {
                state.on_match(j, target);
            }
        }
        replace_in_neighborhood(child, state.subproblems[target].replacement, state.pop, state.subproblems,
                                variant.scal, state.z.values());
        record_checkpoints(state);
    }
}

run_result run(const run_config &config, const problem &prob)
{
    const auto start = std::chrono::steady_clock::now();
    run_state state = initialize(config, prob);
    while (!state.exhausted()) {
        step(state, config.variant, prob, config.operators);
    }
    run_result result;
    result.evaluations = state.evaluations;
    result.truncated = state.truncated;
    result.trajectory = std::move(state.trajectory);
    std::vector<objective_vector> objectives;
    objectives.reserve(state.pop.size());
    for (const auto &ind : state.pop) {
        objectives.push_back(ind.f);
    }
    result.final_front = nondominated_filter(objectives);
    result.final_population = std::move(state.pop);
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

run_result run(const run_config &config)
{
    const auto prob = make_problem(config.problem);
    return run(config, *prob);
}

} // namespace moead
