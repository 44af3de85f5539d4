#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include <moead/algorithm.hpp>
#include <moead/errors.hpp>
#include <moead/metrics.hpp>

using moead::replacement_strategy;
using moead::scalarizer;
using moead::scalarizer_family;
using V = std::vector<double>;

namespace
{

// Delegates to a real problem and remembers every objective vector it returns.
class recording_problem : public moead::problem
{
public:
    explicit recording_problem(std::shared_ptr<const moead::problem> inner) : problem(inner->spec()), m_inner(inner) {}

    moead::objective_vector evaluate(const moead::encoding &x) const override
    {
        auto f = m_inner->evaluate(x);
        seen.push_back(f);
        return f;
    }
    moead::encoding random_solution(moead::rng &r) const override
    {
        return m_inner->random_solution(r);
    }
    const std::vector<double> &lower() const override
    {
        return m_inner->lower();
    }
    const std::vector<double> &upper() const override
    {
        return m_inner->upper();
    }

    mutable std::vector<moead::objective_vector> seen;

private:
    std::shared_ptr<const moead::problem> m_inner;
};

std::vector<moead::subproblem> lattice(std::size_t m, std::size_t h, std::size_t tm = 2, std::size_t tr = 1)
{
    return moead::make_subproblems(moead::simplex_lattice_weights(m, h), tm, tr);
}

moead::run_config zdt_config(moead::problem_family fam, replacement_strategy s, double p, std::size_t budget)
{
    moead::run_config c;
    c.problem = moead::make_spec(fam, 2);
    c.variant = moead::make_variant(s, p);
    c.population_size = 100;
    c.max_evaluations = budget;
    return c;
}

V on_ray(const std::vector<double> &lambda, double radius)
{
    double norm = 0.0;
    for (double l : lambda) {
        norm += l * l;
    }
    V f;
    for (double l : lambda) {
        f.push_back(l * radius / std::sqrt(norm));
    }
    return f;
}

} // namespace

TEST_CASE("strategy tokens and default pairing")
{
    CHECK(moead::parse_strategy("GGR") == replacement_strategy::ggr);
    CHECK(moead::parse_strategy("MOEA/D-GR") == replacement_strategy::gr);
    CHECK(moead::parse_strategy("moead") == replacement_strategy::vanilla);
    CHECK_THROWS_AS(moead::parse_strategy("nsga2"), moead::config_error);
    CHECK(moead::make_variant(replacement_strategy::ggr, 1).scal.family == scalarizer_family::glp);
    CHECK(moead::make_variant(replacement_strategy::gr, 2).scal.family == scalarizer_family::lp);
    CHECK(moead::make_variant(replacement_strategy::vanilla, 2).label() == "MOEA/D");
}

TEST_CASE("match_subproblem examples")
{
    const V z{0, 0};
    std::vector<moead::weight_vector> w{{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}};
    const auto sps = moead::make_subproblems(w, 1, 1);
    const scalarizer tch(scalarizer_family::lp, moead::infinite_p);
    CHECK(moead::match_subproblem(V{0.5, 0.5}, sps, tch, z) == 1);

    std::vector<moead::weight_vector> w2{{1, 0}, {0.5, 0.5}, {0, 1}};
    const auto sps2 = moead::make_subproblems(w2, 1, 1);
    const scalarizer l1(scalarizer_family::lp, 1);
    CHECK(moead::match_subproblem(V{1, 3}, sps2, l1, z) == 0);

    const auto sps12 = lattice(2, 12);
    const scalarizer gl2(scalarizer_family::glp, 2);
    for (std::size_t j : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 11u}) {
        CHECK(moead::match_subproblem(sps12[j].lambda, sps12, gl2, z) == j);
    }
    CHECK_THROWS_AS(moead::match_subproblem(V{NAN, 1}, sps12, gl2, z), moead::numeric_error);
    CHECK_THROWS_AS(moead::match_subproblem(V{1, 1}, {}, gl2, z), moead::config_error);
}

TEST_CASE("GLp matches every interior direction vector to its own subproblem")
{
    const V z2{0, 0};
    const V z3{0, 0, 0};
    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0, moead::infinite_p}) {
        const scalarizer g(scalarizer_family::glp, p);
        for (auto [m, h] : {std::pair<std::size_t, std::size_t>{2, 99}, {3, 18}}) {
            const auto sps = lattice(m, h);
            for (const auto &sp : sps) {
                if (sp.boundary != moead::boundary_class::interior) {
                    continue;
                }
                for (double radius : {0.5, 1.0, 7.0}) {
                    CHECK(moead::match_subproblem(on_ray(sp.lambda, radius), sps, g, m == 2 ? z2 : z3) == sp.index);
                }
            }
        }
    }
}

TEST_CASE("replacement is strict")
{
    const auto sps = lattice(2, 4);
    const V z{0, 0};
    const scalarizer tch(scalarizer_family::lp, moead::infinite_p);
    moead::population pop(5);
    for (auto &ind : pop) {
        ind.f = {1, 1};
    }
    const std::vector<std::size_t> all{0, 1, 2, 3, 4};

    auto better = moead::individual{moead::real_vector{}, {0.5, 0.5}};
    auto copy = pop;
    CHECK(moead::replace_in_neighborhood(better, all, copy, sps, tch, z) == 5);
    for (const auto &ind : copy) {
        CHECK(ind.f == V{0.5, 0.5});
    }

    auto worse = moead::individual{moead::real_vector{}, {2, 2}};
    copy = pop;
    CHECK(moead::replace_in_neighborhood(worse, all, copy, sps, tch, z) == 0);
    auto equal = moead::individual{moead::real_vector{}, {1, 1}};
    CHECK(moead::replace_in_neighborhood(equal, all, copy, sps, tch, z) == 0);

    // (1, 0.5) ties with (1, 1) on w = (1, 0) under TCH but improves the others.
    auto tie = moead::individual{moead::real_vector{}, {1, 0.5}};
    copy = pop;
    const std::vector<std::size_t> two{4, 0};
    CHECK(moead::replace_in_neighborhood(tie, two, copy, sps, tch, z) == 1);
    CHECK(copy[4].f == V{1, 1});
    CHECK(copy[0].f == V{1, 0.5});
}

TEST_CASE("replacement only ever lowers the stored subproblem value")
{
    const auto sps = lattice(2, 20);
    const V z{0, 0};
    moead::rng r(3);
    for (double p : {1.0, 2.0, moead::infinite_p}) {
        const scalarizer s(scalarizer_family::lp, p);
        moead::population pop(sps.size());
        for (auto &ind : pop) {
            ind.f = {r.uniform(0, 2), r.uniform(0, 2)};
        }
        for (int t = 0; t < 2000; ++t) {
            const moead::individual x{moead::real_vector{}, {r.uniform(0, 2), r.uniform(0, 2)}};
            const auto k = moead::match_subproblem(x.f, sps, s, z);
            const auto before = pop;
            moead::replace_in_neighborhood(x, sps[k].replacement, pop, sps, s, z);
            for (std::size_t i = 0; i < pop.size(); ++i) {
                const double old_v = s(before[i].f, sps[i].weight_eff, z, sps[i].h);
                const double new_v = s(pop[i].f, sps[i].weight_eff, z, sps[i].h);
                if (pop[i].f != before[i].f) {
                    CHECK(new_v < old_v);
                }
                CHECK(new_v <= old_v);
            }
        }
    }
}

TEST_CASE("a solution on a distant direction vector is matched away from its parent subproblem")
{
    // Ten subproblems; the offspring of subproblem 3 lands on the ray of subproblem 8.
    const auto sps = lattice(2, 9, 3, 2);
    const V z{0, 0};
    const scalarizer tch(scalarizer_family::lp, moead::infinite_p);
    const V f = on_ray(sps[8].lambda, 1.0);
    const auto k = moead::match_subproblem(f, sps, tch, z);
    CHECK(k == 8);
    moead::population pop(sps.size());
    for (auto &ind : pop) {
        ind.f = {5, 5};
    }
    moead::replace_in_neighborhood({moead::real_vector{}, f}, sps[k].replacement, pop, sps, tch, z);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const bool in_target = std::find(sps[8].replacement.begin(), sps[8].replacement.end(), i)
                               != sps[8].replacement.end();
        CHECK((pop[i].f == f) == in_target);
    }
    CHECK(std::find(sps[3].replacement.begin(), sps[3].replacement.end(), 8) == sps[3].replacement.end());
}

TEST_CASE("one generation spends one evaluation per subproblem")
{
    auto c = zdt_config(moead::problem_family::zdt1, replacement_strategy::gr, 2, 100);
    c.population_size = 5;
    c.t_mating = 3;
    c.t_replacement = 2;
    const auto prob = moead::make_problem(c.problem);
    auto state = moead::initialize(c, *prob);
    CHECK(state.evaluations == 5);
    CHECK(state.pop.size() == 5);
    moead::step(state, c.variant, *prob, c.operators);
    CHECK(state.evaluations == 10);
}

TEST_CASE("vanilla replacement over the whole population keeps per-subproblem minima")
{
    auto c = zdt_config(moead::problem_family::zdt1, replacement_strategy::vanilla, 2, 1000);
    c.population_size = 11;
    c.t_mating = 3;
    c.t_replacement = 11;
    const auto inner = moead::make_problem(c.problem);
    const recording_problem prob(inner);
    auto state = moead::initialize(c, prob);
    const auto initial = state.pop;
    // Pin z below every reachable objective so the comparison basis is fixed.
    state.z = moead::reference_point(V{-1, -1});
    prob.seen.clear();
    moead::step(state, c.variant, prob, c.operators);
    REQUIRE(prob.seen.size() == 11);
    const auto zv = state.z.values();
    for (std::size_t k = 0; k < 11; ++k) {
        const auto &sp = state.subproblems[k];
        double best = c.variant.scal(initial[k].f, sp.weight_eff, zv, sp.h);
        for (const auto &f : prob.seen) {
            best = std::min(best, c.variant.scal(f, sp.weight_eff, zv, sp.h));
        }
        CHECK(c.variant.scal(state.pop[k].f, sp.weight_eff, zv, sp.h) == best);
    }
}

TEST_CASE("GR with L1 only ever matches extreme boundary subproblems")
{
    auto c = zdt_config(moead::problem_family::zdt1, replacement_strategy::gr, 1, 5000);
    const auto prob = moead::make_problem(c.problem);
    auto state = moead::initialize(c, *prob);
    std::size_t calls = 0;
    std::size_t bad = 0;
    state.on_match = [&](std::size_t, std::size_t target) {
        ++calls;
        bad += state.subproblems[target].boundary != moead::boundary_class::extreme_boundary;
    };
    while (!state.exhausted()) {
        moead::step(state, c.variant, *prob, c.operators);
    }
    CHECK(calls == 4900);
    CHECK(bad == 0);
}

TEST_CASE("vanilla MOEA/D is unchanged by the GLp weight factor")
{
    auto lp = zdt_config(moead::problem_family::zdt1, replacement_strategy::vanilla, 2, 3000);
    auto glp = lp;
    glp.variant.scal = scalarizer(scalarizer_family::glp, 2);
    const auto a = moead::run(lp);
    const auto b = moead::run(glp);
    REQUIRE(a.final_population.size() == b.final_population.size());
    for (std::size_t i = 0; i < a.final_population.size(); ++i) {
        CHECK(a.final_population[i].f == b.final_population[i].f);
    }
}

TEST_CASE("runs are deterministic and respect the budget")
{
    const auto c = zdt_config(moead::problem_family::zdt3, replacement_strategy::ggr, 2, 2000);
    const auto a = moead::run(c);
    const auto b = moead::run(c);
    REQUIRE(a.final_population.size() == 100);
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(a.final_population[i].f == b.final_population[i].f);
        CHECK(std::get<moead::real_vector>(a.final_population[i].x)
              == std::get<moead::real_vector>(b.final_population[i].x));
    }
    CHECK(a.evaluations == 2000);
    CHECK_FALSE(a.truncated);
    REQUIRE(a.trajectory.size() == 20);
    CHECK(a.trajectory.front().evaluations == 100);
    CHECK(a.trajectory.back().evaluations == 2000);

    auto odd = c;
    odd.max_evaluations = 2050;
    const auto t = moead::run(odd);
    CHECK(t.evaluations == 2050);
    CHECK(t.truncated);
    CHECK(t.trajectory.size() == 20);
}

TEST_CASE("combinatorial problems run end to end")
{
    for (auto fam : {moead::problem_family::mokp, moead::problem_family::motsp}) {
        moead::run_config c;
        c.problem = moead::make_spec(fam, 2);
        c.variant = moead::make_variant(replacement_strategy::ggr, 1);
        c.population_size = 11;
        c.t_mating = 3;
        c.t_replacement = 1;
        c.max_evaluations = 500;
        const auto r = moead::run(c);
        CHECK(r.evaluations == 500);
        CHECK_FALSE(r.final_front.empty());
    }
}

TEST_CASE("invalid configurations fail before any evaluation")
{
    auto c = zdt_config(moead::problem_family::zdt1, replacement_strategy::ggr, 1, 1000);
    c.population_size = 150;
    c.problem = moead::make_spec(moead::problem_family::dtlz1, 3);
    const auto inner = moead::make_problem(c.problem);
    const recording_problem prob(inner);
    CHECK_THROWS_WITH_AS(moead::initialize(c, prob), doctest::Contains("136"), moead::config_error);
    CHECK(prob.seen.empty());

    auto small = zdt_config(moead::problem_family::zdt1, replacement_strategy::ggr, 1, 50);
    CHECK_THROWS_AS(moead::run(small), moead::config_error);

    auto user = zdt_config(moead::problem_family::zdt1, replacement_strategy::vanilla, 1, 1000);
    user.weights = std::vector<moead::weight_vector>{{0.2, 0.8}, {0.8, 0.2}};
    CHECK_THROWS_AS(moead::run(user), moead::config_error);
}

TEST_CASE("checkpoint schedule")
{
    const auto s = moead::checkpoint_schedule(100000, 20);
    REQUIRE(s.size() == 20);
    CHECK(s.front() == 5000);
    CHECK(s.back() == 100000);
    const auto odd = moead::checkpoint_schedule(25001, 20);
    CHECK(odd.front() == 1251);
    CHECK(odd.back() == 25001);
}

TEST_CASE("GR with L1 collapses on ZDT2")
{
    const auto c = zdt_config(moead::problem_family::zdt2, replacement_strategy::gr, 1, 25000);
    const auto r = moead::run(c);
    const auto b = moead::pf_bounds(c.problem);
    CHECK(moead::normalized_hypervolume(r.final_front, *b) <= 0.05);
}
