#ifndef MOEAD_PROBLEMS_HPP
#define MOEAD_PROBLEMS_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <moead/core_types.hpp>
#include <moead/rng.hpp>

namespace moead
{

enum class problem_family { zdt1, zdt2, zdt3, zdt4, dtlz1, dtlz3, dtlz5, mokp, motsp };

problem_family parse_problem_family(const std::string &token);
std::string to_string(problem_family family);
bool is_zdt(problem_family family);
bool is_dtlz(problem_family family);
bool is_combinatorial(problem_family family);

struct problem_spec {
    problem_family family = problem_family::zdt1;
    std::size_t m = 2;
    std::size_t n = 30;
    encoding_kind encoding = encoding_kind::real;
    std::uint64_t instance_seed = 1; // MOKP / MOTSP only
};

/// Spec with the standard decision dimension for the family: 30 (ZDT1-3),
/// 10 (ZDT4), m + 4 (DTLZ), 250 items (MOKP), 60 cities (MOTSP).
problem_spec make_spec(problem_family family, std::size_t m, std::uint64_t instance_seed = 1);

/// Per-objective lower and upper bounds.
struct objective_bounds {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct mokp_instance {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> profits; // m x n
    std::vector<std::vector<int>> weights; // m x n
    std::vector<long> capacities;          // m

    bool operator==(const mokp_instance &) const = default;
};

struct motsp_instance {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> costs; // m row-major n x n matrices

    double cost(std::size_t objective, std::size_t a, std::size_t b) const
    {
        return costs[objective][a * n + b];
    }

    bool operator==(const motsp_instance &) const = default;
};

/// Profits and weights uniform integers in [10, 100]; capacity is half the
/// total weight per knapsack (rounded down).
mokp_instance generate_mokp(std::size_t m, std::uint64_t seed, std::size_t items = 250);

/// Costs uniform in [0, 1], independent per objective, symmetric with a zero
/// diagonal.
motsp_instance generate_motsp(std::size_t m, std::uint64_t seed, std::size_t cities = 60);

/// Greedy repair: while any capacity is exceeded, drop the selected item with
/// the lowest max-over-knapsacks profit/weight ratio.
bit_string repair_knapsack(const mokp_instance &inst, bit_string bits);

/// Negated per-knapsack profit of the repaired selection.
objective_vector evaluate_mokp(const mokp_instance &inst, const bit_string &bits);

/// Closed-tour length under each cost matrix.
objective_vector evaluate_motsp(const motsp_instance &inst, const permutation &tour);

objective_vector evaluate_zdt(problem_family family, std::span<const double> x);
objective_vector evaluate_dtlz(problem_family family, std::size_t m, std::span<const double> x);

/// True Pareto-front extent for families with an analytic front; nullopt for
/// MOKP and MOTSP, whose fronts must be approximated from pooled results.
std::optional<objective_bounds> pf_bounds(const problem_spec &spec);

/// A benchmark problem bound to any instance data it needs. Immutable after
/// construction and safe to share between threads.
class problem
{
public:
    virtual ~problem() = default;

    const problem_spec &spec() const
    {
        return m_spec;
    }
    std::size_t num_objectives() const
    {
        return m_spec.m;
    }

    /// Throws encoding_error when x does not match the problem's encoding.
    virtual objective_vector evaluate(const encoding &x) const = 0;

    /// Uniformly random valid (and repaired) decision vector.
    virtual encoding random_solution(rng &r) const = 0;

    /// Bring x into the feasible set. No-op except for MOKP.
    virtual void repair(encoding &) const {}

    /// Box bounds for real encodings; empty otherwise.
    virtual const std::vector<double> &lower() const;
    virtual const std::vector<double> &upper() const;

protected:
    explicit problem(problem_spec spec) : m_spec(spec) {}

private:
    problem_spec m_spec;
};

using instance_data = std::variant<std::monostate, mokp_instance, motsp_instance>;

/// Build a problem. MOKP/MOTSP use `instance` when given, otherwise generate
/// one from spec.instance_seed.
std::shared_ptr<const problem> make_problem(const problem_spec &spec, const instance_data &instance = {});

/// Instance text format: "family/m/n/seed" header lines followed by the data
/// blocks, one matrix row per line. Reals use shortest round-trip notation.
void write_instance(std::ostream &out, const mokp_instance &inst);
void write_instance(std::ostream &out, const motsp_instance &inst);
instance_data read_instance(std::istream &in);

} // namespace moead

#endif
