#ifndef MOEAD_ANALYSIS_HPP
#define MOEAD_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <moead/core_types.hpp>
#include <moead/decomposition.hpp>
#include <moead/rng.hpp>
#include <moead/scalarization.hpp>

namespace moead
{

/// Objective vector on the sampling shell together with the subproblem
/// whose preference region contains it.
struct region_sample {
    objective_vector f;
    std::size_t label = 0;
};

/// `count` points in the non-negative orthant with uniformly distributed
/// directions and L2 norm uniform in [r_min, r_max].
std::vector<objective_vector> sample_shell(std::size_t m, double r_min, double r_max, std::size_t count, rng &r);

/// Label every sample with its matched subproblem (z* = origin unless given).
std::vector<region_sample> region_map(const std::vector<objective_vector> &samples,
                                      const std::vector<subproblem> &subproblems, const scalarizer &scal);
std::vector<region_sample> region_map(const std::vector<objective_vector> &samples,
                                      const std::vector<subproblem> &subproblems, const scalarizer &scal,
                                      std::span<const double> z);

/// Weight minimizing the Lp scalarization of a fixed positive f over the open
/// simplex: w_i proportional to f_i^(-p/(p-1)); p = inf gives w_i ~ 1/f_i.
/// Throws parameter_error for p <= 1 and domain_error for non-positive f.
weight_vector continuous_minimizer_lp(std::span<const double> f, double p);

/// Radii at which direction vectors are probed: 1, 1.5 and 2.
std::span<const double> default_radii();

/// Fraction of interior subproblems j for which c * lambda^j, scaled to each
/// radius in `radii`, is matched back to j (z* = origin).
double passthrough_fraction(const std::vector<subproblem> &subproblems, const scalarizer &scal,
                            std::span<const double> radii = default_radii());

/// Whether subproblem j's own direction vector lies in its preference region
/// at every radius in `radii`.
bool passes_through(const std::vector<subproblem> &subproblems, std::size_t j, const scalarizer &scal,
                    std::span<const double> radii = default_radii());

/// Subproblems over the (m, H) simplex lattice with singleton neighborhoods,
/// as used for preference-region maps.
std::vector<subproblem> lattice_subproblems(std::size_t m, std::size_t divisions);

/// Interior-subproblem indices.
std::vector<std::size_t> interior_indices(const std::vector<subproblem> &subproblems);

/// TSV with header f_1..f_m, label.
void write_region_tsv(std::ostream &out, const std::vector<region_sample> &samples);

struct region_check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Numerical checks of the three preference-region results: L1 labels only
/// extreme-boundary subproblems; Lp (1 < p < inf) direction vectors mostly
/// miss their regions while L-inf ones hit; GLp direction vectors always hit.
std::vector<region_check> verify_preference_regions(std::size_t shell_samples = 100000, std::uint64_t seed = 1);

} // namespace moead

#endif
