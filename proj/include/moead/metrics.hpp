#ifndef MOEAD_METRICS_HPP
#define MOEAD_METRICS_HPP

#include <span>
#include <string>
#include <vector>

#include <moead/core_types.hpp>
#include <moead/problems.hpp>

namespace moead
{

inline constexpr double default_hv_reference = 1.1;

/// (f_i - lower_i) / (upper_i - lower_i) for every vector. Throws config_error
/// when some upper_i <= lower_i.
std::vector<objective_vector> normalize(const std::vector<objective_vector> &points, const objective_bounds &bounds);

/// Hypervolume dominated by `points` and bounded by `reference`. Points that
/// do not strictly dominate the reference contribute nothing. Exact: sweep for
/// m = 2, recursive slicing over the last objective for m >= 3.
double hypervolume(const std::vector<objective_vector> &points, std::span<const double> reference);

/// Normalize with `bounds`, then hypervolume with every reference entry equal
/// to `reference_value`.
double normalized_hypervolume(const std::vector<objective_vector> &points, const objective_bounds &bounds,
                              double reference_value = default_hv_reference);

/// Per-objective extent of the non-dominated part of the pooled fronts.
/// Throws config_error when the pool is empty.
objective_bounds pooled_pf_bounds(const std::vector<std::vector<objective_vector>> &fronts);

/// Largest Euclidean distance between neighbouring points of a bi-objective
/// front sorted by the first objective (0 for fewer than two points).
double max_consecutive_gap(std::vector<objective_vector> front);

enum class comparison { better, worse, similar };

std::string to_string(comparison c);
/// "+", "-" or "=".
std::string mark(comparison c);

/// Two-sided Wilcoxon rank-sum test of sample a against b at level alpha
/// (normal approximation with tie correction). When significant the
/// direction follows the medians, treating larger values as better.
comparison wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha = 0.05);

/// Two-sided p-value of the rank-sum statistic under the normal approximation.
double rank_sum_p_value(std::span<const double> a, std::span<const double> b);

double mean(std::span<const double> v);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stddev(std::span<const double> v);
double median(std::vector<double> v);

} // namespace moead

#endif
