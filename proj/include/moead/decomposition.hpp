#ifndef MOEAD_DECOMPOSITION_HPP
#define MOEAD_DECOMPOSITION_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <moead/scalarization.hpp>

namespace moead
{

enum class boundary_class { interior, boundary, extreme_boundary };

std::string to_string(boundary_class c);

/// One MOEA/D subproblem. Indices are 0-based throughout the library.
struct subproblem {
    std::size_t index = 0;
    weight_vector weight_raw;         // lattice value, may contain zeros
    weight_vector weight_eff;         // clamp_weight(weight_raw)
    std::vector<double> lambda;       // direction vector of weight_eff
    double h = 1.0;                   // h_weight(weight_eff)
    std::vector<std::size_t> mating;      // B_m, nearest first, includes self
    std::vector<std::size_t> replacement; // B_r, nearest first, includes self
    boundary_class boundary = boundary_class::interior;
};

/// Number of simplex-lattice points C(H + m - 1, m - 1); throws parameter_error
/// on overflow.
std::size_t lattice_size(std::size_t m, std::size_t divisions);

/// All (k_1/H, ..., k_m/H) with non-negative integer k summing to H, in
/// lexicographic order of k.
std::vector<weight_vector> simplex_lattice_weights(std::size_t m, std::size_t divisions);

/// H with lattice_size(m, H) == n, if one exists.
std::optional<std::size_t> lattice_divisions_for(std::size_t m, std::size_t n);

/// Largest feasible lattice size below n and smallest above n.
std::pair<std::size_t, std::size_t> nearest_lattice_sizes(std::size_t m, std::size_t n);

struct neighborhood_tables {
    std::vector<std::vector<std::size_t>> mating;
    std::vector<std::vector<std::size_t>> replacement;
};

/// T nearest weights (Euclidean, ties toward the lower index) for each weight.
neighborhood_tables build_neighborhoods(const std::vector<weight_vector> &weights, std::size_t t_mating,
                                        std::size_t t_replacement);

/// Boundary class of a weight given the set-wide minimal entry value.
boundary_class classify_boundary(const weight_vector &w, double minimal_entry = 0.0);

/// Smallest entry over a whole weight set.
double minimal_entry(const std::vector<weight_vector> &weights);

/// Subproblem table with clamped weights, h values, neighborhoods and
/// boundary classes filled in. Boundary classes compare entries against
/// `minimal_value`: 0 for a simplex lattice, minimal_entry(weights) for an
/// arbitrary user-supplied set.
std::vector<subproblem> make_subproblems(const std::vector<weight_vector> &weights, std::size_t t_mating,
                                         std::size_t t_replacement, double minimal_value = 0.0);

/// Appends every boundary subproblem to the replacement neighborhood of its
/// nearest interior subproblem (raw-weight distance, ties toward the lower
/// index). Throws config_error if no interior subproblem exists.
std::vector<subproblem> augment_boundary_neighborhoods(std::vector<subproblem> subproblems);

/// One weight vector per line, whitespace-separated decimals.
std::vector<weight_vector> read_weights(std::istream &in);

} // namespace moead

#endif
