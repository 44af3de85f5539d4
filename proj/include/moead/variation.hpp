#ifndef MOEAD_VARIATION_HPP
#define MOEAD_VARIATION_HPP

#include <span>

#include <moead/core_types.hpp>
#include <moead/rng.hpp>

namespace moead
{

struct real_operator_params {
    double crossover_rate = 1.0;   // p_c
    double crossover_eta = 20.0;   // eta_c
    double exchange_rate = 0.0;    // p_e, per-variable parent swap
    double mutation_rate = -1.0;   // p_m; negative means 1/n
    double mutation_eta = 20.0;    // eta_m
};

struct binary_operator_params {
    double crossover_rate = 1.0;
    double mutation_rate = -1.0; // per bit; negative means 2/n
};

struct permutation_operator_params {
    double crossover_rate = 1.0;
    double mutation_rate = 0.1; // probability of one inversion
};

struct operator_params {
    real_operator_params real;
    binary_operator_params binary;
    permutation_operator_params perm;

    /// Throws parameter_error when a rate is outside [0, 1] or an eta is not positive.
    void validate() const;
};

/// Simulated binary crossover producing a single child.
///
/// With probability p_c every variable is recombined as
/// mid +/- beta * (a - b) / 2 with a random sign and beta drawn from the SBX
/// spread distribution; otherwise the child is a copy of `a`. The child is
/// clipped to [lower, upper].
real_vector sbx_crossover(std::span<const double> a, std::span<const double> b, std::span<const double> lower,
                          std::span<const double> upper, const real_operator_params &params, rng &r);

/// Polynomial mutation; each variable mutates independently with p_m.
real_vector polynomial_mutation(std::span<const double> x, std::span<const double> lower,
                                std::span<const double> upper, const real_operator_params &params, rng &r);

/// Uniform crossover followed by independent bit flips.
bit_string uniform_crossover_bitflip(const bit_string &a, const bit_string &b, const binary_operator_params &params,
                                     rng &r);

/// Order crossover (random segment of `a`, remaining cities in `b`'s order)
/// followed, with the mutation rate, by one random segment inversion.
permutation order_crossover_inversion(const permutation &a, const permutation &b,
                                      const permutation_operator_params &params, rng &r);

/// Reverse tour[first..last] in place (inclusive bounds).
void invert_segment(permutation &tour, std::size_t first, std::size_t last);

bool is_permutation_of_range(const permutation &p);

} // namespace moead

#endif
