#ifndef MOEAD_SCALARIZATION_HPP
#define MOEAD_SCALARIZATION_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace moead
{

/// Simplex weight vector: non-negative entries summing to one.
using weight_vector = std::vector<double>;

inline constexpr double infinite_p = std::numeric_limits<double>::infinity();

/// Entries below this are lifted to it before any scalarization.
inline constexpr double weight_floor = 1e-6;

/// Lift entries below weight_floor to the floor, then renormalize to sum one.
weight_vector clamp_weight(std::span<const double> w);

/// Weighted Lp distance (sum_i (w_i |f_i - z_i|)^p)^(1/p) for 1 <= p < inf.
/// p = 1 is the weighted sum. Evaluated in a max-scaled form so that large p
/// neither overflows nor underflows.
double scalarize_lp(std::span<const double> f, std::span<const double> w, std::span<const double> z,
                    double p);

/// Tchebycheff: max_i w_i (f_i - z_i).
double scalarize_tch(std::span<const double> f, std::span<const double> w, std::span<const double> z);

/// Weight-only GLp correction (prod_i w_i)^(-1/m). Requires strictly positive entries.
double h_weight(std::span<const double> w);

/// GLp: the Lp value (Tchebycheff for p = inf) multiplied by h_weight(w).
double scalarize_glp(std::span<const double> f, std::span<const double> w, std::span<const double> z,
                     double p);

/// lambda_i = 1 / w_i. Requires strictly positive entries.
std::vector<double> direction_vector(std::span<const double> w);

enum class scalarizer_family { lp, glp };

/// Run-level choice of scalarization: family plus exponent (p = infinite_p for
/// the Tchebycheff limit).
struct scalarizer {
    scalarizer_family family = scalarizer_family::lp;
    double p = 1.0;

    scalarizer() = default;
    scalarizer(scalarizer_family fam, double exponent);

    /// Value for objective f on a subproblem with weight w and precomputed
    /// h = h_weight(w). h is ignored by the Lp family.
    double operator()(std::span<const double> f, std::span<const double> w, std::span<const double> z,
                      double h) const;

    std::string name() const;
};

/// Parse "1", "2.5", "inf"/"infinity" into an exponent.
double parse_exponent(const std::string &token);
std::string format_exponent(double p);

scalarizer_family parse_family(const std::string &token);
std::string to_string(scalarizer_family family);

} // namespace moead

#endif
