#include <moead/variation.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <moead/errors.hpp>

namespace moead
{

namespace
{

void check_rate(double v, const char *name)
{
    if (!(v >= 0.0 && v <= 1.0)) {
        throw parameter_error(std::string(name) + " must lie in [0, 1]");
    }
}

void check_bounds(std::span<const double> x, std::span<const double> lower, std::span<const double> upper,
                  const char *what)
{
    check_same_dimension(x.size(), lower.size(), what);
    check_same_dimension(x.size(), upper.size(), what);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower[i] && x[i] <= upper[i])) {
            throw encoding_error(std::string(what) + ": variable " + std::to_string(i) + " outside its bounds");
        }
    }
}

double clip(double v, double lo, double hi)
{
    return std::min(std::max(v, lo), hi);
}

} // namespace

void operator_params::validate() const
{
    check_rate(real.crossover_rate, "SBX crossover rate");
    check_rate(real.exchange_rate, "SBX exchange rate");
    if (real.mutation_rate >= 0.0) {
        check_rate(real.mutation_rate, "polynomial mutation rate");
    }
    if (!(real.crossover_eta > 0.0) || !(real.mutation_eta > 0.0)) {
        throw parameter_error("distribution indices must be positive");
    }
    check_rate(binary.crossover_rate, "binary crossover rate");
    if (binary.mutation_rate >= 0.0) {
        check_rate(binary.mutation_rate, "bit-flip rate");
    }
    check_rate(perm.crossover_rate, "order crossover rate");
    check_rate(perm.mutation_rate, "inversion rate");
}

real_vector sbx_crossover(std::span<const double> a, std::span<const double> b, std::span<const double> lower,
                          std::span<const double> upper, const real_operator_params &params, rng &r)
{
    check_same_dimension(a.size(), b.size(), "sbx_crossover");
    check_bounds(a, lower, upper, "sbx_crossover");
    check_bounds(b, lower, upper, "sbx_crossover");
    real_vector child(a.begin(), a.end());
    if (!r.bernoulli(params.crossover_rate)) {
        return child;
    }
    const double exponent = 1.0 / (params.crossover_eta + 1.0);
    for (std::size_t i = 0; i < child.size(); ++i) {
        const double mu = r.uniform();
        double beta = mu <= 0.5 ? std::pow(2.0 * mu, exponent) : std::pow(2.0 - 2.0 * mu, -exponent);
        if (r.bernoulli(0.5)) {
            beta = -beta;
        }
        if (params.exchange_rate > 0.0 && r.bernoulli(params.exchange_rate)) {
            beta = beta < 0.0 ? -1.0 : 1.0;
        }
        const double v = 0.5 * (a[i] + b[i]) + 0.5 * beta * (a[i] - b[i]);
        child[i] = clip(v, lower[i], upper[i]);
    }
    return child;
}

real_vector polynomial_mutation(std::span<const double> x, std::span<const double> lower,
                                std::span<const double> upper, const real_operator_params &params, rng &r)
{
    check_bounds(x, lower, upper, "polynomial_mutation");
    real_vector y(x.begin(), x.end());
    const double rate = params.mutation_rate < 0.0 ? 1.0 / static_cast<double>(y.size()) : params.mutation_rate;
    const double eta = params.mutation_eta;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!r.bernoulli(rate)) {
            continue;
        }
        const double lo = lower[i];
        const double hi = upper[i];
        const double range = hi - lo;
        if (!(range > 0.0)) {
            continue;
        }
        const double mu = r.uniform();
        double delta = 0.0;
        if (mu <= 0.5) {
            const double t = 1.0 - (y[i] - lo) / range;
            delta = std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(t, eta + 1.0), 1.0 / (eta + 1.0)) - 1.0;
        } else {
            const double t = 1.0 - (hi - y[i]) / range;
            delta = 1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(t, eta + 1.0), 1.0 / (eta + 1.0));
        }
        y[i] = clip(y[i] + delta * range, lo, hi);
    }
    return y;
}

bit_string uniform_crossover_bitflip(const bit_string &a, const bit_string &b, const binary_operator_params &params,
                                     rng &r)
{
    if (a.size() != b.size()) {
        throw encoding_error("uniform_crossover_bitflip: parents differ in length");
    }
    bit_string child = a;
    if (r.bernoulli(params.crossover_rate)) {
        for (std::size_t i = 0; i < child.size(); ++i) {
            if (r.bernoulli(0.5)) {
                child[i] = b[i];
            }
        }
    }
    const double rate = params.mutation_rate < 0.0 ? 2.0 / static_cast<double>(child.size()) : params.mutation_rate;
    for (auto &bit : child) {
        if (r.bernoulli(rate)) {
            bit = bit ? 0 : 1;
        }
    }
    return child;
}

bool is_permutation_of_range(const permutation &p)
{
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

void invert_segment(permutation &tour, std::size_t first, std::size_t last)
{
    if (first > last || last >= tour.size()) {
        throw parameter_error("invert_segment: invalid segment");
    }
    std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(first), tour.begin() + static_cast<std::ptrdiff_t>(last) + 1);
}

permutation order_crossover_inversion(const permutation &a, const permutation &b,
                                      const permutation_operator_params &params, rng &r)
{
    if (a.size() != b.size() || !is_permutation_of_range(a) || !is_permutation_of_range(b)) {
        throw encoding_error("order_crossover_inversion: parents must be permutations of 0..n-1");
    }
    const std::size_t n = a.size();
    permutation child = a;
    if (n < 2) {
        return child;
    }
    if (r.bernoulli(params.crossover_rate)) {
        std::size_t first = r.index(n);
        std::size_t last = r.index(n);
        if (first > last) {
            std::swap(first, last);
        }
        std::vector<char> taken(n, 0);
        for (std::size_t i = first; i <= last; ++i) {
            taken[static_cast<std::size_t>(a[i])] = 1;
        }
        std::size_t pos = 0;
        for (int city : b) {
            if (taken[static_cast<std::size_t>(city)]) {
                continue;
            }
            if (pos == first) {
                pos = last + 1;
            }
            child[pos++] = city;
        }
    }
    if (r.bernoulli(params.mutation_rate)) {
        std::size_t first = r.index(n);
        std::size_t last = r.index(n);
        if (first > last) {
            std::swap(first, last);
        }
        invert_segment(child, first, last);
    }
    return child;
}

} // namespace moead
