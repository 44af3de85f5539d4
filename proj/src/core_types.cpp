#include <moead/core_types.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <moead/errors.hpp>
#include <moead/rng.hpp>

namespace moead
{

double rng::normal()
{
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

encoding_kind kind_of(const encoding &x)
{
    switch (x.index()) {
        case 0:
            return encoding_kind::real;
        case 1:
            return encoding_kind::binary;
        default:
            return encoding_kind::permutation;
    }
}

void check_same_dimension(std::size_t a, std::size_t b, const char *what)
{
    if (a != b) {
        throw dimension_error(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs "
                              + std::to_string(b) + ")");
    }
}

reference_point::reference_point(std::size_t m, reference_mode mode, double epsilon)
    : reference_point(std::vector<double>(m, std::numeric_limits<double>::infinity()), mode, epsilon)
{
}

reference_point::reference_point(std::vector<double> ideal, reference_mode mode, double epsilon)
    : m_ideal(std::move(ideal)), m_epsilon(m_ideal.size(), epsilon), m_mode(mode)
{
    if (mode == reference_mode::utopian && !(epsilon > 0.0)) {
        throw parameter_error("utopian reference point needs a positive epsilon");
    }
    refresh();
}

void reference_point::update(std::span<const double> f)
{
    check_same_dimension(m_ideal.size(), f.size(), "reference_point::update");
    bool changed = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < m_ideal[i]) {
            m_ideal[i] = f[i];
            changed = true;
        }
    }
    if (changed) {
        refresh();
    }
}

void reference_point::refresh()
{
    m_values = m_ideal;
    if (m_mode == reference_mode::utopian) {
        for (std::size_t i = 0; i < m_values.size(); ++i) {
            m_values[i] -= m_epsilon[i];
        }
    }
}

reference_point update_ideal(reference_point z, std::span<const double> f)
{
    z.update(f);
    return z;
}

bool dominates(std::span<const double> u, std::span<const double> v)
{
    check_same_dimension(u.size(), v.size(), "dominates");
    bool strictly_better = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) {
            return false;
        }
        if (u[i] < v[i]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

std::vector<objective_vector> nondominated_filter(const std::vector<objective_vector> &set)
{
    std::vector<objective_vector> out;
    if (set.empty()) {
        return out;
    }
    const std::size_t m = set.front().size();
    for (const auto &v : set) {
        check_same_dimension(m, v.size(), "nondominated_filter");
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < set.size() && keep; ++j) {
            if (j == i) {
                continue;
            }
            if (dominates(set[j], set[i])) {
                keep = false;
            } else if (j < i && set[j] == set[i]) {
                keep = false; // an earlier duplicate represents this vector
            }
        }
        if (keep) {
            out.push_back(set[i]);
        }
    }
    return out;
}

} // namespace moead
