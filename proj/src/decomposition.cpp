#include <moead/decomposition.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

#include <moead/errors.hpp>

namespace moead
{

std::string to_string(boundary_class c)
{
    switch (c) {
        case boundary_class::interior:
            return "interior";
        case boundary_class::boundary:
            return "boundary";
        default:
            return "extreme_boundary";
    }
}

std::size_t lattice_size(std::size_t m, std::size_t divisions)
{
    if (m < 2) {
        throw parameter_error("simplex lattice needs m >= 2");
    }
    // C(H + m - 1, m - 1), built as a running product that stays integral.
    const std::uint64_t n = static_cast<std::uint64_t>(divisions) + m - 1;
    const std::uint64_t k = m - 1;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(result, n - k + i, &next)) {
            throw parameter_error("simplex lattice size overflows for m=" + std::to_string(m)
                                  + ", H=" + std::to_string(divisions));
        }
        result = next / i;
    }
    if (result > std::numeric_limits<std::size_t>::max()) {
        throw parameter_error("simplex lattice size overflows");
    }
    return static_cast<std::size_t>(result);
}

namespace
{

void enumerate_lattice(std::size_t m, std::size_t divisions, std::size_t remaining, std::vector<std::size_t> &k,
                       std::vector<weight_vector> &out)
{
    const std::size_t pos = k.size();
    if (pos + 1 == m) {
        k.push_back(remaining);
        weight_vector w(m);
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = static_cast<double>(k[i]) / static_cast<double>(divisions);
        }
        out.push_back(std::move(w));
        k.pop_back();
        return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
        k.push_back(v);
        enumerate_lattice(m, divisions, remaining - v, k, out);
        k.pop_back();
    }
}

double squared_distance(const weight_vector &a, const weight_vector &b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

std::vector<std::size_t> nearest(const std::vector<weight_vector> &weights, std::size_t j, std::size_t count)
{
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        dist.emplace_back(squared_distance(weights[j], weights[k]), k);
    }
    // Pair ordering gives distance first, then the lower index.
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(count), dist.end());
    std::vector<std::size_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = dist[i].second;
    }
    // Self sits at distance zero but a duplicate weight with a lower index
    // could outrank it; B^j must contain j.
    if (std::find(out.begin(), out.end(), j) == out.end()) {
        out.back() = j;
    }
    return out;
}

} // namespace

std::vector<weight_vector> simplex_lattice_weights(std::size_t m, std::size_t divisions)
{
    if (divisions < 1) {
        throw parameter_error("simplex lattice needs H >= 1");
    }
    const std::size_t n = lattice_size(m, divisions);
    std::vector<weight_vector> out;
    out.reserve(n);
    std::vector<std::size_t> k;
    k.reserve(m);
    enumerate_lattice(m, divisions, divisions, k, out);
    return out;
}

std::optional<std::size_t> lattice_divisions_for(std::size_t m, std::size_t n)
{
    for (std::size_t h = 1;; ++h) {
        const std::size_t size = lattice_size(m, h);
        if (size == n) {
            return h;
        }
        if (size > n) {
            return std::nullopt;
        }
    }
}

std::pair<std::size_t, std::size_t> nearest_lattice_sizes(std::size_t m, std::size_t n)
{
    std::size_t below = 0;
    for (std::size_t h = 1;; ++h) {
        const std::size_t size = lattice_size(m, h);
        if (size > n) {
            return {below, size};
        }
        if (size < n) {
            below = size;
        }
    }
}

neighborhood_tables build_neighborhoods(const std::vector<weight_vector> &weights, std::size_t t_mating,
                                        std::size_t t_replacement)
{
    if (t_mating < 1 || t_replacement < 1) {
        throw parameter_error("neighborhood sizes must be at least 1");
    }
    if (t_mating > weights.size() || t_replacement > weights.size()) {
        throw parameter_error("neighborhood size exceeds the number of subproblems");
    }
    neighborhood_tables tables;
    tables.mating.reserve(weights.size());
    tables.replacement.reserve(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        tables.mating.push_back(nearest(weights, j, t_mating));
        tables.replacement.push_back(nearest(weights, j, t_replacement));
    }
    return tables;
}

boundary_class classify_boundary(const weight_vector &w, double minimal_entry)
{
    constexpr double tol = 1e-12;
    const auto minimal = static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [&](double wi) { return std::fabs(wi - minimal_entry) <= tol; }));
    if (minimal == 0) {
        return boundary_class::interior;
    }
    if (minimal + 1 == w.size()) {
        return boundary_class::extreme_boundary;
    }
    return boundary_class::boundary;
}

double minimal_entry(const std::vector<weight_vector> &weights)
{
    double lo = std::numeric_limits<double>::infinity();
    for (const auto &w : weights) {
        for (double wi : w) {
            lo = std::min(lo, wi);
        }
    }
    return lo;
}

std::vector<subproblem> make_subproblems(const std::vector<weight_vector> &weights, std::size_t t_mating,
                                         std::size_t t_replacement, double minimal_value)
{
    if (weights.empty()) {
        throw config_error("no weight vectors");
    }
    const auto tables = build_neighborhoods(weights, t_mating, t_replacement);
    std::vector<subproblem> out(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        subproblem &sp = out[j];
        sp.index = j;
        sp.weight_raw = weights[j];
        sp.weight_eff = clamp_weight(weights[j]);
        sp.lambda = direction_vector(sp.weight_eff);
        sp.h = h_weight(sp.weight_eff);
        sp.mating = tables.mating[j];
        sp.replacement = tables.replacement[j];
        sp.boundary = classify_boundary(weights[j], minimal_value);
    }
    return out;
}

std::vector<subproblem> augment_boundary_neighborhoods(std::vector<subproblem> subproblems)
{
    std::vector<std::size_t> interior;
    for (const auto &sp : subproblems) {
        if (sp.boundary == boundary_class::interior) {
            interior.push_back(sp.index);
        }
    }
    if (interior.empty()) {
        throw config_error("boundary neighborhood augmentation needs at least one interior subproblem");
    }
    for (const auto &b : subproblems) {
        if (b.boundary == boundary_class::interior) {
            continue;
        }
        std::size_t best = interior.front();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t q : interior) {
            const double d = squared_distance(b.weight_raw, subproblems[q].weight_raw);
            if (d < best_d) {
                best_d = d;
                best = q;
            }
        }
        auto &nb = subproblems[best].replacement;
        if (std::find(nb.begin(), nb.end(), b.index) == nb.end()) {
            nb.push_back(b.index);
        }
    }
    return subproblems;
}

std::vector<weight_vector> read_weights(std::istream &in)
{
    std::vector<weight_vector> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') {
            continue;
        }
        std::istringstream row(line);
        weight_vector w;
        double v = 0.0;
        while (row >> v) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw config_error("weight file line " + std::to_string(line_no) + ": negative or non-finite entry");
            }
            w.push_back(v);
        }
        if (!row.eof()) {
            throw config_error("weight file line " + std::to_string(line_no) + ": unparsable entry");
        }
        if (!out.empty() && out.front().size() != w.size()) {
            throw dimension_error("weight file line " + std::to_string(line_no) + ": inconsistent dimension");
        }
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        if (w.size() < 2 || !(total > 0.0)) {
            throw config_error("weight file line " + std::to_string(line_no) + ": need m >= 2 and a positive sum");
        }
        for (double &wi : w) {
            wi /= total;
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace moead
