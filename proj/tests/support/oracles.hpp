#ifndef MOEAD_TESTS_ORACLES_HPP
#define MOEAD_TESTS_ORACLES_HPP

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{

using point = std::vector<double>;

// Inclusion-exclusion over all non-empty subsets. Exponential, fine for |P| <= 12.
inline double hv_inclusion_exclusion(const std::vector<point> &pts, const point &ref)
{
    const std::size_t n = pts.size();
    const std::size_t m = ref.size();
    double total = 0.0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        point corner(m, -INFINITY);
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                ++bits;
                for (std::size_t k = 0; k < m; ++k) {
                    corner[k] = std::max(corner[k], pts[i][k]);
                }
            }
        }
        double vol = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            vol *= std::max(0.0, ref[k] - corner[k]);
        }
        total += (bits % 2 == 1 ? vol : -vol);
    }
    return total;
}

struct mc_estimate {
    double value;
    double std_error;
};

// Uniform sampling of the box [lower, ref]; a sample counts when some point
// weakly dominates it.
inline mc_estimate hv_monte_carlo(const std::vector<point> &pts, const point &ref, const point &lower,
                                  std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t m = ref.size();
    double box = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        box *= ref[k] - lower[k];
    }
    std::size_t hits = 0;
    point s(m);
    for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t k = 0; k < m; ++k) {
            s[k] = lower[k] + (ref[k] - lower[k]) * u(gen);
        }
        for (const auto &p : pts) {
            bool dom = true;
            for (std::size_t k = 0; k < m && dom; ++k) {
                dom = p[k] <= s[k];
            }
            if (dom) {
                ++hits;
                break;
            }
        }
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {frac * box, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

// Exact two-sided p-value of the rank-sum statistic for tie-free samples by
// enumerating every assignment of ranks to the first group.
inline double exact_rank_sum_p(const std::vector<double> &a, const std::vector<double> &b)
{
    std::vector<std::pair<double, int>> pooled;
    for (double v : a) {
        pooled.emplace_back(v, 0);
    }
    for (double v : b) {
        pooled.emplace_back(v, 1);
    }
    std::sort(pooled.begin(), pooled.end());
    const std::size_t n = pooled.size();
    const std::size_t na = a.size();
    double observed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pooled[i].second == 0) {
            observed += static_cast<double>(i + 1);
        }
    }
    const double centre = static_cast<double>(na) * static_cast<double>(n + 1) / 2.0;
    const double dev = std::fabs(observed - centre);
    std::size_t extreme = 0;
    std::size_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != na) {
            continue;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                s += static_cast<double>(i + 1);
            }
        }
        ++total;
        if (std::fabs(s - centre) >= dev - 1e-9) {
            ++extreme;
        }
    }
    return static_cast<double>(extreme) / static_cast<double>(total);
}

// Every composition of h into m non-negative parts, lexicographic.
inline std::vector<std::vector<int>> compositions(int m, int h)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto &&self, int pos, int left) -> void {
        if (pos == m - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, h);
    return out;
}

inline double naive_lp(const point &f, const point &w, const point &z, double p)
{
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        s += std::pow(w[i] * std::fabs(f[i] - z[i]), p);
    }
    return std::pow(s, 1.0 / p);
}

inline double naive_tch(const point &f, const point &w, const point &z)
{
    double best = -INFINITY;
    for (std::size_t i = 0; i < f.size(); ++i) {
        best = std::max(best, w[i] * (f[i] - z[i]));
    }
    return best;
}

inline double naive_h(const point &w)
{
    double prod = 1.0;
    for (double x : w) {
        prod *= x;
    }
    return std::pow(prod, -1.0 / static_cast<double>(w.size()));
}

inline double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace oracle

#endif
