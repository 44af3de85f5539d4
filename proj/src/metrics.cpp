#include <moead/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <moead/errors.hpp>

namespace moead
{

namespace
{

using point_set = std::vector<objective_vector>;

bool weakly_dominates(const objective_vector &u, const objective_vector &v, std::size_t m)
{
    for (std::size_t i = 0; i < m; ++i) {
        if (u[i] > v[i]) {
            return false;
        }
    }
    return true;
}

// Drop points weakly dominated by another point in the first m coordinates;
// of several identical points the first survives.
point_set nondominated_weak(const point_set &pts, std::size_t m)
{
    point_set out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < pts.size() && keep; ++j) {
            if (i == j || !weakly_dominates(pts[j], pts[i], m)) {
                continue;
            }
            const bool equal = weakly_dominates(pts[i], pts[j], m);
            if (!equal || j < i) {
                keep = false;
            }
        }
        if (keep) {
            out.push_back(pts[i]);
        }
    }
    return out;
}

double hv2d(point_set pts, std::span<const double> ref)
{
    std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    double area = 0.0;
    double ceiling = ref[1];
    for (const auto &p : pts) {
        if (p[1] < ceiling) {
            area += (ref[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    return area;
}

// Slices along the third objective; each slab is a 2-D staircase kept in a
// map from f1 to f2 that only ever holds mutually non-dominated points.
double hv3d(point_set pts, std::span<const double> ref)
{
    std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) { return a[2] < b[2]; });
    std::map<double, double> front;
    double area = 0.0;
    double volume = 0.0;
    auto area_of = [&] {
        double a = 0.0;
        double ceiling = ref[1];
        for (const auto &[x, y] : front) {
            if (y < ceiling) {
                a += (ref[0] - x) * (ceiling - y);
                ceiling = y;
            }
        }
        return a;
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double x = pts[i][0];
        const double y = pts[i][1];
        auto it = front.upper_bound(x);
        bool dominated = false;
        if (it != front.begin()) {
            dominated = std::prev(it)->second <= y;
        }
        if (!dominated) {
            // Remove points with x' >= x and y' >= y.
            auto jt = front.lower_bound(x);
            while (jt != front.end() && jt->second >= y) {
                jt = front.erase(jt);
            }
            front[x] = y;
            area = area_of();
        }
        const double next_z = i + 1 < pts.size() ? pts[i + 1][2] : ref[2];
        volume += area * (next_z - pts[i][2]);
    }
    return volume;
}

double hv_recursive(point_set pts, std::span<const double> ref, std::size_t m)
{
    if (pts.empty()) {
        return 0.0;
    }
    if (m == 1) {
        double lo = ref[0];
        for (const auto &p : pts) {
            lo = std::min(lo, p[0]);
        }
        return ref[0] - lo;
    }
    if (m == 2) {
        return hv2d(std::move(pts), ref);
    }
    if (m == 3) {
        return hv3d(std::move(pts), ref);
    }
    // Exclusive contributions in order of decreasing last objective: every
    // later point has a smaller or equal last coordinate, so the limit set
    // is flat in that coordinate and the problem drops one dimension.
    const std::size_t last = m - 1;
    std::sort(pts.begin(), pts.end(), [last](const auto &a, const auto &b) { return a[last] > b[last]; });
    double total = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        double box = 1.0;
        for (std::size_t i = 0; i < last; ++i) {
            box *= ref[i] - pts[k][i];
        }
        point_set limit;
        limit.reserve(pts.size() - k - 1);
        for (std::size_t j = k + 1; j < pts.size(); ++j) {
            objective_vector q(last);
            for (std::size_t i = 0; i < last; ++i) {
                q[i] = std::max(pts[k][i], pts[j][i]);
            }
            limit.push_back(std::move(q));
        }
        const double covered = hv_recursive(nondominated_weak(limit, last), ref, last);
        total += (ref[last] - pts[k][last]) * (box - covered);
    }
    return total;
}

} // namespace

std::vector<objective_vector> normalize(const std::vector<objective_vector> &points, const objective_bounds &bounds)
{
    check_same_dimension(bounds.lower.size(), bounds.upper.size(), "normalize");
    for (std::size_t i = 0; i < bounds.lower.size(); ++i) {
        if (!(bounds.upper[i] > bounds.lower[i])) {
            throw config_error("normalize: degenerate bounds on objective " + std::to_string(i));
        }
    }
    std::vector<objective_vector> out;
    out.reserve(points.size());
    for (const auto &p : points) {
        check_same_dimension(p.size(), bounds.lower.size(), "normalize");
        objective_vector q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] = (p[i] - bounds.lower[i]) / (bounds.upper[i] - bounds.lower[i]);
        }
        out.push_back(std::move(q));
    }
    return out;
}

double hypervolume(const std::vector<objective_vector> &points, std::span<const double> reference)
{
    const std::size_t m = reference.size();
    point_set inside;
    for (const auto &p : points) {
        check_same_dimension(p.size(), m, "hypervolume");
        bool strictly = true;
        for (std::size_t i = 0; i < m && strictly; ++i) {
            strictly = p[i] < reference[i];
        }
        if (strictly) {
            inside.push_back(p);
        }
    }
    return hv_recursive(nondominated_weak(inside, m), reference, m);
}

double normalized_hypervolume(const std::vector<objective_vector> &points, const objective_bounds &bounds,
                              double reference_value)
{
    const std::vector<double> ref(bounds.lower.size(), reference_value);
    return hypervolume(normalize(points, bounds), ref);
}

objective_bounds pooled_pf_bounds(const std::vector<std::vector<objective_vector>> &fronts)
{
    std::vector<objective_vector> pool;
    for (const auto &front : fronts) {
        pool.insert(pool.end(), front.begin(), front.end());
    }
    if (pool.empty()) {
        throw config_error("pooled_pf_bounds: empty pool");
    }
    const auto nd = nondominated_filter(pool);
    const std::size_t m = nd.front().size();
    objective_bounds b{nd.front(), nd.front()};
    for (const auto &p : nd) {
        for (std::size_t i = 0; i < m; ++i) {
            b.lower[i] = std::min(b.lower[i], p[i]);
            b.upper[i] = std::max(b.upper[i], p[i]);
        }
    }
    return b;
}

double max_consecutive_gap(std::vector<objective_vector> front)
{
    if (front.size() < 2) {
        return 0.0;
    }
    std::sort(front.begin(), front.end());
    double gap = 0.0;
    for (std::size_t i = 1; i < front.size(); ++i) {
        double d2 = 0.0;
        for (std::size_t k = 0; k < front[i].size(); ++k) {
            const double d = front[i][k] - front[i - 1][k];
            d2 += d * d;
        }
        gap = std::max(gap, std::sqrt(d2));
    }
    return gap;
}

std::string to_string(comparison c)
{
    switch (c) {
        case comparison::better:
            return "better";
        case comparison::worse:
            return "worse";
        default:
            return "similar";
    }
}

std::string mark(comparison c)
{
    switch (c) {
        case comparison::better:
            return "+";
        case comparison::worse:
            return "-";
        default:
            return "=";
    }
}

double rank_sum_p_value(std::span<const double> a, std::span<const double> b)
{
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t n = na + nb;
    std::vector<std::pair<double, int>> pooled;
    pooled.reserve(n);
    for (double v : a) {
        pooled.emplace_back(v, 0);
    }
    for (double v : b) {
        pooled.emplace_back(v, 1);
    }
    std::sort(pooled.begin(), pooled.end());
    double rank_a = 0.0;
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) {
            ++j;
        }
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
        const auto t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].second == 0) {
                rank_a += avg_rank;
            }
        }
        i = j;
    }
    const double dna = static_cast<double>(na);
    const double dnb = static_cast<double>(nb);
    const double dn = static_cast<double>(n);
    const double u = rank_a - dna * (dna + 1.0) / 2.0;
    const double mu = dna * dnb / 2.0;
    const double var = dna * dnb / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (!(var > 0.0)) {
        return 1.0;
    }
    const double z = (u - mu) / std::sqrt(var);
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

comparison wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha)
{
    if (a.size() < 5 || b.size() < 5) {
        throw parameter_error("wilcoxon_rank_sum needs at least 5 samples per group");
    }
    if (rank_sum_p_value(a, b) >= alpha) {
        return comparison::similar;
    }
    const double ma = median({a.begin(), a.end()});
    const double mb = median({b.begin(), b.end()});
    if (ma != mb) {
        return ma > mb ? comparison::better : comparison::worse;
    }
    return mean(a) > mean(b) ? comparison::better : comparison::worse;
}

double mean(std::span<const double> v)
{
    if (v.empty()) {
        return 0.0;
    }
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(std::span<const double> v)
{
    if (v.size() < 2) {
        return 0.0;
    }
    const double mu = mean(v);
    double s = 0.0;
    for (double x : v) {
        s += (x - mu) * (x - mu);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double median(std::vector<double> v)
{
    if (v.empty()) {
        return 0.0;
    }
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

} // namespace moead
