#include <moead/analysis.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include <moead/algorithm.hpp>
#include <moead/errors.hpp>

namespace moead
{

std::vector<objective_vector> sample_shell(std::size_t m, double r_min, double r_max, std::size_t count, rng &r)
{
    if (!(r_min > 0.0 && r_max > r_min)) {
        throw parameter_error("sample_shell needs 0 < r_min < r_max");
    }
    if (m < 2) {
        throw parameter_error("sample_shell needs m >= 2");
    }
    std::vector<objective_vector> out;
    out.reserve(count);
    while (out.size() < count) {
        // |N(0, I)| normalized is uniform on the positive part of the sphere.
        objective_vector f(m);
        double norm = 0.0;
        for (auto &fi : f) {
            fi = std::fabs(r.normal());
            norm += fi * fi;
        }
        norm = std::sqrt(norm);
        if (!(norm > 0.0)) {
            continue;
        }
        const double radius = r.uniform(r_min, r_max);
        for (auto &fi : f) {
            fi *= radius / norm;
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<region_sample> region_map(const std::vector<objective_vector> &samples,
                                      const std::vector<subproblem> &subproblems, const scalarizer &scal,
                                      std::span<const double> z)
{
    std::vector<region_sample> out;
    out.reserve(samples.size());
    for (const auto &f : samples) {
        out.push_back({f, match_subproblem(f, subproblems, scal, z)});
    }
    return out;
}

std::vector<region_sample> region_map(const std::vector<objective_vector> &samples,
                                      const std::vector<subproblem> &subproblems, const scalarizer &scal)
{
    if (subproblems.empty()) {
        throw config_error("region_map: no subproblems");
    }
    const std::vector<double> origin(subproblems.front().weight_eff.size(), 0.0);
    return region_map(samples, subproblems, scal, origin);
}

weight_vector continuous_minimizer_lp(std::span<const double> f, double p)
{
    if (std::isnan(p) || p <= 1.0) {
        throw parameter_error("continuous_minimizer_lp is defined for 1 < p <= inf");
    }
    for (double fi : f) {
        if (!(fi > 0.0)) {
            throw domain_error("continuous_minimizer_lp needs strictly positive f");
        }
    }
    const double exponent = std::isinf(p) ? 1.0 : p / (p - 1.0);
    weight_vector w(f.size());
    // Scale by the smallest entry first so large exponents stay finite.
    const double f_min = *std::min_element(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
        w[i] = std::pow(f_min / f[i], exponent);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double &wi : w) {
        wi /= total;
    }
    return w;
}

std::span<const double> default_radii()
{
    static constexpr std::array<double, 3> radii{1.0, 1.5, 2.0};
    return radii;
}

std::vector<subproblem> lattice_subproblems(std::size_t m, std::size_t divisions)
{
    return make_subproblems(simplex_lattice_weights(m, divisions), 1, 1);
}

std::vector<std::size_t> interior_indices(const std::vector<subproblem> &subproblems)
{
    std::vector<std::size_t> out;
    for (const auto &sp : subproblems) {
        if (sp.boundary == boundary_class::interior) {
            out.push_back(sp.index);
        }
    }
    return out;
}

bool passes_through(const std::vector<subproblem> &subproblems, std::size_t j, const scalarizer &scal,
                    std::span<const double> radii)
{
    const auto &lambda = subproblems.at(j).lambda;
    const std::vector<double> origin(lambda.size(), 0.0);
    const double norm = std::sqrt(std::inner_product(lambda.begin(), lambda.end(), lambda.begin(), 0.0));
    for (double radius : radii) {
        objective_vector f(lambda.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] = lambda[i] * radius / norm;
        }
        if (match_subproblem(f, subproblems, scal, origin) != j) {
            return false;
        }
    }
    return true;
}

double passthrough_fraction(const std::vector<subproblem> &subproblems, const scalarizer &scal,
                            std::span<const double> radii)
{
    const auto interior = interior_indices(subproblems);
    if (interior.empty()) {
        throw config_error("passthrough_fraction: no interior subproblems");
    }
    std::size_t hits = 0;
    for (std::size_t j : interior) {
        if (passes_through(subproblems, j, scal, radii)) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(interior.size());
}

void write_region_tsv(std::ostream &out, const std::vector<region_sample> &samples)
{
    const std::size_t m = samples.empty() ? 2 : samples.front().f.size();
    for (std::size_t i = 0; i < m; ++i) {
        out << "f_" << (i + 1) << '\t';
    }
    out << "label\n";
    char buf[64];
    for (const auto &s : samples) {
        for (double fi : s.f) {
            const auto res = std::to_chars(buf, buf + sizeof(buf), fi);
            out.write(buf, res.ptr - buf);
            out << '\t';
        }
        // Labels are 1-based in the exported map, matching subproblem numbering
        // used in plots.
        out << (s.label + 1) << '\n';
    }
}

namespace
{

std::vector<std::size_t> central_interior(const std::vector<subproblem> &subproblems)
{
    const std::size_t m = subproblems.front().weight_raw.size();
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> out;
    for (std::size_t j : interior_indices(subproblems)) {
        double d = 0.0;
        for (double wi : subproblems[j].weight_raw) {
            d += (wi - 1.0 / static_cast<double>(m)) * (wi - 1.0 / static_cast<double>(m));
        }
        if (d < best - 1e-15) {
            best = d;
            out = {j};
        } else if (std::fabs(d - best) <= 1e-15) {
            out.push_back(j);
        }
    }
    return out;
}

std::string format_fraction(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::vector<region_check> verify_preference_regions(std::size_t shell_samples, std::uint64_t seed)
{
    std::vector<region_check> checks;
    const scalarizer l1(scalarizer_family::lp, 1.0);

    for (std::size_t m : {2u, 3u}) {
        const auto sps = lattice_subproblems(m, 6);
        rng r(seed + m);
        const auto labels = region_map(sample_shell(m, 1.0, 2.0, shell_samples, r), sps, l1);
        std::size_t bad = 0;
        std::set<std::size_t> seen;
        for (const auto &s : labels) {
            seen.insert(s.label);
            if (sps[s.label].boundary != boundary_class::extreme_boundary) {
                ++bad;
            }
        }
        std::set<std::size_t> extreme;
        for (const auto &sp : sps) {
            if (sp.boundary == boundary_class::extreme_boundary) {
                extreme.insert(sp.index);
            }
        }
        region_check c;
        c.name = "L1 labels only extreme-boundary subproblems (m=" + std::to_string(m) + ", H=6)";
        c.passed = bad == 0 && seen == extreme;
        c.detail = std::to_string(labels.size() - bad) + "/" + std::to_string(labels.size())
                   + " samples on extreme boundaries, " + std::to_string(seen.size()) + " distinct labels";
        checks.push_back(std::move(c));
    }

    {
        const auto sps = lattice_subproblems(2, 99);
        const scalarizer l2(scalarizer_family::lp, 2.0);
        const double frac = passthrough_fraction(sps, l2);
        bool central = true;
        for (std::size_t j : central_interior(sps)) {
            central = central && passes_through(sps, j, l2);
        }
        checks.push_back({"L2 direction vectors miss their regions except the central one (m=2, H=99)",
                          frac < 0.2 && central,
                          "passthrough " + format_fraction(frac) + ", central " + (central ? "passes" : "fails")});
        const double frac_inf = passthrough_fraction(sps, scalarizer(scalarizer_family::lp, infinite_p));
        checks.push_back({"L-inf direction vectors all pass (m=2, H=99)", frac_inf == 1.0,
                          "passthrough " + format_fraction(frac_inf)});
    }

    for (auto [m, h] : {std::pair<std::size_t, std::size_t>{2, 99}, {3, 18}}) {
        const auto sps = lattice_subproblems(m, h);
        for (double p : {1.0, 1.5, 2.0, 3.0, 10.0, infinite_p}) {
            const scalarizer glp(scalarizer_family::glp, p);
            const double frac = passthrough_fraction(sps, glp);
            checks.push_back({"GL" + format_exponent(p) + " direction vectors all pass (m=" + std::to_string(m)
                                  + ", H=" + std::to_string(h) + ")",
                              frac == 1.0, "passthrough " + format_fraction(frac)});
        }
    }
    return checks;
}

} // namespace moead
