#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include <moead/errors.hpp>
#include <moead/metrics.hpp>
#include <moead/rng.hpp>

#include "support/oracles.hpp"

using P = std::vector<moead::objective_vector>;
using V = std::vector<double>;

namespace
{

P random_front(moead::rng &r, std::size_t n, std::size_t m)
{
    P pts(n, moead::objective_vector(m));
    for (auto &p : pts) {
        for (auto &x : p) {
            x = r.uniform();
        }
    }
    return pts;
}

double hv(const P &pts, const V &ref)
{
    return moead::hypervolume(pts, ref);
}

} // namespace

TEST_CASE("normalize examples")
{
    const moead::objective_bounds b{{0, 0}, {2, 2}};
    CHECK(moead::normalize(P{{1, 1}}, b) == P{{0.5, 0.5}});
    CHECK(moead::normalize(P{{0, 0}}, b) == P{{0, 0}});
    CHECK_THROWS_AS(moead::normalize(P{{1, 1}}, moead::objective_bounds{{0, 1}, {1, 1}}), moead::config_error);
}

TEST_CASE("hypervolume examples")
{
    CHECK(hv({{1, 0}, {0, 1}}, {2, 2}) == doctest::Approx(3));
    CHECK(hv({{0, 0}}, {1.1, 1.1}) == doctest::Approx(1.21));
    CHECK(hv({}, {1.1, 1.1}) == 0.0);
    // Points at or beyond the reference contribute nothing.
    CHECK(hv({{1.2, 0.5}}, {1.1, 1.1}) == 0.0);
    CHECK(hv({{1.1, 0.5}}, {1.1, 1.1}) == 0.0);
    CHECK(hv({{1.2, 0.5}, {0.1, 0.1}}, {1.1, 1.1}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(hv({{1, 1, 1}}, {2, 2}), moead::dimension_error);
}

TEST_CASE("hypervolume agrees with inclusion-exclusion")
{
    moead::rng r(21);
    for (std::size_t m : {2u, 3u, 4u, 5u}) {
        const V ref(m, 1.1);
        for (int t = 0; t < 150; ++t) {
            const auto n = 1 + r.index(10);
            auto pts = random_front(r, n, m);
            if (t % 3 == 0) {
                pts.push_back(pts.front()); // duplicates
            }
            if (t % 5 == 0) {
                pts[0][0] = 1.3; // outside the reference box
            }
            CHECK(hv(pts, ref) == doctest::Approx(oracle::hv_inclusion_exclusion(pts, ref)).epsilon(1e-9));
        }
    }
}

TEST_CASE("hypervolume agrees with a Monte-Carlo estimate")
{
    moead::rng r(22);
    const V ref(3, 1.1);
    const auto pts = random_front(r, 10, 3);
    const auto mc = oracle::hv_monte_carlo(pts, ref, V(3, 0.0), 1000000, 5);
    CHECK(std::fabs(hv(pts, ref) - mc.value) <= 3 * mc.std_error);
}

TEST_CASE("hypervolume monotonicity")
{
    moead::rng r(23);
    for (std::size_t m : {2u, 3u, 4u}) {
        const V ref(m, 1.1);
        for (int t = 0; t < 200; ++t) {
            auto pts = moead::nondominated_filter(random_front(r, 8, m));
            const double base = hv(pts, ref);
            moead::objective_vector extra(m);
            for (auto &x : extra) {
                x = r.uniform();
            }
            auto grown = pts;
            grown.push_back(extra);
            const double with = hv(grown, ref);
            CHECK(with >= base - 1e-12);
            // A point dominated by an existing member changes nothing.
            auto dominated = pts.front();
            for (auto &x : dominated) {
                x = std::min(1.05, x + 0.01);
            }
            auto same = pts;
            same.push_back(dominated);
            CHECK(std::fabs(hv(same, ref) - base) <= 1e-12);
        }
    }
}

TEST_CASE("normalized hypervolume is invariant under affine rescaling")
{
    moead::rng r(24);
    for (int t = 0; t < 200; ++t) {
        const auto pts = random_front(r, 12, 3);
        const moead::objective_bounds unit{{0, 0, 0}, {1, 1, 1}};
        V scale{r.uniform(0.5, 20), r.uniform(0.5, 20), r.uniform(0.5, 20)};
        V shift{r.uniform(-5, 5), r.uniform(-5, 5), r.uniform(-5, 5)};
        P moved = pts;
        moead::objective_bounds b = unit;
        for (std::size_t i = 0; i < 3; ++i) {
            for (auto &p : moved) {
                p[i] = p[i] * scale[i] + shift[i];
            }
            b.lower[i] = shift[i];
            b.upper[i] = scale[i] + shift[i];
        }
        CHECK(moead::normalized_hypervolume(moved, b)
              == doctest::Approx(moead::normalized_hypervolume(pts, unit)).epsilon(1e-12));
    }
}

TEST_CASE("pooled bounds")
{
    const P run{{0, 1}, {1, 0}, {0.5, 0.5}};
    const auto b = moead::pooled_pf_bounds({run});
    CHECK(b.lower == V{0, 0});
    CHECK(b.upper == V{1, 1});
    const auto two = moead::pooled_pf_bounds({P{{0, 2}}, P{{2, 0}}});
    CHECK(two.lower == V{0, 0});
    CHECK(two.upper == V{2, 2});
    CHECK_THROWS_AS(moead::pooled_pf_bounds({}), moead::config_error);
    CHECK_THROWS_AS(moead::pooled_pf_bounds({P{}}), moead::config_error);

    moead::rng r(25);
    for (int t = 0; t < 100; ++t) {
        const auto pool = random_front(r, 30, 3);
        const auto filtered = moead::nondominated_filter(pool);
        const auto a = moead::pooled_pf_bounds({pool});
        const auto c = moead::pooled_pf_bounds({filtered});
        CHECK(a.lower == c.lower);
        CHECK(a.upper == c.upper);
    }
}

TEST_CASE("largest consecutive gap")
{
    CHECK(moead::max_consecutive_gap(P{{1, 0}, {0, 1}, {0.5, 0.5}}) == doctest::Approx(std::sqrt(0.5)));
    CHECK(moead::max_consecutive_gap(P{{0, 1}}) == 0.0);
}

TEST_CASE("rank-sum test examples")
{
    V a(30);
    std::iota(a.begin(), a.end(), 1.0);
    CHECK(moead::wilcoxon_rank_sum(a, a) == moead::comparison::similar);
    V b(30);
    std::iota(b.begin(), b.end(), 101.0);
    CHECK(moead::wilcoxon_rank_sum(a, b) == moead::comparison::worse);
    CHECK(moead::wilcoxon_rank_sum(b, a) == moead::comparison::better);
    const V flat(8, 0.3);
    CHECK(moead::wilcoxon_rank_sum(flat, flat) == moead::comparison::similar);
    CHECK_THROWS_AS(moead::wilcoxon_rank_sum(V{1, 2, 3, 4}, b), moead::parameter_error);
    CHECK(moead::mark(moead::comparison::better) == "+");
    CHECK(moead::mark(moead::comparison::worse) == "-");
    CHECK(moead::mark(moead::comparison::similar) == "=");
}

TEST_CASE("rank-sum at n = m = 5 with U = 2")
{
    // Ranks {1, 2, 3, 4, 7} against {5, 6, 8, 9, 10}.
    const V a{1, 2, 3, 4, 7};
    const V b{5, 6, 8, 9, 10};
    const double exact = oracle::exact_rank_sum_p(a, b);
    CHECK(exact == doctest::Approx(8.0 / 252.0));
    CHECK(exact < 0.05);
    // Normal approximation: z = (2 - 12.5) / sqrt(25 * 11 / 12).
    const double z = (2.0 - 12.5) / std::sqrt(25.0 * 11.0 / 12.0);
    CHECK(moead::rank_sum_p_value(a, b) == doctest::Approx(std::erfc(std::fabs(z) / std::sqrt(2.0))));
    CHECK(moead::wilcoxon_rank_sum(a, b) == moead::comparison::worse);
}

TEST_CASE("rank-sum normal approximation tracks the exact distribution")
{
    moead::rng r(26);
    for (int t = 0; t < 100; ++t) {
        V a(7);
        V b(7);
        for (auto &x : a) {
            x = r.uniform();
        }
        for (auto &x : b) {
            x = r.uniform() + 0.3;
        }
        CHECK(std::fabs(moead::rank_sum_p_value(a, b) - oracle::exact_rank_sum_p(a, b)) < 0.06);
    }
}

TEST_CASE("descriptive statistics")
{
    const V v{1, 2, 3, 4};
    CHECK(moead::mean(v) == 2.5);
    CHECK(moead::median(v) == 2.5);
    CHECK(moead::median({3, 1, 2}) == 2);
    CHECK(moead::stddev(v) == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(moead::stddev(V{1}) == 0.0);
}
