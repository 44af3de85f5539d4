#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include <moead/core_types.hpp>
#include <moead/errors.hpp>
#include <moead/rng.hpp>

using moead::objective_vector;

namespace
{

bool dom(const objective_vector &u, const objective_vector &v)
{
    return moead::dominates(u, v);
}

} // namespace

TEST_CASE("dominates examples")
{
    CHECK(dom({1, 2}, {2, 3}));
    CHECK_FALSE(dom({1, 2}, {1, 2}));
    CHECK_FALSE(dom({1, 3}, {2, 2}));
    CHECK(dom({1, 2}, {1, 3}));
    CHECK_THROWS_AS(dom({1, 2}, {1, 2, 3}), moead::dimension_error);
}

TEST_CASE("dominates is irreflexive and transitive on random triples")
{
    moead::rng r(7);
    auto draw = [&] {
        objective_vector v(3);
        for (auto &x : v) {
            x = static_cast<double>(r.uniform_int(0, 3));
        }
        return v;
    };
    for (int t = 0; t < 20000; ++t) {
        const auto a = draw();
        const auto b = draw();
        const auto c = draw();
        CHECK_FALSE(dom(a, a));
        if (dom(a, b) && dom(b, c)) {
            CHECK(dom(a, c));
        }
        CHECK_FALSE((dom(a, b) && dom(b, a)));
    }
}

TEST_CASE("nondominated_filter examples")
{
    using set = std::vector<objective_vector>;
    CHECK(moead::nondominated_filter(set{{1, 2}, {2, 1}, {2, 2}}) == set{{1, 2}, {2, 1}});
    CHECK(moead::nondominated_filter(set{{0, 0}}) == set{{0, 0}});
    CHECK(moead::nondominated_filter(set{{1, 1}, {1, 1}}) == set{{1, 1}});
    CHECK(moead::nondominated_filter(set{}).empty());
}

TEST_CASE("nondominated_filter returns an antichain covering the removed members")
{
    moead::rng r(11);
    for (int t = 0; t < 300; ++t) {
        std::vector<objective_vector> pts(30, objective_vector(2));
        for (auto &p : pts) {
            for (auto &x : p) {
                x = static_cast<double>(r.uniform_int(0, 9));
            }
        }
        const auto nd = moead::nondominated_filter(pts);
        for (std::size_t i = 0; i < nd.size(); ++i) {
            for (std::size_t j = 0; j < nd.size(); ++j) {
                CHECK_FALSE(dom(nd[i], nd[j]));
                if (i != j) {
                    CHECK(nd[i] != nd[j]);
                }
            }
        }
        for (const auto &p : pts) {
            bool kept = false;
            bool covered = false;
            for (const auto &q : nd) {
                kept = kept || q == p;
                covered = covered || dom(q, p);
            }
            CHECK((kept || covered));
        }
    }
}

TEST_CASE("update_ideal examples")
{
    auto vals = [](const moead::reference_point &z) {
        return std::vector<double>(z.values().begin(), z.values().end());
    };
    const std::vector<double> f1{0.3, 0.7};
    CHECK(vals(moead::update_ideal(moead::reference_point({0.5, 0.5}), f1)) == std::vector<double>{0.3, 0.5});
    const std::vector<double> f2{1, 1};
    CHECK(vals(moead::update_ideal(moead::reference_point({0.0, 0.0}), f2)) == std::vector<double>{0, 0});
    moead::reference_point fresh(2);
    CHECK(std::isinf(fresh.values()[0]));
    const std::vector<double> f3{2, 3};
    CHECK(vals(moead::update_ideal(fresh, f3)) == std::vector<double>{2, 3});
}

TEST_CASE("update_ideal is idempotent and monotone")
{
    moead::rng r(3);
    moead::reference_point z(3);
    std::vector<double> prev(3, std::numeric_limits<double>::infinity());
    for (int t = 0; t < 1000; ++t) {
        std::vector<double> f{r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(-1, 1)};
        z.update(f);
        const std::vector<double> once(z.values().begin(), z.values().end());
        z.update(f);
        CHECK(std::vector<double>(z.values().begin(), z.values().end()) == once);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(once[i] <= prev[i]);
        }
        prev = once;
    }
}

TEST_CASE("utopian reference sits epsilon below the ideal point")
{
    moead::reference_point z(2, moead::reference_mode::utopian, 0.01);
    const std::vector<double> f{1.0, 2.0};
    z.update(f);
    CHECK(z.ideal()[0] == 1.0);
    CHECK(z.values()[0] == doctest::Approx(0.99));
    CHECK(z.values()[1] == doctest::Approx(1.99));
    CHECK(moead::reference_point(2).epsilon()[0] == doctest::Approx(1e-4));
    CHECK_THROWS(moead::reference_point(2, moead::reference_mode::utopian, 0.0));
}

TEST_CASE("kind_of reports the encoding")
{
    CHECK(moead::kind_of(moead::real_vector{0.5}) == moead::encoding_kind::real);
    CHECK(moead::kind_of(moead::bit_string{1, 0}) == moead::encoding_kind::binary);
    CHECK(moead::kind_of(moead::permutation{1, 0}) == moead::encoding_kind::permutation);
}
