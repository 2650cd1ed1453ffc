#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fibspec/interval_set.hpp"
#include "fibspec/json_io.hpp"
#include "test_helpers.hpp"

using namespace fibspec;
using fibspec::testing::approx_equal;
using fibspec::testing::grid_minkowski_hausdorff;
using fibspec::testing::middle_fifths;
using fibspec::testing::middle_thirds;
using fibspec::testing::random_set;

namespace {
IntervalSet make(std::vector<Interval> ivs) {
    return IntervalSet::normalized(std::move(ivs));
}
}  // namespace

TEST_CASE("normalize merges, sorts and fuses touching endpoints") {
    CHECK(make({{0, 1}, {0.5, 2}}) == make({{0, 2}}));
    CHECK(make({{3, 4}, {0, 1}}).intervals()[0].lo == 0.0);
    CHECK(make({{3, 4}, {0, 1}}).size() == 2);
    CHECK(make({{0, 1}, {1, 2}}) == make({{0, 2}}));
    CHECK_THROWS_AS(make({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make({{0, std::nan("")}}), std::invalid_argument);
    CHECK(make({}).empty());
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<Interval> raw;
        for (int i = 0; i < 8; ++i) {
            double a = u(rng), b = u(rng);
            if (a > b) std::swap(a, b);
            raw.push_back({a, b});
        }
        const IntervalSet once = IntervalSet::normalized(raw);
        const IntervalSet twice = IntervalSet::normalized(once.intervals());
        CHECK(once == twice);
    }
}

TEST_CASE("minkowski_sum on the examples") {
    CHECK(minkowski_sum(make({{0, 1}}), make({{2, 3}})) == make({{2, 4}}));
    const IntervalSet two = make({{0, 1}, {10, 11}});
    CHECK(minkowski_sum(two, two) == make({{0, 2}, {10, 12}, {20, 22}}));
    CHECK(minkowski_sum(IntervalSet{}, make({{0, 1}})).empty());
}

TEST_CASE("minkowski_sum agrees with the grid membership oracle") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        const IntervalSet a = random_set(rng, 6, -10, 10);
        const IntervalSet b = random_set(rng, 6, -10, 10);
        const IntervalSet s = minkowski_sum(a, b);
        CHECK(grid_minkowski_hausdorff(a, b, s, 1e-4) <= 2e-4);
    }
}

TEST_CASE("minkowski_sum is commutative and associative") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const IntervalSet a = random_set(rng, 5, -10, 10);
        const IntervalSet b = random_set(rng, 5, -10, 10);
        const IntervalSet c = random_set(rng, 5, -10, 10);
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
        const IntervalSet left = minkowski_sum(minkowski_sum(a, b), c);
        const IntervalSet right = minkowski_sum(a, minkowski_sum(b, c));
        CHECK(approx_equal(left, right, 1e-11));
    }
}

TEST_CASE("hull of a sum is the sum of hulls") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const IntervalSet a = random_set(rng, 6, -10, 10);
        const IntervalSet b = random_set(rng, 6, -10, 10);
        const Interval h = hull(minkowski_sum(a, b));
        CHECK(h.lo == hull(a).lo + hull(b).lo);
        CHECK(h.hi == hull(a).hi + hull(b).hi);
    }
}

TEST_CASE("gaps, hull, measure, largest_gap") {
    CHECK(gaps(make({{0, 1}, {2, 3}})).size() == 1);
    CHECK(gaps(make({{0, 1}, {2, 3}}))[0].lo == 1.0);
    CHECK(gaps(make({{0, 1}, {2, 3}}))[0].hi == 2.0);
    CHECK(gaps(make({{0, 5}})).empty());
    const IntervalSet mt1 = middle_thirds(1);
    CHECK(gaps(mt1).size() == 1);
    CHECK(gaps(mt1)[0].lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    CHECK(hull(make({{0, 1}, {3, 4}})).lo == 0.0);
    CHECK(hull(make({{0, 1}, {3, 4}})).hi == 4.0);
    CHECK(measure(middle_thirds(2)) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
    CHECK(measure(IntervalSet{}) == 0.0);
    CHECK(largest_gap(make({{0, 1}, {3, 4}})) == 2.0);
    CHECK(largest_gap(make({{0, 5}})) == 0.0);
    CHECK_THROWS_AS(hull(IntervalSet{}), std::invalid_argument);
    CHECK_THROWS_AS(gaps(IntervalSet{}), std::invalid_argument);
    CHECK_THROWS_AS(largest_gap(IntervalSet{}), std::invalid_argument);
}

TEST_CASE("measure is subadditive, additive on disjoint unions") {
    std::mt19937 rng(19);
    for (int rep = 0; rep < 100; ++rep) {
        const IntervalSet a = random_set(rng, 6, -10, 10);
        const IntervalSet b = random_set(rng, 6, -10, 10);
        CHECK(measure(set_union(a, b)) <=
              measure(a) + measure(b) + 1e-12);
        const IntervalSet b_far = affine_image(b, 1.0, 100.0);
        CHECK(measure(set_union(a, b_far)) ==
              doctest::Approx(measure(a) + measure(b_far)).epsilon(1e-14));
    }
}

TEST_CASE("square_image maps monotonically and validates the domain") {
    CHECK(square_image(make({{0, 1}, {2, 3}})) == make({{0, 1}, {4, 9}}));
    CHECK(square_image(make({{1, 1}})) == make({{1, 1}}));
    CHECK(square_image(make({{0.5, 1.5}})) == make({{0.25, 2.25}}));
    CHECK_THROWS_AS(square_image(make({{-0.5, 1}})), std::domain_error);

    std::mt19937 rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        const IntervalSet a = random_set(rng, 6, 0.1, 10);
        const IntervalSet sq = square_image(a);
        REQUIRE(sq.size() == a.size());
        for (std::size_t i = 0; i + 1 < sq.size(); ++i)
            CHECK(sq[i].hi < sq[i + 1].lo);
    }
}

TEST_CASE("covers_interval") {
    CHECK(covers_interval(make({{0, 10}}), {1, 9}, 1e-9));
    CHECK_FALSE(covers_interval(make({{0, 4}, {5, 10}}), {1, 9}, 1e-9));
    CHECK(covers_interval(make({{0, 4}, {4.0000001, 10}}), {1, 9}, 1e-6));
    CHECK_FALSE(covers_interval(IntervalSet{}, {0, 1}, 1.0));
    // hull shortfall beyond tol
    CHECK_FALSE(covers_interval(make({{0, 1}}), {0, 1.1}, 1e-3));
    CHECK(covers_interval(make({{0, 1}}), {0, 1.1}, 0.2));
}

TEST_CASE("clip, dilate, affine_image, hausdorff") {
    const IntervalSet a = make({{0, 1}, {2, 3}, {5, 6}});
    CHECK(clip(a, {0.5, 5.5}) == make({{0.5, 1}, {2, 3}, {5, 5.5}}));
    CHECK(clip(a, {1.2, 1.8}).empty());
    CHECK(dilate(make({{0, 1}, {3, 4}}), 0.25) == make({{-0.25, 1.25}, {2.75, 4.25}}));
    CHECK(dilate(make({{0, 1}, {1.5, 2}}), 0.3) == make({{-0.3, 2.3}}));
    CHECK(affine_image(make({{0, 1}, {2, 3}}), 2.0, 1.0) == make({{1, 3}, {5, 7}}));
    CHECK_THROWS_AS(affine_image(a, -1.0, 0.0), std::invalid_argument);

    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(hausdorff_distance(make({{0, 1}}), make({{0, 1}, {2, 2}})) ==
          doctest::Approx(1.0));
    CHECK(hausdorff_distance(make({{0, 10}}), make({{0, 4}, {6, 10}})) ==
          doctest::Approx(1.0));
}

TEST_CASE("interval-set JSON round-trips exactly") {
    std::mt19937 rng(29);
    for (int rep = 0; rep < 50; ++rep) {
        const IntervalSet a = random_set(rng, 6, -10, 10);
        const json j = to_json(a);
        const IntervalSet back = interval_set_from_json(json::parse(j.dump()));
        CHECK(a == back);
    }
    CHECK(interval_set_from_json(json::parse(R"({"intervals": []})")).empty());
}
