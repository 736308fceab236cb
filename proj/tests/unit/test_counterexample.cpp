#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tailkit/counterexample.hpp"
#include "tailkit/estimators.hpp"
#include "tailkit/setmetrics.hpp"

using namespace tailkit;

TEST_CASE("small instances") {
    const auto one = build_example(1);
    CHECK(one.set.size() == 6);
    CHECK(one.k_n == 6);
    for (Point p : {Point{-1, 0}, Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{1.5, 1.5}, Point{2, 2}}) {
        CHECK(std::find(one.set.begin(), one.set.end(), p) != one.set.end());
    }
    const auto two = build_example(2);
    CHECK(two.k_n == 10);
    CHECK(two.mean.x == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(two.mean.y == doctest::Approx(0.375).epsilon(1e-15));
    CHECK_THROWS_AS(build_example(0), std::domain_error);
    CHECK_THROWS_AS(build_example(kMaxMaterializedN + 1), std::domain_error);
}

TEST_CASE("cardinality and mean identities") {
    for (int n = 1; n <= 20; ++n) {
        const auto inst = build_example(n);
        const std::uint64_t k = (std::uint64_t{1} << n) + 2 * static_cast<std::uint64_t>(n) + 2;
        CHECK(inst.set.size() == k);
        CHECK(inst.k_n == k);
        CHECK(example_cardinality(n) == k);
        const double mean = 3.0 * (std::ldexp(1.0, n) + 1.0) / (2.0 * n * static_cast<double>(k));
        CHECK(std::abs(inst.mean.x - mean) <= 1e-12);
        CHECK(std::abs(inst.mean.y - mean) <= 1e-12);
        CHECK(example_mean(n) == doctest::Approx(mean).epsilon(1e-15));
        const auto m = mean_point(inst.set);
        CHECK(std::abs(m.x - mean) <= 1e-12);
    }
}

TEST_CASE("closed-form slope agrees with the generic fit") {
    for (int n = 1; n <= 20; ++n) {
        const auto inst = build_example(n);
        CHECK(ls_slope(inst.set) == doctest::Approx(example_slope_closed_form(n)).epsilon(1e-10));
    }
    CHECK(example_slope_closed_form(20) == doctest::Approx(0.93842115470595378).epsilon(1e-12));
    CHECK(example_slope_closed_form(8) == doctest::Approx(0.12344929596156828).epsilon(1e-12));
    CHECK(example_slope_closed_form(20) >= 0.9);
    // Toward 1 along the tail of the sequence.
    double prev = 0.0;
    for (int n : {10, 14, 18, 22, 30, 40, 62}) {
        const double s = example_slope_closed_form(n);
        CHECK(s > prev);
        CHECK(s < 1.0);
        prev = s;
    }
    CHECK(example_slope_closed_form(62) > 0.999);
}

TEST_CASE("diagnostics") {
    for (int n = 1; n <= 20; ++n) {
        const auto inst = build_example(n);
        const auto d = verify_example(inst, example_cluster_delta(n));
        CHECK(d.hausdorff_to_limit < 3.0 / n);
        CHECK(d.concentration >= example_concentration_bound(n));
        CHECK(d.delta == example_cluster_delta(n));
        CHECK(d.slope == doctest::Approx(ls_slope(inst.set)));
    }
    // The cluster's far corner (2/n, 2/n) sets the distance for n >= 2.
    CHECK(verify_example(build_example(4), 0.5).hausdorff_to_limit == doctest::Approx(0.5));
    CHECK(verify_example(build_example(1), 1.0).hausdorff_to_limit == doctest::Approx(std::sqrt(5.0)));
    CHECK(example_concentration_bound(3) == doctest::Approx(9.0 / 16.0));
    const auto f = example_limit();
    CHECK(f.start == Point{-1, 0});
    CHECK(f.end == Point{1, 0});
}
