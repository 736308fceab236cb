#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tailkit/counterexample.hpp"
#include "tailkit/estimators.hpp"
#include "tailkit/rng.hpp"

using namespace tailkit;

namespace {

OrderedSample exact_quantiles(const DistributionModel& model, std::size_t n) {
    std::vector<double> xs;
    for (std::size_t i = 1; i <= n; ++i) {
        xs.push_back(quantile(model, static_cast<double>(i) / static_cast<double>(n + 1)));
    }
    return OrderedSample(xs);
}

}  // namespace

TEST_CASE("ls_slope basics") {
    CHECK(ls_slope({{0, 0}, {1, 2}, {2, 4}}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ls_slope({{0, 0}, {1, 1}, {2, 0}}) == 0.0);
    CHECK(ls_slope({{1, 3}, {4, -3}}) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK_THROWS_AS(ls_slope({{1, 0}, {1, 5}, {1, 2}}), DegenerateDesign);
    CHECK_THROWS_AS(ls_slope({{1, 0}}), DegenerateDesign);
    CHECK_THROWS_AS(ls_slope({}), DegenerateDesign);
    const auto m = mean_point({{0, 0}, {2, 4}});
    CHECK(m == Point{1, 2});
}

TEST_CASE("ls_slope on the counterexample matches the exact rational value") {
    CHECK(ls_slope(build_example(1).set) == doctest::Approx(31.0 / 47.0).epsilon(1e-13));
    CHECK(ls_slope(build_example(2).set) == doctest::Approx(5.0 / 13.0).epsilon(1e-13));
    CHECK(ls_slope(build_example(3).set) == doctest::Approx(0.25919801570897066).epsilon(1e-13));
}

TEST_CASE("ls_slope is translation invariant") {
    RngStream rng(17);
    PointSet ps;
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform01() * 5;
        ps.push_back({x, 0.7 * x + rng.uniform01()});
    }
    const double base = ls_slope(ps);
    for (int t = 0; t < 200; ++t) {
        const Point v{rng.uniform01() * 200 - 100, rng.uniform01() * 200 - 100};
        CHECK(std::abs(ls_slope(translate(ps, v)) - base) <= 1e-10);
    }
}

TEST_CASE("qq slope estimator") {
    const auto exact = exact_quantiles(DistributionModel::pareto(2.0), 1000);
    for (std::size_t k : {2u, 3u, 100u, 1000u}) {
        CHECK(qq_slope_estimator(exact, k) == doctest::Approx(0.5).epsilon(1e-12));
    }
    const OrderedSample s(std::vector<double>{1.0, 2.0, 4.0, 16.0});
    // Through (log 2, log 4) and (0, 0) in centered coordinates.
    CHECK(qq_slope_estimator(s, 2) == doctest::Approx(2.0).epsilon(1e-14));

    RngStream rng(5);
    const OrderedSample r(sample(DistributionModel::pareto(1.0), 5000, rng));
    CHECK(qq_slope_estimator(r, 300) == doctest::Approx(ls_slope(thresholded_qq_set(r, 300))).epsilon(1e-12));
    CHECK_THROWS(qq_slope_estimator(r, 1));
}

TEST_CASE("Hill estimator") {
    const double e = std::exp(1.0);
    const OrderedSample s(std::vector<double>{e * e, e, 1.0});
    CHECK(hill_estimator(s, 3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(hill_estimator(OrderedSample(std::vector<double>(10, 3.5)), 7) == 0.0);
    CHECK_THROWS(hill_estimator(s, 1));
    CHECK_THROWS(hill_estimator(s, 4));
    CHECK_THROWS(hill_estimator(OrderedSample(std::vector<double>{-1.0, 0.0, 5.0}), 3));
    CHECK_THROWS(hill_estimator(OrderedSample(std::vector<double>{0.0, 1.0, 5.0}), 3));

    RngStream rng(6);
    for (int t = 0; t < 20; ++t) {
        const OrderedSample r(sample(DistributionModel::pareto_log(1.0 + t * 0.1), 500, rng));
        CHECK(hill_estimator(r, 2 + t * 20) >= 0.0);
    }
}

TEST_CASE("Hill estimator equals the windowless mean of the centered y") {
    RngStream rng(9);
    for (int t = 0; t < 50; ++t) {
        const OrderedSample r(sample(DistributionModel::pareto(0.5 + 0.05 * t), 3000, rng));
        const std::size_t k = 10 + 37 * static_cast<std::size_t>(t);
        const auto report = tail_report(r, k);
        CHECK(std::abs(report.hill - report.sbar_y) <= 1e-12);
        CHECK(std::abs(report.hill - hill_estimator(r, k)) <= 1e-12);
        CHECK(std::abs(report.ls_slope - qq_slope_estimator(r, k)) <= 1e-12);
    }
}

TEST_CASE("design moments") {
    auto m = design_moments(1);
    CHECK(m.sbar_x == 0.0);
    CHECK(m.sbar_xx == 0.0);
    m = design_moments(4);
    CHECK(m.sbar_x == doctest::Approx(std::log(32.0 / 3.0) / 4.0).epsilon(1e-14));
    CHECK(m.sbar_x == doctest::Approx(0.59178090353290421).epsilon(1e-14));
    CHECK(m.sbar_xx == doctest::Approx(0.62125651110028971).epsilon(1e-14));
    m = design_moments(10000);
    CHECK(m.sbar_x == doctest::Approx(0.99944758829474739).epsilon(1e-13));
    CHECK(m.sbar_xx == doctest::Approx(1.9938650985316785).epsilon(1e-13));
    CHECK(std::abs(m.sbar_x - 1.0) <= 1e-3);
    CHECK(std::abs(m.sbar_xx - 2.0) <= 1e-2);
    for (std::size_t k = 1; k < 2000; k += 13) {
        const auto d = design_moments(k);
        CHECK(d.sbar_xx >= d.sbar_x * d.sbar_x - 1e-15);
    }
}

TEST_CASE("concentration ratio") {
    const PointSet ps{{0, 0}, {0.1, -0.1}, {0.2, 0.2}};
    CHECK(concentration_ratio(ps, {0, 0}, 1.0) == 1.0);
    CHECK(concentration_ratio(ps, {5, 5}, 1.0) == 0.0);
    // The square is open: a point on its edge is outside.
    CHECK(concentration_ratio(ps, {0, 0}, 0.2) == doctest::Approx(2.0 / 3.0));
    CHECK(concentration_ratio(ps, {0, 0}, 0.1) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS(concentration_ratio(ps, {0, 0}, 0.0));
}

TEST_CASE("tail measure counts ratios above y") {
    const OrderedSample s(std::vector<double>{4, 2, 1, 0.5});
    CHECK(tail_measure(s, 3, 1.5) == doctest::Approx(2.0 / 3.0));
    CHECK(tail_measure(s, 4, 0.5) == 1.0);
    CHECK(tail_measure(s, 2, 1.0) == doctest::Approx(0.5));
    CHECK_THROWS(tail_measure(s, 3, 0.0));
    CHECK_THROWS(tail_measure(s, 5, 2.0));
}

TEST_CASE("tail measure near its limit") {
    int hits = 0;
    for (std::size_t rep = 0; rep < 100; ++rep) {
        RngStream rng(1000 + rep);
        const OrderedSample s(sample(DistributionModel::pareto(1.0), 100000, rng));
        if (std::abs(tail_measure(s, 1000, 2.0) - 0.5) <= 0.05) ++hits;
    }
    CHECK(hits >= 95);
}

TEST_CASE("windowed moments") {
    RngStream rng(12);
    const OrderedSample s(sample(DistributionModel::pareto(1.0), 20000, rng));
    const std::size_t k = 400;
    const auto full = windowed_moments(s, k, 1e3, 1.0);
    REQUIRE(full);
    CHECK(full->k_M == k);
    const auto report = tail_report(s, k);
    CHECK(full->sbar_y == doctest::Approx(report.sbar_y).epsilon(1e-12));
    CHECK(full->sbar_x == doctest::Approx(design_moments(k).sbar_x).epsilon(1e-12));
    CHECK(full->sbar_xx == doctest::Approx(design_moments(k).sbar_xx).epsilon(1e-12));

    const auto exact = exact_quantiles(DistributionModel::pareto(2.0), 5000);
    const auto w = windowed_moments(exact, 500, 2.0, 2.0);
    REQUIRE(w);
    std::size_t expected = 0;
    for (auto p : centered_qq_set(exact, 500)) expected += p.x <= 2.0 ? 1 : 0;
    CHECK(w->k_M == expected);

    // A window of zero height around a set with no point at the origin
    // cannot happen; but a tiny window still holds the origin point.
    const auto tiny = windowed_moments(s, k, 1e-12, 1.0);
    REQUIRE(tiny);
    CHECK(tiny->k_M >= 1);
}

TEST_CASE("window limits by quadrature") {
    auto l = window_limits(2.0, 1.0);
    CHECK(l.mu_x == doctest::Approx(0.6869647145006687).epsilon(1e-10));
    CHECK(l.mu_y == doctest::Approx(0.6869647145006687).epsilon(1e-10));
    l = window_limits(2.0, 2.0);
    CHECK(l.mu_y == doctest::Approx(0.17174117862516717).epsilon(1e-10));
    l = window_limits(3.0, 2.0);
    CHECK(l.mu_x == doctest::Approx(0.84281291052623214).epsilon(1e-10));
    CHECK(l.mu_y == doctest::Approx(0.21070322763155804).epsilon(1e-10));
    CHECK(window_limits(60.0, 1.0).mu_x == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("tail report with window and concentration") {
    RngStream rng(21);
    const OrderedSample s(sample(DistributionModel::pareto(1.0), 10000, rng));
    ReportOptions opts;
    opts.M = 3.0;
    opts.alpha_hint = 1.0;
    opts.delta = 0.25;
    const auto r = tail_report(s, 200, opts);
    CHECK(r.n == 10000);
    CHECK(r.k == 200);
    REQUIRE(r.k_M);
    CHECK(*r.k_M <= 200);
    REQUIRE(r.concentration);
    CHECK(*r.concentration >= 0.0);
    CHECK(*r.concentration <= 1.0);
    CHECK(r.sbar_xx >= r.sbar_x * r.sbar_x);
}

TEST_CASE("Hill estimator carries the slowly varying bias for ParetoLog") {
    // At k/n = 0.01 the threshold t solves 1/(t log(e t)) = 0.01, and
    // E[log(X/t) | X > t] = int_0^inf e^-u (1 + log t)/(1 + log t + u) du.
    const double population = 0.83078372987018098;
    double sum = 0.0;
    const int reps = 20;
    for (int rep = 0; rep < reps; ++rep) {
        RngStream rng(500 + rep);
        const OrderedSample s(sample(DistributionModel::pareto_log(1.0), 100000, rng));
        sum += hill_estimator(s, 1000);
    }
    CHECK(sum / reps == doctest::Approx(population).epsilon(0.02));
}
