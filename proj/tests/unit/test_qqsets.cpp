#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tailkit/qqsets.hpp"
#include "tailkit/rng.hpp"
#include "tailkit/setmetrics.hpp"

using namespace tailkit;

namespace {

OrderedSample exact_quantiles(const DistributionModel& model, std::size_t n) {
    std::vector<double> xs;
    for (std::size_t i = 1; i <= n; ++i) {
        xs.push_back(quantile(model, static_cast<double>(i) / static_cast<double>(n + 1)));
    }
    return OrderedSample(xs);
}

bool same_multiset(PointSet a, PointSet b) {
    auto less = [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

TEST_CASE("qq_set of a singleton") {
    const auto ps = qq_set(OrderedSample(std::vector<double>{0.3}), DistributionModel::uniform01());
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == Point{0.5, 0.3});
}

TEST_CASE("qq_set of exact uniform quantiles lies on the diagonal") {
    const auto ps = qq_set(exact_quantiles(DistributionModel::uniform01(), 200), DistributionModel::uniform01());
    CHECK(ps.size() == 200);
    for (auto p : ps) CHECK(p.y == doctest::Approx(p.x).epsilon(1e-15));
}

TEST_CASE("qq_set of a Pareto sample hugs the diagonal on a bounded window") {
    // Raw-scale extremes fluctuate by several units, so the window stops
    // where a few hundred points still lie above it.
    RngStream rng(11);
    const auto model = DistributionModel::pareto(1.0);
    const auto ps = qq_set(OrderedSample(sample(model, 10000, rng)), model);
    const auto w = Window::make(0.0, 10.0, 0.0, 10.0);
    const auto clipped = clip_shape(limit_shape_for(QQContext::General, model), w);
    REQUIRE(clipped);
    CHECK(clipped->start == Point{1.0, 1.0});
    CHECK(clipped->end == Point{10.0, 10.0});
    CHECK(hausdorff(truncate(ps, w), *clipped) < 0.5);
}

TEST_CASE("Pareto log QQ set") {
    const auto one = pareto_log_qq_set(OrderedSample(std::vector<double>{1.0}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(one[0].y == 0.0);

    for (double alpha : {1.0, 2.0}) {
        const auto ps = pareto_log_qq_set(exact_quantiles(DistributionModel::pareto(alpha), 500));
        CHECK(ps.size() == 500);
        for (auto p : ps) CHECK(std::abs(p.y - p.x / alpha) <= 1e-12);
    }
    CHECK_THROWS_AS(pareto_log_qq_set(OrderedSample(std::vector<double>{0.0, 1.0})), std::domain_error);
    CHECK_THROWS_AS(pareto_log_qq_set(OrderedSample(std::vector<double>{-2.0, 1.0})), std::domain_error);
}

TEST_CASE("thresholded QQ set") {
    const double e = std::exp(1.0);
    const OrderedSample s(std::vector<double>{1.0, e, e * e});
    const auto top = thresholded_qq_set(s, 1);
    REQUIRE(top.size() == 1);
    CHECK(top[0].x == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(top[0].y == doctest::Approx(2.0).epsilon(1e-15));

    RngStream rng(3);
    const OrderedSample r(sample(DistributionModel::pareto(1.5), 300, rng));
    CHECK(same_multiset(thresholded_qq_set(r, r.size()), pareto_log_qq_set(r)));
    CHECK(thresholded_qq_set(r, 17).size() == 17);

    CHECK_THROWS_AS(thresholded_qq_set(s, 0), std::domain_error);
    CHECK_THROWS_AS(thresholded_qq_set(s, 4), std::domain_error);
    // Only the top k values need to be positive.
    const OrderedSample mixed(std::vector<double>{-1.0, 2.0, 3.0});
    CHECK_NOTHROW(thresholded_qq_set(mixed, 2));
    CHECK_THROWS_AS(thresholded_qq_set(mixed, 3), std::domain_error);
}

TEST_CASE("centered set is the thresholded set shifted by a_n") {
    RngStream rng(8);
    const OrderedSample s(sample(DistributionModel::pareto(1.0), 2000, rng));
    for (std::size_t k : {2u, 50u, 2000u}) {
        const auto centered = centered_qq_set(s, k);
        CHECK(centered.size() == k);
        CHECK(std::find(centered.begin(), centered.end(), Point{0.0, 0.0}) != centered.end());
        const auto shifted = translate(centered, threshold_shift(s, k));
        const auto direct = thresholded_qq_set(s, k);
        REQUIRE(shifted.size() == direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) {
            CHECK(shifted[i].x == doctest::Approx(direct[i].x).epsilon(1e-12));
            CHECK(shifted[i].y == doctest::Approx(direct[i].y).epsilon(1e-12));
        }
    }
    const auto a = threshold_shift(s, 100);
    CHECK(a.x == doctest::Approx(-std::log(100.0 / 2001.0)));
    CHECK(a.y == doctest::Approx(std::log(s.descending_at(100))));
}

TEST_CASE("centered set of exact Pareto quantiles is collinear") {
    const auto s = exact_quantiles(DistributionModel::pareto(2.0), 1000);
    for (std::size_t k : {2u, 10u, 999u}) {
        for (auto p : centered_qq_set(s, k)) CHECK(std::abs(p.y - p.x / 2.0) <= 1e-12);
    }
}

TEST_CASE("thresholded set lies near the shifted ray") {
    RngStream rng(2718);
    const auto model = DistributionModel::pareto(1.0);
    const OrderedSample s(sample(model, 100000, rng));
    const std::size_t k = 1000;
    const auto a = threshold_shift(s, k);
    const auto base = tail_window(3.0, 1.0);
    const auto w = Window::make(base.x_lo + a.x, base.x_hi + a.x, base.y_lo + a.y, base.y_hi + a.y);
    const auto ray = limit_shape_for(QQContext::Thresholded, model, a);
    const auto clipped = clip_shape(ray, w);
    REQUIRE(clipped);
    CHECK(hausdorff(truncate(thresholded_qq_set(s, k), w), *clipped) < 0.3);
}

TEST_CASE("translate") {
    const PointSet ps{{1, 2}, {-3, 0.5}};
    CHECK(translate(ps, {0, 0}) == ps);
    CHECK(translate(PointSet{{1, 2}}, {3, 4}) == PointSet{{4, 6}});
    RngStream rng(1);
    PointSet random;
    // Dyadic coordinates keep the round trip exact.
    for (int i = 0; i < 100; ++i) {
        random.push_back({std::ldexp(std::floor(rng.uniform01() * 4096) - 2048, -9),
                          std::ldexp(std::floor(rng.uniform01() * 4096) - 2048, -9)});
    }
    const Point v{0.25, -8.0};
    CHECK(translate(translate(random, v), -v) == random);
    CHECK(translate(random, v).size() == random.size());
}

TEST_CASE("limit shapes per context") {
    const auto uni = limit_shape_for(QQContext::Uniform, DistributionModel::uniform01());
    CHECK(uni.kind == ShapeKind::Segment);
    CHECK(uni.as_segment().start == Point{0, 0});
    CHECK(uni.as_segment().end == Point{1, 1});

    const auto log_qq = limit_shape_for(QQContext::ParetoLogQQ, DistributionModel::pareto(2.0));
    CHECK(log_qq.kind == ShapeKind::Ray);
    CHECK(log_qq.anchor == Point{0, 0});
    CHECK(log_qq.slope == 0.5);

    const auto thr = limit_shape_for(QQContext::Thresholded, DistributionModel::pareto(1.0), {2, 5});
    CHECK(thr.kind == ShapeKind::Ray);
    CHECK(thr.anchor == Point{2, 5});
    CHECK(thr.slope == 1.0);

    const auto ex = limit_shape_for(QQContext::Exponential, DistributionModel::exponential(3.0));
    CHECK(ex.anchor == Point{0, 0});
    CHECK(ex.slope == 1.0);

    const auto gen = limit_shape_for(QQContext::General, DistributionModel::pareto(1.0));
    CHECK(gen.anchor == Point{1, 1});
    CHECK(gen.slope == 1.0);

    CHECK_THROWS_AS(limit_shape_for(QQContext::ParetoLogQQ, DistributionModel::uniform01()), std::invalid_argument);
    CHECK_THROWS_AS(limit_shape_for(QQContext::Exponential, DistributionModel::pareto(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(LimitShape::ray({0, 0}, 1.0).as_segment(), std::logic_error);
    CHECK_THROWS(LimitShape::segment({1, 0}, {0, 0}));
}

TEST_CASE("point set CSV round trip") {
    const PointSet ps{{0.1, 1.0 / 3.0}, {-2.5e-300, 1e300}, {std::log(2.0), -0.0}};
    std::stringstream io;
    write_point_set_csv(io, ps);
    CHECK(io.str().rfind("x,y\n", 0) == 0);
    CHECK(read_point_set_csv(io) == ps);
    std::stringstream bad("x,y\n1,abc\n");
    CHECK_THROWS_AS(read_point_set_csv(bad), std::runtime_error);
}
