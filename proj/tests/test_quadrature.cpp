#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

using namespace fsc;

TEST_CASE("two-point rule on uniform[-1,1] is +-1/sqrt(3) with equal weights") {
    const auto r = gauss_rule(Distribution::make_uniform(-1.0, 1.0), 2);
    REQUIRE(r.nodes.size() == 2);
    CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("gamma rule with 135 points integrates the identity to the mean") {
    const auto r = gauss_rule(Distribution::make_gamma(10.0, 0.1, 340.0), 135);
    REQUIRE(r.nodes.size() == 135);
    double mean = 0.0, wsum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        mean += r.nodes[i] * r.weights[i];
        wsum += r.weights[i];
    }
    CHECK(mean == doctest::Approx(440.0).epsilon(1e-9));
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("n-point rules integrate polynomials exactly to degree 2n-1") {
    // O(1)-scale domains keep the raw-moment reference free of cancellation
    const Distribution dists[] = {
        Distribution::make_uniform(-1.0, 1.0),
        Distribution::make_beta(2.0, 5.0, 0.0, 1.0),
        Distribution::make_gamma(10.0, 0.1, 0.0),
    };
    for (const auto& d : dists) {
        for (std::size_t n : {3, 5, 8}) {
            const auto r = gauss_rule(d, n);
            for (unsigned p = 0; p <= 2 * n - 1; ++p) {
                double s = 0.0;
                for (std::size_t i = 0; i < r.nodes.size(); ++i)
                    s += std::pow(r.nodes[i], p) * r.weights[i];
                const double ref = test::raw_moment(d, p);
                const double scale = std::max(1.0, std::abs(ref));
                CHECK(std::abs(s - ref) / scale < 1e-9);
            }
        }
    }
}

TEST_CASE("rule weights are positive") {
    for (std::size_t n : {1, 10, 100}) {
        const auto r = gauss_rule(Distribution::make_beta(2.0, 5.0, 0.0, 1.0), n);
        for (double w : r.weights) CHECK(w > 0.0);
    }
}

TEST_CASE("single-node grid carries the full probability mass") {
    const auto g = test::grid1(Distribution::make_uniform(0.0, 2.0), 1);
    REQUIRE(g->size() == 1);
    CHECK(g->weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g->node(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tensor grid sizes multiply across axes") {
    RandomDomain d2({Distribution::make_uniform(340.0, 460.0),
                     Distribution::make_beta(2.0, 5.0, 51.0, 69.0)});
    CHECK(tensor_grid(d2, {100, 95})->size() == 9500);

    RandomDomain d5({Distribution::make_beta(2.0, 5.0, 850e3, 1150e3),
                     Distribution::make_beta(2.0, 5.0, 680e3, 920e3),
                     Distribution::make_beta(2.0, 5.0, 680e3, 920e3),
                     Distribution::make_uniform(0.4, 0.7),
                     Distribution::make_uniform(0.4e-3, 0.7e-3)});
    CHECK(tensor_grid(d5, {15, 15, 15, 15, 15})->size() == 759375);
}

TEST_CASE("tensor nodes are lexicographic with the first axis slowest") {
    RandomDomain dom({Distribution::make_uniform(0.0, 1.0),
                      Distribution::make_uniform(10.0, 11.0)});
    const auto g = tensor_grid(dom, {2, 3});
    REQUIRE(g->size() == 6);
    const auto ax0 = gauss_rule(dom.axes[0], 2);
    const auto ax1 = gauss_rule(dom.axes[1], 3);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(g->node(i, 0) == doctest::Approx(ax0.nodes[i / 3]).epsilon(1e-15));
        CHECK(g->node(i, 1) == doctest::Approx(ax1.nodes[i % 3]).epsilon(1e-15));
        CHECK(g->weights()[i] ==
              doctest::Approx(ax0.weights[i / 3] * ax1.weights[i % 3]).epsilon(1e-14));
    }
}

TEST_CASE("grid inner products recover the axis moments") {
    const auto g = test::grid1(Distribution::make_uniform(340.0, 460.0), 4);
    const auto xi = GridFunction::from_axis(g, 0, [](double x) { return x; });
    const GridFunction one(g, 1.0);
    CHECK(std::abs(inner(xi, one) - 400.0) < 1e-12 * 400.0);
    const auto centered = GridFunction::from_axis(g, 0, [](double x) { return x - 400.0; });
    CHECK(inner(centered, centered) == doctest::Approx(1200.0).epsilon(1e-9));
}

TEST_CASE("grids carry distinct identities") {
    const auto a = test::grid1(Distribution::make_uniform(0.0, 1.0), 3);
    const auto b = test::grid1(Distribution::make_uniform(0.0, 1.0), 3);
    CHECK(a->id() != b->id());
}
