#include "doctest.h"

#include <cmath>

#include "rhg/errors.hpp"
#include "rhg/layers.hpp"
#include "rhg/sampler.hpp"

using namespace rhg;

TEST_CASE("default constants are degenerate at desk scale") {
    // alpha = 3/2 makes the derived base offset 4*alpha/(alpha-1) = 12
    const double R = 14.0;
    const LayerDecomposition d = decompose_layers({}, R, 1.5);
    CHECK(d.base_offset == doctest::Approx(12.0));
    CHECK(d.spacing == 3.0);
    CHECK(d.t_max == doctest::Approx(R / 3.0).epsilon(1e-15));
    REQUIRE(d.t_levels.size() == 1);
    CHECK(d.t_levels[0] == doctest::Approx(12.0 * std::log(14.0)).epsilon(1e-15));
    CHECK(d.t_levels[0] > d.t_max);
    CHECK(d.degenerate());
    CHECK(d.i_max() == 0);
}

TEST_CASE("overridden constants give a two-band decomposition at R = 14") {
    LayerOptions o;
    o.base_offset = 1.0;
    o.spacing = 1.0;
    const LayerDecomposition d = decompose_layers({}, 14.0, 1.5, o);
    const double lr = std::log(14.0);
    REQUIRE(d.t_levels.size() == 2);
    CHECK(d.t_levels[0] == doctest::Approx(lr).epsilon(1e-15));
    CHECK(d.t_levels[1] == doctest::Approx(2.0 * lr).epsilon(1e-15));
    CHECK(d.i_max() == 1);
    CHECK(!d.degenerate());
    // i_max is the first level at or past t_max
    CHECK(d.t_levels[1] >= d.t_max);
    CHECK(d.t_levels[0] < d.t_max);
}

TEST_CASE("level grid and widths at the monte-carlo working point") {
    // alpha 3/2, n = 1e5, nu 1: R = 2 log(1e5)
    const double R = 2.0 * std::log(1e5);
    LayerOptions o;
    o.base_offset = 1.0;
    o.spacing = 1.0;
    const LayerDecomposition d = decompose_layers({}, R, 1.5, o);
    REQUIRE(d.t_levels.size() == 3);
    CHECK(d.t_levels[0] == doctest::Approx(3.1366).epsilon(1e-4));
    CHECK(d.t_levels[1] == doctest::Approx(6.2732).epsilon(1e-4));
    CHECK(d.t_levels[2] == doctest::Approx(9.4097).epsilon(1e-4));
    CHECK(d.t_max == doctest::Approx(7.6753).epsilon(1e-4));
    CHECK(d.i_max() == 2);
    CHECK(d.theta(0, 0) == doctest::Approx(4.6086e-4).epsilon(1e-3));
    CHECK(d.theta(1, 1) == doctest::Approx(0.010594).epsilon(1e-3));
    CHECK(d.theta(2, 2) == doctest::Approx(0.244132).epsilon(1e-3));
    // symmetric up to rounding in the exponent, equal to the exponential form
    CHECK(d.theta(2, 0) == doctest::Approx(d.theta(0, 2)).epsilon(1e-14));
    CHECK(d.theta(2, 1) ==
          doctest::Approx(2.0 * std::exp(-0.5 * (R - d.t_levels[2] - d.t_levels[1]))));
}

TEST_CASE("band membership is half-open on level boundaries") {
    LayerOptions o;
    o.base_offset = 1.0;
    o.spacing = 1.0;
    const LayerDecomposition d = decompose_layers({}, 14.0, 1.5, o);
    const double t0 = d.t_levels[0], t1 = d.t_levels[1];
    CHECK(d.layer_of_t(0.0) == 0);
    CHECK(d.layer_of_t(t0 * 0.999) == 0);
    CHECK(d.layer_of_t(t0) == 1);
    CHECK(d.layer_of_t(std::nextafter(t1, 0.0)) == 1);
    CHECK(d.layer_of_t(t1) == LayerDecomposition::kAboveTop);
    CHECK(d.layer_of_t(t1 + 5.0) == LayerDecomposition::kAboveTop);
    CHECK_THROWS_AS(d.layer_of_t(-0.001), domain_error);
}

TEST_CASE("vertices partition into bands plus the above-top remainder") {
    ModelParams p;
    p.alpha = 1.5;
    p.nu = 1.0;
    p.n = 30000.0;
    p.seed = 8;
    const VertexSample s = sample_vertices(p, SampleMode::poisson);
    LayerOptions o;
    o.base_offset = 1.0;
    o.spacing = 1.0;
    const LayerDecomposition d = decompose_layers(s.points, s.R, p.alpha, o);
    std::size_t total = d.above_top.size();
    for (std::size_t i = 0; i < d.layers.size(); ++i) {
        total += d.layers[i].size();
        for (std::size_t k = 0; k < d.layers[i].size(); ++k) {
            const std::uint32_t v = d.layers[i][k];
            CHECK(d.layer_of_t(s.points[v].t) == i);
            if (k) CHECK(v > d.layers[i][k - 1]); // angular order == id order
        }
    }
    CHECK(total == s.points.size());
    for (std::uint32_t v : d.above_top) CHECK(s.points[v].t >= d.t_top());
    // shallow band dominates in the thin-tail regime
    CHECK(d.layers[0].size() > s.points.size() / 2);
}

TEST_CASE("layer construction guards its domain") {
    CHECK_THROWS_AS(decompose_layers({}, 14.0, 1.0), domain_error);
    CHECK_THROWS_AS(decompose_layers({}, 14.0, 0.8), domain_error);
    CHECK_THROWS_AS(decompose_layers({}, 1.0, 1.5), domain_error);   // log R = 0
    CHECK_THROWS_AS(decompose_layers({}, 0.5, 1.5), domain_error);   // log R < 0
    LayerOptions bad;
    bad.spacing = 0.0;
    CHECK_THROWS_AS(decompose_layers({}, 14.0, 1.5, bad), domain_error);
    LayerOptions zero_base;
    zero_base.base_offset = 0.0;
    CHECK_THROWS_AS(decompose_layers({}, 14.0, 1.5, zero_base), domain_error);
}
