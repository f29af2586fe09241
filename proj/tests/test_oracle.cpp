#include "hyproj/bilinear.hpp"
#include "hyproj/hyperbola.hpp"
#include "hyproj/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyproj;
using namespace hyproj::testing;

TEST_SUITE("oracle") {

TEST_CASE("reduced problem rejects degenerate data")
{
    CHECK_THROWS_AS(oracle_min_2d({0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(oracle_min_2d({1.0, 0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(oracle_min_2d({1.0, 1.0, 1.0}, 50), DomainError);
}

TEST_CASE("golden section on a parabola")
{
    const double m = golden_section_min([](double t) { return (t - 0.3) * (t - 0.3); }, -2.0, 5.0, 100);
    CHECK(m == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("oracle reproduces the worked bilinear value")
{
    const PairPoint q(Point{1.0, 0.0}, Point{0.0, 1.0});
    const Oracle2DResult o = oracle_min_2d(reduce_bilinear(q, 1.0));
    CHECK(std::abs(o.value - 0.42278141242160727) <= 1e-9);
    // a = b = 1 here, so the constraint reads alpha^2 - beta^2 = 2.
    CHECK(o.alpha * o.alpha - o.beta * o.beta == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("closed forms never lose to the oracle")
{
    std::mt19937_64 rng(51);
    for (int k = 0; k < 200; ++k) {
        const Eigen::Index n = 1 + k % 3;
        const double g = (k % 2 ? 1.0 : -1.0) * log_uniform(rng, 0.1, 10.0);
        const PairPoint q(Point(gaussian(rng, n)), Point(gaussian(rng, n)));
        const bool hyper = k % 4 < 2;
        double lib = 0.0;
        Reduced2D red;
        if (hyper) {
            lib = objective(q, representative(project_hgamma(q.first(), q.second(), HyperbolaSpec{Gamma(g)})));
            red = reduce_hyperbola(q, g);
        } else {
            lib = objective(q, representative(project_bilinear(q.first(), q.second(), Gamma(g))));
            red = reduce_bilinear(q, g);
        }
        const Oracle2DResult o = oracle_min_2d(red);
        CHECK(lib <= o.value + 1e-6 * (1.0 + o.value));
        // The oracle is a true feasible value, so it cannot beat the minimum by much either.
        CHECK(o.value <= lib + 1e-6 * (1.0 + lib));
    }
}

TEST_CASE("feasible sampler")
{
    std::mt19937_64 rng(52);
    for (int k = 0; k < 100; ++k) {
        const Eigen::Index n = 1 + k % 5;
        const Gamma g((k % 2 ? 1.0 : -1.0) * log_uniform(rng, 0.1, 10.0));
        const PairPoint z = sample_feasible(g, Point(gaussian(rng, n)), Point(gaussian(rng, n)));
        CHECK(bilinear_residual(z, g.value()) <= 1e-12 * (1.0 + z.squared_norm()));
    }
    CHECK_THROWS_AS(sample_feasible(Gamma(1.0), Point::zero(2), Point{1.0, 1.0}), DomainError);
}

TEST_CASE("monotonicity report counts its inputs")
{
    std::mt19937_64 rng(53);
    std::vector<PairPoint> zs;
    const PairPoint centre(Point{1.0, 0.5}, Point{0.3, 2.0});
    for (int k = 0; k < 20; ++k) {
        const Vec d = 1e-3 * gaussian(rng, 4);
        zs.push_back(PairPoint::from_stacked(centre.stacked() + d));
    }
    zs.push_back(zs.front());
    zs.emplace_back(Point{2.0, 0.0}, Point{2.0, 0.0});
    const LipschitzReport rep = check_lipschitz_monotone(zs, Gamma(1.0));
    CHECK(rep.excluded_set_valued == 1);
    CHECK(rep.skipped_identical == 1);
    CHECK(rep.pairs_used == 21 * 20 / 2 - 1);
    CHECK(rep.max_ratio > 0.0);
    CHECK(std::isfinite(rep.min_inner));
}

}
