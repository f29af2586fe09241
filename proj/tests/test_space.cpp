#include "hyproj/hyperbola.hpp"
#include "hyproj/space.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hyproj;
using hyproj::testing::gaussian;

TEST_SUITE("space") {

TEST_CASE("points reject empty and non-finite coordinates")
{
    CHECK_THROWS_AS(Point(Vec(0)), DomainError);
    CHECK_THROWS_AS(Point({1.0, std::numeric_limits<double>::quiet_NaN()}), DomainError);
    CHECK_THROWS_AS(Point({std::numeric_limits<double>::infinity()}), DomainError);
    const Point p{3.0, 4.0};
    CHECK(p.dim() == 2);
    CHECK(p.norm() == 5.0);
    CHECK(p.squared_norm() == 25.0);
    CHECK(Point::unit(3, 1).to_vector() == std::vector<double>{0.0, 1.0, 0.0});
}

TEST_CASE("pairs need matching dimensions")
{
    CHECK_THROWS_AS(PairPoint(Point{1.0}, Point{1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(PairPoint::from_stacked(Vec::Ones(3)), DomainError);
    const PairPoint z(Point{1.0, 2.0}, Point{3.0, 4.0});
    CHECK(PairPoint::from_stacked(z.stacked()) == z);
    CHECK(z.squared_norm() == 30.0);
}

TEST_CASE("gamma zero is the cross and is refused")
{
    CHECK_THROWS_WITH_AS(Gamma(0.0), doctest::Contains("cross"), DomainError);
    CHECK_THROWS_AS(Gamma(std::numeric_limits<double>::infinity()), DomainError);
    CHECK(Gamma(-2.5).negated().value() == 2.5);
}

TEST_CASE("objective and inner product")
{
    const PairPoint a(Point{1.0, 0.0}, Point{0.0, 1.0});
    const PairPoint b(Point{0.0, 0.0}, Point{0.0, 3.0});
    CHECK(objective(a, b) == 5.0);
    CHECK(inner(Point{1.0, 2.0}, Point{3.0, -1.0}) == 1.0);
    CHECK_THROWS_AS(inner(Point{1.0}, Point{1.0, 2.0}), DomainError);
}

TEST_CASE("quarter turns are orthogonal and mutually inverse")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const Eigen::Index n = 1 + k % 7;
        const PairPoint z(Point(gaussian(rng, n)), Point(gaussian(rng, n)));
        const PairPoint r = rotate_quarter(z, -1);
        CHECK(std::abs(r.squared_norm() - z.squared_norm()) <= 1e-12 * (1.0 + z.squared_norm()));
        const Vec back = rotate_quarter(r, +1).stacked();
        CHECK((back - z.stacked()).cwiseAbs().maxCoeff() <= 1e-14 * (1.0 + z.stacked().norm()));
    }
    CHECK_THROWS_AS(rotate_quarter(PairPoint(Point{1.0}, Point{1.0}), 2), DomainError);
}

TEST_CASE("rotation carries the bilinear level set onto the hyperbola")
{
    std::mt19937_64 rng(12);
    for (double g : {-3.0, -0.1, 0.5, 7.0}) {
        for (int k = 0; k < 50; ++k) {
            const Eigen::Index n = 1 + k % 5;
            const Vec x = gaussian(rng, n);
            // y = g x / |x|^2 + (component orthogonal to x)
            Vec w = gaussian(rng, n);
            w -= (w.dot(x) / x.squaredNorm()) * x;
            const PairPoint z(Point(x), Point(Vec(g / x.squaredNorm() * x + w)));
            const double scale = 1.0 + z.squared_norm();
            REQUIRE(std::abs(inner(z.first(), z.second()) - g) <= 1e-12 * scale);
            CHECK(std::abs(hyperbola_residual(rotate_quarter(z, -1), g)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("swap and second-slot negation are involutions")
{
    const PairPoint z(Point{1.0, -2.0}, Point{0.5, 4.0});
    CHECK(swap(swap(z)) == z);
    CHECK(negate_second(negate_second(z)) == z);
    CHECK(swap(z).first() == z.second());
    CHECK(negate_second(z).second() == Point{-0.5, -4.0});
    CHECK(scale_pair(z, 2.0).first() == Point{2.0, -4.0});
    CHECK_THROWS_AS(scale_pair(z, 0.0), DomainError);
}

}
