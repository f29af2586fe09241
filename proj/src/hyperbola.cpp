#include "hyproj/hyperbola.hpp"

#include <algorithm>
#include <cmath>

namespace hyproj {

namespace {

HyperbolaCase classify_positive(double nu, double nv, double gamma, const Tolerances& tol)
{
    const double cutoff = tol.deg * (1.0 + nu + nv);
    if (nu <= cutoff) {
        return HyperbolaCase::FirstZero;
    }
    if (nv <= cutoff) {
        // Equality goes to the sphere branch; both formulas give (u0/2, 0) there.
        return nu >= 2.0 * std::sqrt(2.0 * gamma) ? HyperbolaCase::SecondZeroLarge
                                                   : HyperbolaCase::SecondZeroSmall;
    }
    return HyperbolaCase::Generic;
}

ProjectionResult project_positive(const Point& u0, const Point& v0, double gamma, const Tolerances& tol)
{
    require_same_dim(u0, v0, "hyperbola projection");
    const Eigen::Index n = u0.dim();
    const double nu = u0.norm();
    const double nv = v0.norm();

    switch (classify_positive(nu, nv, gamma, tol)) {
    case HyperbolaCase::FirstZero:
        return make_family({Point::zero(n), Point(Vec(0.5 * v0.coords())), 1.0, 0.0,
                            std::sqrt(2.0 * gamma + 0.25 * nv * nv)});
    case HyperbolaCase::SecondZeroLarge:
        return make_family({Point(Vec(0.5 * u0.coords())), Point::zero(n), 0.0, 1.0,
                            std::sqrt(std::max(0.0, 0.25 * nu * nu - 2.0 * gamma))});
    case HyperbolaCase::SecondZeroSmall:
        return make_singleton({Point(Vec(std::sqrt(2.0 * gamma) / nu * u0.coords())), Point::zero(n)});
    case HyperbolaCase::Generic:
        break;
    }

    const HParams params = HParams::from_squared_norms(nu * nu, nv * nv, gamma);
    const RootResult root = solve_lambda(params, tol.root * (1.0 + params.q()));
    return make_singleton(
        {Point(Vec(u0.coords() / root.one_plus)), Point(Vec(v0.coords() / root.one_minus))}, root);
}

}  // namespace

std::string_view to_string(HyperbolaCase k)
{
    switch (k) {
    case HyperbolaCase::Generic: return "Generic";
    case HyperbolaCase::FirstZero: return "FirstZero";
    case HyperbolaCase::SecondZeroLarge: return "SecondZeroLarge";
    case HyperbolaCase::SecondZeroSmall: return "SecondZeroSmall";
    }
    return "?";
}

HyperbolaCase classify_hyperbola(const Point& u0, const Point& v0, const Gamma& gamma, const Tolerances& tol)
{
    require_same_dim(u0, v0, "classify_hyperbola");
    const double g = gamma.value();
    return g > 0.0 ? classify_positive(u0.norm(), v0.norm(), g, tol)
                   : classify_positive(v0.norm(), u0.norm(), -g, tol);
}

ProjectionResult project_h1(const Point& u0, const Point& v0, const Tolerances& tol)
{
    return project_positive(u0, v0, 1.0, tol);
}

ProjectionResult project_hgamma(const Point& u0, const Point& v0, const HyperbolaSpec& spec,
                                const Tolerances& tol)
{
    const double g = spec.gamma.value();
    if (g > 0.0) {
        return project_positive(u0, v0, g, tol);
    }
    return swap(project_positive(v0, u0, -g, tol));
}

double hyperbola_residual(const PairPoint& z, double gamma)
{
    return z.first().squared_norm() - z.second().squared_norm() - 2.0 * gamma;
}

}  // namespace hyproj
