#include "hyproj/rootfind.hpp"

#include "hyproj/space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyproj {

namespace {

void require_inside(double lambda)
{
    if (!(std::abs(lambda) < 1.0)) {
        throw DomainError("multiplier must satisfy |lambda| < 1, got " + std::to_string(lambda));
    }
}

// Distance-to-pole form of H on one half-interval. side = -1 covers
// ]-1, 0] with t = 1 + lambda; side = +1 covers [0, 1[ with t = 1 - lambda.
// value() is oriented so that it decreases in t.
struct PoleChart {
    const HParams& params;
    int side;

    [[nodiscard]] double one_plus(double t) const { return side < 0 ? t : 2.0 - t; }
    [[nodiscard]] double one_minus(double t) const { return side < 0 ? 2.0 - t : t; }
    [[nodiscard]] double lambda(double t) const { return side * (1.0 - t); }

    [[nodiscard]] double h(double t) const
    {
        const double a = one_plus(t);
        const double b = one_minus(t);
        return params.u_sq() / (2.0 * a * a) - params.v_sq() / (2.0 * b * b) - params.c();
    }
    [[nodiscard]] double value(double t) const { return -side * h(t); }
    [[nodiscard]] double slope(double t) const
    {
        const double a = one_plus(t);
        const double b = one_minus(t);
        return -(params.u_sq() / (a * a * a) + params.v_sq() / (b * b * b));
    }
};

// Smallest-offset endpoint with value > 0, starting at kPoleOffset. Moves
// away from the pole while the value overflows, towards it while the sign
// is not yet visible.
double pole_end(const PoleChart& chart)
{
    double t = kPoleOffset;
    double g = chart.value(t);
    while (!std::isfinite(g) && t < 0.5) {
        t *= 10.0;
        g = chart.value(t);
    }
    while (std::isfinite(g) && g <= 0.0 && t > 1e-300) {
        t *= 1e-4;
        g = chart.value(t);
    }
    if (!std::isfinite(g) || g <= 0.0) {
        throw ConvergenceError("multiplier equation has no representable sign change");
    }
    return t;
}

}  // namespace

HParams::HParams(double p, double q, double c)
{
    if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(c)) {
        throw DomainError("HParams: coefficients must be finite");
    }
    if (!(q > std::abs(p))) {
        throw DomainError("HParams: need q > |p| (both reduced inputs nonzero)");
    }
    if (!(c > 0.0)) {
        throw DomainError("HParams: need level c > 0");
    }
    u_sq_ = 0.5 * (q + p);
    v_sq_ = 0.5 * (q - p);
    c_ = c;
}

HParams HParams::from_squared_norms(double u_sq, double v_sq, double c)
{
    if (!std::isfinite(u_sq) || !std::isfinite(v_sq) || !std::isfinite(c)) {
        throw DomainError("HParams: coefficients must be finite");
    }
    if (!(u_sq > 0.0) || !(v_sq > 0.0)) {
        throw DomainError("HParams: both reduced inputs must be nonzero");
    }
    if (!(c > 0.0)) {
        throw DomainError("HParams: need level c > 0");
    }
    HParams h;
    h.u_sq_ = u_sq;
    h.v_sq_ = v_sq;
    h.c_ = c;
    return h;
}

double default_root_tol(const HParams& params) { return kRootRelTol * (1.0 + params.q()); }

double eval_H(double lambda, const HParams& params)
{
    require_inside(lambda);
    const double a = 1.0 + lambda;
    const double b = 1.0 - lambda;
    return params.u_sq() / (2.0 * a * a) - params.v_sq() / (2.0 * b * b) - params.c();
}

double eval_Hprime(double lambda, const HParams& params)
{
    require_inside(lambda);
    const double a = 1.0 + lambda;
    const double b = 1.0 - lambda;
    return -params.u_sq() / (a * a * a) - params.v_sq() / (b * b * b);
}

RootResult solve_lambda(const HParams& params) { return solve_lambda(params, default_root_tol(params)); }

RootResult solve_lambda(const HParams& params, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("solve_lambda: tol must be positive");
    }
    const double h0 = eval_H(0.0, params);
    if (h0 == 0.0) {
        return {0.0, 0.0, 1, 0.0, 1.0, 1.0};
    }
    const PoleChart chart{params, h0 > 0.0 ? +1 : -1};
    auto result = [&](double t, double g, int it, double width) {
        return RootResult{chart.lambda(t), -chart.side * g, it, width, chart.one_plus(t), chart.one_minus(t)};
    };

    // value(lo) > 0 > value(hi) throughout.
    double lo = pole_end(chart);
    double hi = 1.0;

    double t = std::clamp(1.0 - chart.side * params.p() / (2.0 * params.q()), lo, hi);
    double step_old = hi - lo;
    double step = step_old;

    for (int it = 1; it <= kRootMaxIter; ++it) {
        const double g = chart.value(t);
        if (g == 0.0) {
            return result(t, g, it, 0.0);
        }
        (g > 0.0 ? lo : hi) = t;
        if (std::abs(g) <= tol && hi - lo <= tol) {
            // One last Newton step, kept only if it improves the residual.
            const double polished = t - g / chart.slope(t);
            if (polished >= lo && polished <= hi) {
                const double gp = chart.value(polished);
                if (std::abs(gp) < std::abs(g)) {
                    return result(polished, gp, it + 1, hi - lo);
                }
            }
            return result(t, g, it, hi - lo);
        }

        const double dg = chart.slope(t);
        double next = t - g / dg;

        // Newton has settled: close the bracket around the new estimate so
        // the width criterion can be met from one side as well. This comes
        // before the bracket test because a settled step may round onto t,
        // which is itself an endpoint now.
        if (std::abs(g) <= tol && std::abs(next - t) <= 0.25 * tol) {
            for (double probe : {std::max(lo, next - 0.5 * tol), std::min(hi, next + 0.5 * tol)}) {
                const double gp = chart.value(probe);
                if (gp > 0.0) {
                    lo = std::max(lo, probe);
                } else if (gp < 0.0) {
                    hi = std::min(hi, probe);
                }
            }
            step = next - t;
            t = std::clamp(next, lo, hi);
            continue;
        }

        const bool outside = !(next > lo && next < hi) || !std::isfinite(next);
        step_old = step;
        if (outside || std::abs(2.0 * g) > std::abs(step_old * dg)) {
            next = (lo > 0.0 && hi > 4.0 * lo) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        }
        step = next - t;
        t = next;
    }
    throw ConvergenceError("solve_lambda: no convergence within " + std::to_string(kRootMaxIter) +
                           " iterations");
}

}  // namespace hyproj
