#include "hyproj/oracle.hpp"

#include "hyproj/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyproj {

Oracle2DResult oracle_min_2d(const Reduced2D& r, int grid, int refine_iters)
{
    if (!(r.a > 0.0) || !(r.b > 0.0)) {
        throw DomainError("oracle_min_2d: needs a > 0 and b > 0");
    }
    if (grid < 100 || refine_iters < 1) {
        throw DomainError("oracle_min_2d: grid >= 100 and refine_iters >= 1 required");
    }
    const double a2 = r.a * r.a;
    const double b2 = r.b * r.b;
    const double two_g = 2.0 * r.gamma;

    auto beta_of = [&](double alpha) { return std::sqrt(std::max(0.0, alpha * alpha * a2 - two_g) / b2); };
    auto g = [&](double alpha) {
        const double beta = beta_of(alpha);
        return (1.0 - alpha) * (1.0 - alpha) * a2 + (1.0 - beta) * (1.0 - beta) * b2;
    };

    const double alpha_lo = std::sqrt(std::max(0.0, two_g) / a2);
    // Any feasible point bounds the optimum: (1 - alpha*)^2 a^2 <= g_ref.
    const double g_ref = r.gamma > 0.0 ? g(std::sqrt((b2 + two_g) / a2)) : g(1.0);
    const double alpha_hi =
        std::max(4.0 + 2.0 * std::abs(r.gamma) / a2, 1.0 + std::sqrt(g_ref) / r.a) * (1.0 + 1e-3);
    if (!(alpha_hi > alpha_lo)) {
        throw DomainError("oracle_min_2d: empty feasible range");
    }

    const double h = (alpha_hi - alpha_lo) / (grid - 1);
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double v = g(alpha_lo + i * h);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = alpha_lo + std::max(0, best - 1) * h;
    const double hi = alpha_lo + std::min(grid - 1, best + 1) * h;
    double alpha = golden_section_min(g, lo, hi, refine_iters);
    double value = g(alpha);
    if (best_val < value) {
        alpha = alpha_lo + best * h;
        value = best_val;
    }
    return {alpha, beta_of(alpha), value};
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi, int iters)
{
    const double ratio = 1.0 / std::numbers::phi;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

Reduced2D reduce_bilinear(const PairPoint& query, double gamma)
{
    const Vec& x = query.first().coords();
    const Vec& y = query.second().coords();
    return {(x + y).norm() / std::numbers::sqrt2, (y - x).norm() / std::numbers::sqrt2, gamma};
}

Reduced2D reduce_hyperbola(const PairPoint& query, double gamma)
{
    return {query.first().norm(), query.second().norm(), gamma};
}

PairPoint sample_feasible(const Gamma& gamma, const Point& x_seed, const Point& w)
{
    require_same_dim(x_seed, w, "sample_feasible");
    const double nx2 = x_seed.squared_norm();
    if (!(nx2 > 0.0)) {
        throw DomainError("sample_feasible: x_seed must be nonzero");
    }
    const Vec& x = x_seed.coords();
    const Vec w_perp = w.coords() - (w.coords().dot(x) / nx2) * x;
    return {x_seed, Point(Vec(gamma.value() / nx2 * x + w_perp))};
}

LipschitzReport check_lipschitz_monotone(const std::vector<PairPoint>& zs, const Gamma& gamma)
{
    LipschitzReport report;
    report.min_inner = std::numeric_limits<double>::infinity();
    std::vector<Vec> inputs;
    std::vector<Vec> images;
    for (const PairPoint& z : zs) {
        const ProjectionResult r = project_bilinear(z.first(), z.second(), gamma);
        if (!r.is_singleton()) {
            ++report.excluded_set_valued;
            continue;
        }
        inputs.push_back(z.stacked());
        images.push_back(r.point().stacked());
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = i + 1; j < inputs.size(); ++j) {
            const Vec dz = inputs[i] - inputs[j];
            const double nz = dz.norm();
            if (nz == 0.0) {
                ++report.skipped_identical;
                continue;
            }
            const Vec dp = images[i] - images[j];
            report.max_ratio = std::max(report.max_ratio, dp.norm() / nz);
            report.min_inner = std::min(report.min_inner, dp.dot(dz));
            ++report.pairs_used;
        }
    }
    if (report.pairs_used == 0) {
        report.min_inner = 0.0;
    }
    return report;
}

}  // namespace hyproj
