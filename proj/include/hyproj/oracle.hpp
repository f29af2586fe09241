#pragma once

#include "hyproj/space.hpp"

#include <functional>
#include <vector>

namespace hyproj {

/// Brute-force reference for projections onto ||u||^2 - ||v||^2 = 2 gamma.
///
/// The optimal (u, v) is a nonnegative multiple of the query slots,
/// u = alpha u0 and v = beta v0, which leaves the two-variable problem
///
///   minimize   (1 - alpha)^2 a^2 + (1 - beta)^2 b^2
///   subject to alpha^2 a^2 - beta^2 b^2 = 2 gamma,  alpha, beta >= 0
///
/// with a = ||u0||, b = ||v0||. Eliminating beta turns it into a scan over
/// alpha. Nothing here calls the root finder or the closed-form projectors.
struct Reduced2D {
    double a = 0.0;
    double b = 0.0;
    double gamma = 0.0;
};

struct Oracle2DResult {
    double alpha = 0.0;
    double beta = 0.0;
    double value = 0.0;
};

constexpr int kOracleGrid = 10001;
constexpr int kOracleRefine = 80;

/// Dense scan over alpha followed by golden-section refinement around the
/// best grid cell. Requires a > 0, b > 0, grid >= 100.
Oracle2DResult oracle_min_2d(const Reduced2D& r, int grid = kOracleGrid, int refine_iters = kOracleRefine);

/// Reduced problem for a bilinear query (x0, y0): a = ||x0 + y0||/sqrt2,
/// b = ||y0 - x0||/sqrt2.
Reduced2D reduce_bilinear(const PairPoint& query, double gamma);

/// Reduced problem for a hyperbola query (u0, v0).
Reduced2D reduce_hyperbola(const PairPoint& query, double gamma);

/// Minimizer of a function on [lo, hi] by golden-section search.
double golden_section_min(const std::function<double(double)>& f, double lo, double hi, int iters);

/// (x, gamma x/||x||^2 + w_perp) with w_perp the part of w orthogonal to x;
/// lies on <x, y> = gamma up to rounding.
PairPoint sample_feasible(const Gamma& gamma, const Point& x_seed, const Point& w);

struct LipschitzReport {
    double max_ratio = 0.0;      ///< max ||P z1 - P z2|| / ||z1 - z2||
    double min_inner = 0.0;      ///< min <P z1 - P z2, z1 - z2>
    int pairs_used = 0;
    int skipped_identical = 0;
    int excluded_set_valued = 0; ///< inputs whose projection was not a singleton
};

/// Empirical local Lipschitz / monotonicity statistics of the bilinear
/// projector over all pairs of the sample. Purely diagnostic.
LipschitzReport check_lipschitz_monotone(const std::vector<PairPoint>& zs, const Gamma& gamma);

}  // namespace hyproj
