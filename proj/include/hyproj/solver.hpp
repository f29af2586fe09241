#pragma once

#include "hyproj/projection.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace hyproj {

/// Coordinates of the stacked pair (x; y) with mask[i] set are pinned to values[i].
struct FixedCoordinates {
    std::vector<bool> mask;
    std::vector<double> values;
};

struct Ball {
    PairPoint center;
    double radius = 1.0;
};

/// Convex auxiliary set intersected with C_gamma by the feasibility solvers.
class AuxSet {
public:
    static AuxSet fixed(std::vector<bool> mask, std::vector<double> values);
    /// Pins the whole x slot to x.
    static AuxSet fixed_first(const Point& x);
    static AuxSet ball(PairPoint center, double radius);

    [[nodiscard]] const std::variant<FixedCoordinates, Ball>& kind() const noexcept { return kind_; }
    /// Pair dimension n (the set lives in R^n x R^n).
    [[nodiscard]] Eigen::Index dim() const noexcept { return dim_; }

private:
    AuxSet(std::variant<FixedCoordinates, Ball> kind, Eigen::Index dim) : kind_(std::move(kind)), dim_(dim) {}
    std::variant<FixedCoordinates, Ball> kind_;
    Eigen::Index dim_;
};

PairPoint project_aux(const PairPoint& z, const AuxSet& s);
double distance_to_aux(const PairPoint& z, const AuxSet& s);

struct IterationResidual {
    double constraint = 0.0;  ///< |<x, y> - gamma|
    double aux = 0.0;         ///< distance to the auxiliary set
};

struct SolverTrace {
    std::vector<PairPoint> iterates;
    std::vector<IterationResidual> residuals;
    bool converged = false;
    bool diverged = false;
    int iterations = 0;
    std::optional<PairPoint> solution;  ///< reported point (last candidate if not converged)
};

struct SolverOptions {
    int max_iter = 200;
    double eps = 1e-6;
    Tolerances tol;
};

/// Iterate norms beyond this multiple of (1 + ||z0||) abort the run.
constexpr double kDivergenceFactor = 1e6;

/// Alternating projections z <- P_aux(P_C(z)). Residuals at step k are
/// measured at the new iterate (constraint) and between the C-point and
/// the new iterate (aux).
SolverTrace map_solve(const PairPoint& z0, const Gamma& gamma, const AuxSet& s, const SolverOptions& opt = {});

/// Douglas-Rachford z <- z + P_aux(2 P_C(z) - z) - P_C(z); the candidate
/// at step k is P_C(z_k).
SolverTrace dr_solve(const PairPoint& z0, const Gamma& gamma, const AuxSet& s, const SolverOptions& opt = {});

/// Member of a bilinear projection closest to `previous`, used to select
/// from set-valued steps.
PairPoint select_member(const ProjectionResult& r, const PairPoint& previous);

}  // namespace hyproj
