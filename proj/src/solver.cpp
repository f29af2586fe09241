#include "hyproj/solver.hpp"

#include "hyproj/bilinear.hpp"

#include <cmath>

namespace hyproj {

AuxSet AuxSet::fixed(std::vector<bool> mask, std::vector<double> values)
{
    if (mask.size() != values.size() || mask.empty() || mask.size() % 2 != 0) {
        throw DomainError("fixed-coordinates set: mask and values must have equal even length");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw DomainError("fixed-coordinates set: values must be finite");
        }
    }
    const auto n = static_cast<Eigen::Index>(mask.size() / 2);
    return {FixedCoordinates{std::move(mask), std::move(values)}, n};
}

AuxSet AuxSet::fixed_first(const Point& x)
{
    const auto n = static_cast<std::size_t>(x.dim());
    std::vector<bool> mask(2 * n, false);
    std::vector<double> values(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        mask[i] = true;
        values[i] = x[static_cast<Eigen::Index>(i)];
    }
    return fixed(std::move(mask), std::move(values));
}

AuxSet AuxSet::ball(PairPoint center, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("ball: radius must be positive");
    }
    const Eigen::Index n = center.dim();
    return {Ball{std::move(center), radius}, n};
}

PairPoint project_aux(const PairPoint& z, const AuxSet& s)
{
    if (z.dim() != s.dim()) {
        throw DomainError("project_aux: dimension mismatch");
    }
    Vec v = z.stacked();
    if (const auto* fc = std::get_if<FixedCoordinates>(&s.kind())) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (fc->mask[static_cast<std::size_t>(i)]) {
                v[i] = fc->values[static_cast<std::size_t>(i)];
            }
        }
        return PairPoint::from_stacked(v);
    }
    const Ball& b = std::get<Ball>(s.kind());
    const Vec c = b.center.stacked();
    const Vec d = v - c;
    const double n = d.norm();
    if (n <= b.radius) {
        return z;
    }
    return PairPoint::from_stacked(c + (b.radius / n) * d);
}

double distance_to_aux(const PairPoint& z, const AuxSet& s)
{
    return (z.stacked() - project_aux(z, s).stacked()).norm();
}

PairPoint select_member(const ProjectionResult& r, const PairPoint& previous)
{
    if (r.is_singleton()) {
        return r.point();
    }
    // Over ||w|| = radius, the member nearest to previous has w parallel to
    // c1 (x - b1) + c2 (y - b2).
    const SphereFamily& f = r.family();
    const Vec hint = f.coeff_first * (previous.first().coords() - f.base_first.coords()) +
                     f.coeff_second * (previous.second().coords() - f.base_second.coords());
    return representative(r, Point(hint));
}

namespace {

void check_options(const PairPoint& z0, const AuxSet& s, const SolverOptions& opt)
{
    if (opt.max_iter < 1) {
        throw DomainError("solver: max_iter must be >= 1");
    }
    if (!(opt.eps > 0.0)) {
        throw DomainError("solver: eps must be positive");
    }
    if (z0.dim() != s.dim()) {
        throw DomainError("solver: start point and auxiliary set differ in dimension");
    }
}

PairPoint project_c(const PairPoint& z, const Gamma& gamma, const Tolerances& tol)
{
    return select_member(project_bilinear(z.first(), z.second(), gamma, tol), z);
}

}  // namespace

SolverTrace map_solve(const PairPoint& z0, const Gamma& gamma, const AuxSet& s, const SolverOptions& opt)
{
    check_options(z0, s, opt);
    const double bound = kDivergenceFactor * (1.0 + std::sqrt(z0.squared_norm()));
    SolverTrace trace;
    PairPoint z = z0;
    for (int k = 1; k <= opt.max_iter; ++k) {
        const PairPoint c = project_c(z, gamma, opt.tol);
        PairPoint next = project_aux(c, s);
        const IterationResidual res{bilinear_residual(next, gamma.value()),
                                    (c.stacked() - next.stacked()).norm()};
        trace.iterates.push_back(next);
        trace.residuals.push_back(res);
        trace.iterations = k;
        z = std::move(next);
        if (res.constraint <= opt.eps && res.aux <= opt.eps) {
            trace.converged = true;
            break;
        }
        if (std::sqrt(z.squared_norm()) > bound) {
            trace.diverged = true;
            break;
        }
    }
    trace.solution = z;
    return trace;
}

SolverTrace dr_solve(const PairPoint& z0, const Gamma& gamma, const AuxSet& s, const SolverOptions& opt)
{
    check_options(z0, s, opt);
    const double bound = kDivergenceFactor * (1.0 + std::sqrt(z0.squared_norm()));
    SolverTrace trace;
    PairPoint z = z0;
    for (int k = 1; k <= opt.max_iter; ++k) {
        const PairPoint c = project_c(z, gamma, opt.tol);
        const IterationResidual res{bilinear_residual(c, gamma.value()), distance_to_aux(c, s)};
        trace.iterates.push_back(z);
        trace.residuals.push_back(res);
        trace.iterations = k;
        trace.solution = c;
        if (res.constraint <= opt.eps && res.aux <= opt.eps) {
            trace.converged = true;
            break;
        }
        const Vec cz = c.stacked();
        const Vec a = project_aux(PairPoint::from_stacked(2.0 * cz - z.stacked()), s).stacked();
        z = PairPoint::from_stacked(z.stacked() + a - cz);
        if (std::sqrt(z.squared_norm()) > bound) {
            trace.diverged = true;
            break;
        }
    }
    return trace;
}

}  // namespace hyproj
