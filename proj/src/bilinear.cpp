#include "hyproj/bilinear.hpp"

#include "hyproj/hyperbola.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyproj {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Point negated(const Point& p) { return Point(Vec(-p.coords())); }

CaseKind classify_positive(const Vec& x0, const Vec& y0, double gamma, const Tolerances& tol)
{
    const double cutoff = tol.deg * (1.0 + x0.norm() + y0.norm());
    if ((x0 + y0).norm() <= cutoff) {
        return CaseKind::AntiDiagonal;
    }
    if ((x0 - y0).norm() <= cutoff) {
        const double m = (0.5 * (x0 + y0)).norm();
        return m >= 2.0 * std::sqrt(gamma) ? CaseKind::DiagonalLarge : CaseKind::DiagonalSmall;
    }
    return CaseKind::Generic;
}

ProjectionResult project_positive(const Point& x0p, const Point& y0p, double gamma, const Tolerances& tol)
{
    const Vec& x0 = x0p.coords();
    const Vec& y0 = y0p.coords();
    const Eigen::Index n = x0.size();

    switch (classify_positive(x0, y0, gamma, tol)) {
    case CaseKind::AntiDiagonal: {
        const Vec d = 0.5 * (x0 - y0);
        return make_family({Point(Vec(0.5 * d)), Point(Vec(-0.5 * d)), kInvSqrt2, kInvSqrt2,
                            std::sqrt(2.0 * gamma + 0.5 * d.squaredNorm())});
    }
    case CaseKind::DiagonalLarge: {
        const Vec m = 0.5 * (x0 + y0);
        return make_family({Point(Vec(0.5 * m)), Point(Vec(0.5 * m)), -kInvSqrt2, kInvSqrt2,
                            std::sqrt(std::max(0.0, 0.5 * m.squaredNorm() - 2.0 * gamma))});
    }
    case CaseKind::DiagonalSmall: {
        const Vec m = 0.5 * (x0 + y0);
        const Vec e = std::sqrt(gamma) / m.norm() * m;
        return make_singleton({Point(e), Point(e)});
    }
    case CaseKind::Generic:
        break;
    }

    const HParams params =
        HParams::from_squared_norms(0.5 * (x0 + y0).squaredNorm(), 0.5 * (y0 - x0).squaredNorm(), gamma);
    const RootResult root = solve_lambda(params, tol.root * (1.0 + params.q()));
    const double a = root.one_plus;
    const double b = root.one_minus;
    // x0 - l y0 and y0 - l x0, rewritten around the nearer pole to keep the
    // small factor exact.
    Vec xn(n);
    Vec yn(n);
    if (b <= a) {
        xn = (x0 - y0) + b * y0;
        yn = (y0 - x0) + b * x0;
    } else {
        xn = (x0 + y0) - a * y0;
        yn = (y0 + x0) - a * x0;
    }
    const double denom = a * b;
    return make_singleton({Point(Vec(xn / denom)), Point(Vec(yn / denom))}, root);
}

}  // namespace

std::string_view to_string(CaseKind k)
{
    switch (k) {
    case CaseKind::Generic: return "Generic";
    case CaseKind::AntiDiagonal: return "AntiDiagonal";
    case CaseKind::DiagonalLarge: return "DiagonalLarge";
    case CaseKind::DiagonalSmall: return "DiagonalSmall";
    }
    return "?";
}

CaseTag classify(const Point& x0, const Point& y0, const Gamma& gamma, const Tolerances& tol)
{
    require_same_dim(x0, y0, "classify");
    if (gamma.value() > 0.0) {
        return {classify_positive(x0.coords(), y0.coords(), gamma.value(), tol), std::nullopt};
    }
    return {classify_positive(x0.coords(), -y0.coords(), -gamma.value(), tol), std::nullopt};
}

ProjectionResult project_bilinear(const Point& x0, const Point& y0, const Gamma& gamma, const Tolerances& tol)
{
    require_same_dim(x0, y0, "bilinear projection");
    if (gamma.value() > 0.0) {
        return project_positive(x0, y0, gamma.value(), tol);
    }
    return negate_second(project_positive(x0, negated(y0), -gamma.value(), tol));
}

ProjectionResult project_bilinear_by_rotation(const Point& x0, const Point& y0, const Gamma& gamma,
                                              const Tolerances& tol)
{
    const PairPoint rotated = rotate_quarter(PairPoint(x0, y0), -1);
    return rotate_quarter(project_hgamma(rotated.first(), rotated.second(), HyperbolaSpec{gamma}, tol), +1);
}

PairPoint representative(const ProjectionResult& result, const std::optional<Point>& hint)
{
    if (hint && hint->dim() != result.dim()) {
        throw DomainError("representative: hint has wrong dimension");
    }
    if (result.is_singleton()) {
        return result.point();
    }
    const SphereFamily& f = result.family();
    if (f.radius == 0.0) {
        return f.member(Vec::Zero(f.base_first.dim()));
    }
    for (const Point* d : {hint ? &*hint : nullptr, &f.base_first, &f.base_second}) {
        if (d != nullptr && d->norm() > 0.0) {
            return f.member_along(d->coords());
        }
    }
    return f.member_along(Vec::Unit(f.base_first.dim(), 0));
}

double bilinear_residual(const PairPoint& z, double gamma)
{
    return std::abs(inner(z.first(), z.second()) - gamma);
}

}  // namespace hyproj
