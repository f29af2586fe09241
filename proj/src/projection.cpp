#include "hyproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace hyproj {

PairPoint SphereFamily::member(const Vec& w) const
{
    if (w.size() != base_first.dim()) {
        throw DomainError("family member: dimension mismatch");
    }
    return {Point(Vec(base_first.coords() + coeff_first * w)),
            Point(Vec(base_second.coords() + coeff_second * w))};
}

PairPoint SphereFamily::member_along(const Vec& direction) const
{
    const double n = direction.norm();
    if (!(n > 0.0)) {
        throw DomainError("family member: zero direction");
    }
    return member(direction * (radius / n));
}

Eigen::Index ProjectionResult::dim() const
{
    return is_singleton() ? point().dim() : family().base_first.dim();
}

ProjectionResult make_singleton(PairPoint p, std::optional<RootResult> root)
{
    ProjectionResult r{Singleton{std::move(p)}, root, false};
    if (root) {
        r.ill_conditioned = std::min(root->one_plus, root->one_minus) < kIllConditioned;
    }
    return r;
}

ProjectionResult make_family(SphereFamily f) { return {std::move(f), std::nullopt, false}; }

namespace {

template <class PointMap, class CoeffMap>
ProjectionResult lift(const ProjectionResult& r, PointMap on_pair, CoeffMap on_coeffs)
{
    ProjectionResult out = r;
    if (r.is_singleton()) {
        out.value = Singleton{on_pair(r.point())};
    } else {
        const SphereFamily& f = r.family();
        const PairPoint base = on_pair(PairPoint(f.base_first, f.base_second));
        const auto [c1, c2] = on_coeffs(f.coeff_first, f.coeff_second);
        out.value = SphereFamily{base.first(), base.second(), c1, c2, f.radius};
    }
    return out;
}

}  // namespace

ProjectionResult rotate_quarter(const ProjectionResult& r, int sign)
{
    constexpr double k = 1.0 / std::numbers::sqrt2;
    return lift(
        r, [sign](const PairPoint& z) { return rotate_quarter(z, sign); },
        [sign](double a, double b) {
            return sign == 1 ? std::pair{k * (a - b), k * (a + b)} : std::pair{k * (a + b), k * (b - a)};
        });
}

ProjectionResult swap(const ProjectionResult& r)
{
    return lift(
        r, [](const PairPoint& z) { return swap(z); }, [](double a, double b) { return std::pair{b, a}; });
}

ProjectionResult negate_second(const ProjectionResult& r)
{
    return lift(
        r, [](const PairPoint& z) { return negate_second(z); },
        [](double a, double b) { return std::pair{a, -b}; });
}

ProjectionResult scale_result(const ProjectionResult& r, double s)
{
    ProjectionResult out = lift(
        r, [s](const PairPoint& z) { return scale_pair(z, s); },
        [](double a, double b) { return std::pair{a, b}; });
    if (!out.is_singleton()) {
        std::get<SphereFamily>(out.value).radius *= s;
    }
    return out;
}

}  // namespace hyproj
