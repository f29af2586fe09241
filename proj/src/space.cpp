#include "hyproj/space.hpp"

#include <cmath>
#include <numbers>

namespace hyproj {

namespace {

Vec checked(Vec v)
{
    if (v.size() < 1) {
        throw DomainError("point must have dimension >= 1");
    }
    if (!v.allFinite()) {
        throw DomainError("point coordinates must be finite");
    }
    return v;
}

Vec from_list(std::initializer_list<double> xs)
{
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) {
        v[i++] = x;
    }
    return v;
}

}  // namespace

Point::Point(Vec coords) : coords_(checked(std::move(coords))) {}

Point::Point(std::initializer_list<double> coords) : coords_(checked(from_list(coords))) {}

Point::Point(const std::vector<double>& coords)
    : coords_(checked(Eigen::Map<const Vec>(coords.data(), static_cast<Eigen::Index>(coords.size()))))
{
}

Point Point::zero(Eigen::Index n) { return Point(Vec::Zero(n)); }

Point Point::unit(Eigen::Index n, Eigen::Index i) { return Point(Vec::Unit(n, i)); }

std::vector<double> Point::to_vector() const
{
    return {coords_.data(), coords_.data() + coords_.size()};
}

void require_same_dim(const Point& a, const Point& b, const char* what)
{
    if (a.dim() != b.dim()) {
        throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
    }
}

PairPoint::PairPoint(Point first, Point second) : first_(std::move(first)), second_(std::move(second))
{
    require_same_dim(first_, second_, "pair");
}

Vec PairPoint::stacked() const
{
    Vec z(2 * dim());
    z << first_.coords(), second_.coords();
    return z;
}

PairPoint PairPoint::from_stacked(const Vec& z)
{
    if (z.size() < 2 || z.size() % 2 != 0) {
        throw DomainError("stacked pair must have even length >= 2");
    }
    const Eigen::Index n = z.size() / 2;
    return {Point(Vec(z.head(n))), Point(Vec(z.tail(n)))};
}

double PairPoint::squared_norm() const { return first_.squared_norm() + second_.squared_norm(); }

Gamma::Gamma(double value) : value_(value)
{
    if (!std::isfinite(value)) {
        throw DomainError("gamma must be finite");
    }
    if (value == 0.0) {
        throw DomainError("gamma = 0 (the cross <x,y> = 0) is not supported");
    }
}

double inner(const Point& x, const Point& y)
{
    require_same_dim(x, y, "inner");
    return x.coords().dot(y.coords());
}

double objective(const PairPoint& query, const PairPoint& candidate)
{
    require_same_dim(query.first(), candidate.first(), "objective");
    return (candidate.first().coords() - query.first().coords()).squaredNorm() +
           (candidate.second().coords() - query.second().coords()).squaredNorm();
}

PairPoint rotate_quarter(const PairPoint& z, int sign)
{
    constexpr double r = 1.0 / std::numbers::sqrt2;
    const Vec& x = z.first().coords();
    const Vec& y = z.second().coords();
    if (sign == 1) {
        return {Point(Vec(r * (x - y))), Point(Vec(r * (x + y)))};
    }
    if (sign == -1) {
        return {Point(Vec(r * (x + y))), Point(Vec(r * (y - x)))};
    }
    throw DomainError("rotate_quarter: sign must be +1 or -1");
}

PairPoint swap(const PairPoint& z) { return {z.second(), z.first()}; }

PairPoint negate_second(const PairPoint& z) { return {z.first(), Point(Vec(-z.second().coords()))}; }

PairPoint scale_pair(const PairPoint& z, double s)
{
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("scale_pair: scale must be positive and finite");
    }
    return {Point(Vec(s * z.first().coords())), Point(Vec(s * z.second().coords()))};
}

}  // namespace hyproj
