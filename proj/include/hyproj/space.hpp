#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyproj {

using Vec = Eigen::VectorXd;

/// Raised for inputs that violate a type or operation precondition
/// (non-finite coordinates, dimension mismatch, zero level, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative routine fails to meet its stopping rule.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector of the model space R^n. Construction rejects n == 0 and
/// non-finite coordinates; every Point in circulation is therefore valid.
class Point {
public:
    explicit Point(Vec coords);
    Point(std::initializer_list<double> coords);
    explicit Point(const std::vector<double>& coords);

    static Point zero(Eigen::Index n);
    static Point unit(Eigen::Index n, Eigen::Index i);

    [[nodiscard]] const Vec& coords() const noexcept { return coords_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return coords_.size(); }
    [[nodiscard]] double operator[](Eigen::Index i) const { return coords_[i]; }
    [[nodiscard]] double norm() const { return coords_.norm(); }
    [[nodiscard]] double squared_norm() const { return coords_.squaredNorm(); }
    [[nodiscard]] std::vector<double> to_vector() const;

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }

private:
    Vec coords_;
};

/// An element (x, y) of X x X. Both slots share one dimension.
class PairPoint {
public:
    PairPoint(Point first, Point second);

    [[nodiscard]] const Point& first() const noexcept { return first_; }
    [[nodiscard]] const Point& second() const noexcept { return second_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return first_.dim(); }

    /// Stacked vector (x; y) of length 2n.
    [[nodiscard]] Vec stacked() const;
    static PairPoint from_stacked(const Vec& z);

    [[nodiscard]] double squared_norm() const;

    friend bool operator==(const PairPoint& a, const PairPoint& b)
    {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }

private:
    Point first_;
    Point second_;
};

/// Nonzero level of the bilinear constraint <x, y> = gamma. The zero level
/// (the "cross" {<x,y> = 0}) is not supported.
class Gamma {
public:
    explicit Gamma(double value);
    [[nodiscard]] double value() const noexcept { return value_; }
    [[nodiscard]] Gamma negated() const { return Gamma(-value_); }

private:
    double value_;
};

double inner(const Point& x, const Point& y);

/// Squared product-space distance ||x - x0||^2 + ||y - y0||^2.
double objective(const PairPoint& query, const PairPoint& candidate);

/// Quarter-turn rotation A_{+pi/4} (sign = +1) or A_{-pi/4} (sign = -1):
///   +1: (x, y) -> ((x - y)/sqrt2, (x + y)/sqrt2)
///   -1: (x, y) -> ((x + y)/sqrt2, (y - x)/sqrt2)
/// A_{-pi/4} maps C_gamma onto the hyperbola ||u||^2 - ||v||^2 = 2 gamma.
PairPoint rotate_quarter(const PairPoint& z, int sign);

/// (x, y) -> (y, x)
PairPoint swap(const PairPoint& z);

/// (x, y) -> (x, -y)
PairPoint negate_second(const PairPoint& z);

/// (x, y) -> (s x, s y), s > 0
PairPoint scale_pair(const PairPoint& z, double s);

void require_same_dim(const Point& a, const Point& b, const char* what);

}  // namespace hyproj
