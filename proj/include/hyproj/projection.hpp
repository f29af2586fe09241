#pragma once

#include "hyproj/rootfind.hpp"
#include "hyproj/space.hpp"

#include <optional>
#include <variant>

namespace hyproj {

struct Singleton {
    PairPoint point;
};

/// The set { (base_first + coeff_first w, base_second + coeff_second w) : ||w|| = radius }.
struct SphereFamily {
    Point base_first;
    Point base_second;
    double coeff_first = 0.0;
    double coeff_second = 0.0;
    double radius = 0.0;

    /// Member for a given w; ||w|| is not checked.
    [[nodiscard]] PairPoint member(const Vec& w) const;
    /// Member for w = radius * direction / ||direction||.
    [[nodiscard]] PairPoint member_along(const Vec& direction) const;
};

/// Result of a (possibly set-valued) projection. `root` is set on the
/// generic branch; `ill_conditioned` flags a multiplier with 1 - |lambda| < 1e-8.
struct ProjectionResult {
    std::variant<Singleton, SphereFamily> value;
    std::optional<RootResult> root;
    bool ill_conditioned = false;

    [[nodiscard]] bool is_singleton() const { return std::holds_alternative<Singleton>(value); }
    [[nodiscard]] const PairPoint& point() const { return std::get<Singleton>(value).point; }
    [[nodiscard]] const SphereFamily& family() const { return std::get<SphereFamily>(value); }
    [[nodiscard]] Eigen::Index dim() const;
};

constexpr double kIllConditioned = 1e-8;

ProjectionResult make_singleton(PairPoint p, std::optional<RootResult> root = std::nullopt);
ProjectionResult make_family(SphereFamily f);

// Linear maps of X x X lifted to results. Each maps member(w) of the input
// to the image of member(w), so memberwise comparisons can reuse w.
ProjectionResult rotate_quarter(const ProjectionResult& r, int sign);
ProjectionResult swap(const ProjectionResult& r);
ProjectionResult negate_second(const ProjectionResult& r);
ProjectionResult scale_result(const ProjectionResult& r, double s);

/// Tolerance bundle shared by the projection routines.
struct Tolerances {
    double root = kRootRelTol;  ///< root tolerance is root * (1 + q)
    double deg = 1e-12;         ///< zero / diagonal detection, relative to 1 + ||.|| + ||.||
    double feas = 1e-9;         ///< feasibility checks in verification
};

}  // namespace hyproj
