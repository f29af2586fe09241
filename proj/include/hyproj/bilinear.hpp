#pragma once

#include "hyproj/projection.hpp"

#include <optional>
#include <string_view>

namespace hyproj {

/// Input regime of a bilinear projection, named for the gamma > 0 normal
/// form. For gamma < 0 the query is first mapped through (x, y) -> (x, -y),
/// so e.g. AntiDiagonal then means x0 = y0 in the original coordinates.
enum class CaseKind { Generic, AntiDiagonal, DiagonalLarge, DiagonalSmall };

struct CaseTag {
    CaseKind kind = CaseKind::Generic;
    std::optional<double> lambda;  ///< filled in by callers after solving
};

std::string_view to_string(CaseKind k);

/// Deterministic regime test. Checks x0 = -y0 before x0 = y0 so the origin
/// is classified once; "=" means within tol.deg * (1 + ||x0|| + ||y0||).
CaseTag classify(const Point& x0, const Point& y0, const Gamma& gamma, const Tolerances& tol = {});

/// Nearest points of C_gamma = { <x, y> = gamma } to (x0, y0).
///
/// For gamma > 0:
///   Generic        ((x0 - l y0), (y0 - l x0)) / (1 - l^2), H(l) = 0 with
///                  p = 2<x0,y0>, q = ||x0||^2 + ||y0||^2, level gamma
///   AntiDiagonal   (x0/2 + w/sqrt2, -x0/2 + w/sqrt2), ||w||^2 = 2 gamma + ||x0||^2/2
///   DiagonalLarge  (x0/2 - w/sqrt2,  x0/2 + w/sqrt2), ||w||^2 = ||x0||^2/2 - 2 gamma
///   DiagonalSmall  sqrt(gamma) (x0/||x0||, x0/||x0||)
///
/// gamma < 0 is reduced to -gamma through (x, y) -> (x, -y).
ProjectionResult project_bilinear(const Point& x0, const Point& y0, const Gamma& gamma,
                                  const Tolerances& tol = {});

/// Same projection computed as A_{pi/4} P_hyperbola A_{-pi/4}.
ProjectionResult project_bilinear_by_rotation(const Point& x0, const Point& y0, const Gamma& gamma,
                                              const Tolerances& tol = {});

/// One member of a result. Sphere families pick w = radius * d with d the
/// normalized hint if nonzero, else base_first, else base_second, else e1.
PairPoint representative(const ProjectionResult& result, const std::optional<Point>& hint = std::nullopt);

/// |<x, y> - gamma|
double bilinear_residual(const PairPoint& z, double gamma);

}  // namespace hyproj
