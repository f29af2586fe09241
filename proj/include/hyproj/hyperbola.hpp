#pragma once

#include "hyproj/projection.hpp"

#include <string_view>

namespace hyproj {

/// Level of the hyperbola { (u, v) : ||u||^2 - ||v||^2 = 2 gamma }, gamma != 0.
struct HyperbolaSpec {
    Gamma gamma;
};

enum class HyperbolaCase { Generic, FirstZero, SecondZeroLarge, SecondZeroSmall };

std::string_view to_string(HyperbolaCase k);

/// Branch taken by project_hgamma for this input (slots already swapped
/// when gamma < 0, so FirstZero always names the sphere branch that exists
/// at every level).
HyperbolaCase classify_hyperbola(const Point& u0, const Point& v0, const Gamma& gamma, const Tolerances& tol = {});

/// Nearest points of { ||u||^2 - ||v||^2 = 2 } to (u0, v0).
///
///   u0 != 0, v0 != 0               singleton (u0/(1+l), v0/(1-l)), H(l) = 0
///   u0 == 0                        (u, v0/2) with ||u||^2 = 2 + ||v0||^2/4
///   v0 == 0, ||u0|| >= 2 sqrt2     (u0/2, v) with ||v||^2 = ||u0||^2/4 - 2
///   v0 == 0, 0 < ||u0|| < 2 sqrt2  singleton (sqrt2 u0/||u0||, 0)
///
/// "== 0" means ||.|| <= tol.deg * (1 + ||u0|| + ||v0||). The origin falls
/// in the u0 == 0 branch.
ProjectionResult project_h1(const Point& u0, const Point& v0, const Tolerances& tol = {});

/// Nearest points of { ||u||^2 - ||v||^2 = 2 gamma }. gamma > 0 solves the
/// multiplier equation at level gamma directly; gamma < 0 swaps the slots
/// and projects onto level -gamma.
ProjectionResult project_hgamma(const Point& u0, const Point& v0, const HyperbolaSpec& spec,
                                const Tolerances& tol = {});

/// ||u||^2 - ||v||^2 - 2 gamma
double hyperbola_residual(const PairPoint& z, double gamma);

}  // namespace hyproj
