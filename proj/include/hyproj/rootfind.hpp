#pragma once

namespace hyproj {

/// Coefficients of the multiplier equation
///
///   H(lambda) = ((lambda^2 + 1) p - 2 lambda q) / (2 (1 - lambda^2)^2) - c
///
/// with p = ||u0||^2 - ||v0||^2 and q = ||u0||^2 + ||v0||^2 for reduced
/// inputs u0, v0 (both nonzero) and level c > 0.
///
/// The squared norms are stored separately so that H can be evaluated as
/// ||u0||^2 / (2(1+lambda)^2) - ||v0||^2 / (2(1-lambda)^2) - c, which
/// avoids the cancellation in p and q when one input is much smaller than
/// the other.
class HParams {
public:
    /// Throws DomainError unless q > |p| (hence q > 0) and c > 0.
    HParams(double p, double q, double c);

    /// Same as HParams(a - b, a + b, c) but keeps a and b exact.
    static HParams from_squared_norms(double u_sq, double v_sq, double c);

    [[nodiscard]] double p() const noexcept { return u_sq_ - v_sq_; }
    [[nodiscard]] double q() const noexcept { return u_sq_ + v_sq_; }
    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] double u_sq() const noexcept { return u_sq_; }
    [[nodiscard]] double v_sq() const noexcept { return v_sq_; }

private:
    HParams() = default;
    double u_sq_ = 0.0;
    double v_sq_ = 0.0;
    double c_ = 0.0;
};

struct RootResult {
    double lambda = 0.0;
    double residual = 0.0;  ///< H at the root
    int iterations = 0;
    double bracket_width = 0.0;
    /// 1 + lambda and 1 - lambda carried at full relative precision; the
    /// projection formulas divide by these, and near a pole lambda itself
    /// has lost the digits that matter.
    double one_plus = 1.0;
    double one_minus = 1.0;
};

constexpr int kRootMaxIter = 200;
constexpr double kRootRelTol = 1e-12;
constexpr double kPoleOffset = 1e-12;

/// 1e-12 * (1 + q)
double default_root_tol(const HParams& params);

/// Throws DomainError if |lambda| >= 1.
double eval_H(double lambda, const HParams& params);

/// H'(lambda) = (-q (1 + 3 lambda^2) + p (lambda^3 + 3 lambda)) / (1 - lambda^2)^3,
/// strictly negative on ]-1, 1[.
double eval_Hprime(double lambda, const HParams& params);

/// Unique root of H in ]-1, 1[ by Newton's method inside a sign-change
/// bracket, with bisection whenever Newton leaves the bracket or stalls.
/// On return |residual| <= tol and bracket_width <= tol.
///
/// The sign of H(0) = p/2 - c selects the half-interval holding the root;
/// the iteration then runs on the distance t to the nearer pole
/// (t = 1 + lambda or t = 1 - lambda, t in ]0, 1]).
RootResult solve_lambda(const HParams& params, double tol);
RootResult solve_lambda(const HParams& params);

}  // namespace hyproj
