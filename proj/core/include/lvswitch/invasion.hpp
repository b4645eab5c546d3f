#pragma once

#include <optional>
#include <vector>

#include "lvswitch/coords.hpp"
#include "lvswitch/environment.hpp"

namespace lvswitch {

/// Quadratic c2*x^2 + c1*x + c0.
struct Quadratic {
    double c2, c1, c0;

    double operator()(double x) const noexcept { return (c2 * x + c1) * x + c0; }
};

/// Shape parameters of the stationary Beta law in the (u, v) chart:
/// shape1 = u*v, shape2 = (1-u)*v.
struct BetaParams {
    double shape1, shape2;

    BetaParams(double s1, double s2);
    static BetaParams from_uv(double u, double v) { return BetaParams(u * v, (1.0 - u) * v); }
};

/// Gauss-Jacobi rule against the normalized Beta(shape1, shape2) density on
/// (0, 1): nodes interior, weights positive and summing to 1. Serves as the
/// numerical route independent of the series evaluation used by lambda_y.
struct QuadRule {
    int order;
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadRule beta_quadrule(const BetaParams& params, int order);

/// The sign-normalized quadratic P whose values on the support of the
/// resident stationary law decide the invader's growth:
///   P(x) = (beta1/alpha1*(1-c1*x)*(1-a0*x) - beta0/alpha0*(1-c0*x)*(1-a1*x))
///          * sign(a1 - a0).
/// Requires a0 != a1 (the sign factor, and everything downstream, is
/// undefined otherwise); throws DegenerateLogistic.
Quadratic poly_P(const EnvPair& pair);

/// phi(y) = m(y) * P(1/m(y)) with m(y) = a0 + (a1-a0)*y, y in [0, 1].
/// Expanding P gives the partial-fraction form
///   phi(y) = p0*m(y) + p1 + p2/m(y),
/// so phi is rational with a pole outside [0, 1]; its curvature
/// phi'' = 2*p2*(a1-a0)^2 / m^3 carries the sign of the quadratic
/// coefficient p2 everywhere.
double phi(const EnvPair& pair, double y);

/// E[phi(Y)] for Y ~ Beta(u*v, (1-u)*v), evaluated exactly through the
/// partial fraction: E[phi] = p0*(a0 + (a1-a0)*u) + p1 + p2*E[1/m(Y)], where
/// E[1/m(Y)] is summed by a geometric-series expansion with guaranteed ratio
/// |a1-a0| / max(a0, a1) < 1.
double expected_phi(const EnvPair& pair, double u, double v);

/// Same expectation through Gauss-Jacobi quadrature at the given order
/// (order >= 2). Exact for polynomial integrands of degree <= 2*order-1;
/// for phi itself the error decays geometrically in the order.
double expected_phi(const EnvPair& pair, double u, double v, int order);

/// Invasion rate of species y in the alpha-weighted chart:
///   lambda_y(u, v) = E[phi(Y_{u,v})] / (|a1-a0| * ((1-u)/alpha0 + u/alpha1)).
/// The absolute value makes the formula labeling-invariant (relabeling the
/// environments maps (u, v) to (1-u, v) and leaves the rate unchanged), so
/// sign(lambda_y) = sign(expected_phi). Throws DegenerateLogistic when
/// a0 == a1; callers then use the Monte Carlo estimator instead.
double lambda_y(const EnvPair& pair, double u, double v);

/// Chart-guarded overload: coords must carry the pair's (alpha0, alpha1)
/// weights, otherwise ChartMismatch.
double lambda_y(const EnvPair& pair, const UVCoords& coords);

/// Invasion rate of species x: the y-rate of the species-swapped pair,
/// evaluated in the beta-weighted chart of the original pair. Throws
/// DegenerateLogistic when d0 == d1.
double lambda_x(const EnvPair& pair, const JumpRates& rates);

/// Chart-guarded overload: coords must carry the pair's (beta0, beta1)
/// weights.
double lambda_x(const EnvPair& pair, const UVCoords& coords);

/// Fast-switching limit: lim_{v->inf} lambda_y(u, v) = beta_u * (1 - c_u/a_u)
/// with the mixed coefficients taken at s(u) = u*alpha0 / (u*alpha0 + (1-u)*alpha1).
double limit_v_inf(const EnvPair& pair, double u);

/// Slow-switching limit:
/// lim_{v->0} lambda_y(u, v) = g(u) / ((1-u)/alpha0 + u/alpha1) with
/// g(u) = (beta1/alpha1*(1-c1/a1) - beta0/alpha0*(1-c0/a0))*u
///        + beta0/alpha0*(1-c0/a0).
double limit_v_zero(const EnvPair& pair, double u);

struct Interval {
    double lo, hi;
};

/// Threshold structure of the y-rate along u.
///
/// T(u) = A*u^2 + B*u + C satisfies c_s - a_s = T(u) / (R*(1-u) + u) with a
/// positive denominator, so { T < 0 } is exactly the u-set where the mixed
/// environment favors the invader in the fast-switching limit.
///
/// alpha:     boundary points of i_tilde = {u in [0,1]: T(u) < 0} that lie in
///            (0, 1) -- zero, one or two points depending on the configuration.
/// alpha_bar: the zero of g (slow-switching limit numerator) in (0, 1) when g
///            changes sign there, otherwise empty.
/// coeff_a:   quadratic coefficient of P; NaN when a0 == a1 (P undefined).
struct ThresholdAnalysis {
    double R = 0.0;
    double A = 0.0, B = 0.0, C = 0.0;
    double discriminant = 0.0;
    std::vector<double> alpha;
    std::optional<double> alpha_bar;
    double coeff_a = 0.0;
    std::vector<Interval> i_tilde;

    double T(double u) const noexcept { return (A * u + B) * u + C; }
};

ThresholdAnalysis threshold_analysis(const EnvPair& pair);

}  // namespace lvswitch
