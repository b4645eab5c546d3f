#include "lvswitch/invasion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lvswitch/errors.hpp"

namespace lvswitch {

namespace {

void require_interior_u(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::invalid_argument("u must lie in (0, 1), got " + std::to_string(u));
    }
}

void require_positive_v(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("v must be strictly positive and finite, got " +
                                    std::to_string(v));
    }
}

void require_distinct_a(const EnvPair& pair) {
    if (!pair.a0_ne_a1) {
        throw DegenerateLogistic(
            "a0 == a1: the resident logistic does not switch; use the Monte Carlo estimator");
    }
}

/// E[1 / (a0 + (a1-a0)*Y)] for Y ~ Beta(p, q). Expanding around the larger of
/// a0, a1 gives a series with positive terms and ratio bounded by
/// w = |a1-a0| / max(a0, a1) < 1:
///   E[1/m(Y)] = (1/a_far) * sum_n (shape)_n / (p+q)_n * w^n,
/// where shape = q when a1 > a0 (moments of 1-Y) and shape = p otherwise.
double reciprocal_mix_expectation(double a0, double a1, double p, double q) {
    const double v = p + q;
    double far, shape;
    if (a1 > a0) {
        far = a1;
        shape = q;
    } else {
        far = a0;
        shape = p;
    }
    const double w = std::abs(a1 - a0) / far;
    double term = 1.0;
    double sum = 0.0;
    constexpr std::size_t kMaxTerms = 20'000'000;
    for (std::size_t n = 0; n < kMaxTerms; ++n) {
        sum += term;
        term *= (shape + static_cast<double>(n)) / (v + static_cast<double>(n)) * w;
        if (term <= 1e-17 * sum) return sum / far;
    }
    throw InternalContract("reciprocal_mix_expectation: series did not converge");
}

double quad_coeff_ratio0(const Environment& e) { return e.beta / e.alpha; }

}  // namespace

BetaParams::BetaParams(double s1, double s2) : shape1(s1), shape2(s2) {
    if (!(shape1 > 0.0) || !(shape2 > 0.0) || !std::isfinite(shape1) || !std::isfinite(shape2)) {
        throw std::invalid_argument("Beta shape parameters must be strictly positive and finite");
    }
}

QuadRule beta_quadrule(const BetaParams& params, int order) {
    if (order < 2) {
        throw std::invalid_argument("quadrature order must be at least 2, got " +
                                    std::to_string(order));
    }
    const double p = params.shape1;
    const double q = params.shape2;
    const double s = p + q;
    // Monic three-term recurrence for the Jacobi weight (1-x)^(q-1) x^(p-1)
    // mapped to (0, 1); standard Jacobi parameters are (q-1, p-1).
    const double ja = q - 1.0;
    const double jb = p - 1.0;
    const int n = order;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    diag[0] = p / s;
    for (int k = 1; k < n; ++k) {
        const double dk = 2.0 * k + s - 2.0;
        const double a_std = (jb * jb - ja * ja) / (dk * (dk + 2.0));
        diag[k] = 0.5 * (1.0 + a_std);
    }
    for (int k = 1; k < n; ++k) {
        double b_std;
        if (k == 1) {
            // Cancelled form valid for all s > 0 (the general one is 0/0 at s = 1).
            b_std = 4.0 * (1.0 + ja) * (1.0 + jb) / ((2.0 + ja + jb) * (2.0 + ja + jb) * (3.0 + ja + jb));
        } else {
            const double t = 2.0 * k + ja + jb;
            b_std = 4.0 * k * (k + ja) * (k + jb) * (k + ja + jb) / (t * t * (t + 1.0) * (t - 1.0));
        }
        off[k - 1] = 0.5 * std::sqrt(b_std);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw InternalContract("beta_quadrule: tridiagonal eigensolve failed");
    }

    QuadRule rule;
    rule.order = order;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = v0 * v0;  // measure is normalized, so mu0 = 1
    }
    return rule;
}

Quadratic poly_P(const EnvPair& pair) {
    require_distinct_a(pair);
    const Environment& e0 = pair.env0;
    const Environment& e1 = pair.env1;
    const double q0 = quad_coeff_ratio0(e0);
    const double q1 = quad_coeff_ratio0(e1);
    const double sg = e1.a > e0.a ? 1.0 : -1.0;
    return Quadratic{
        (q1 * e1.c * e0.a - q0 * e0.c * e1.a) * sg,
        (-q1 * (e1.c + e0.a) + q0 * (e0.c + e1.a)) * sg,
        (q1 - q0) * sg,
    };
}

double phi(const EnvPair& pair, double y) {
    if (!(y >= 0.0 && y <= 1.0)) {
        throw std::invalid_argument("phi: y must lie in [0, 1]");
    }
    const Quadratic P = poly_P(pair);
    const double m = pair.env0.a + (pair.env1.a - pair.env0.a) * y;
    return P.c0 * m + P.c1 + P.c2 / m;
}

double expected_phi(const EnvPair& pair, double u, double v) {
    require_interior_u(u);
    require_positive_v(v);
    const Quadratic P = poly_P(pair);
    const double a0 = pair.env0.a;
    const double a1 = pair.env1.a;
    const double mean_m = a0 + (a1 - a0) * u;
    const double h = reciprocal_mix_expectation(a0, a1, u * v, (1.0 - u) * v);
    return P.c0 * mean_m + P.c1 + P.c2 * h;
}

double expected_phi(const EnvPair& pair, double u, double v, int order) {
    require_interior_u(u);
    require_positive_v(v);
    const Quadratic P = poly_P(pair);
    const double a0 = pair.env0.a;
    const double a1 = pair.env1.a;
    const QuadRule rule = beta_quadrule(BetaParams::from_uv(u, v), order);
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double m = a0 + (a1 - a0) * rule.nodes[i];
        acc += rule.weights[i] * (P.c0 * m + P.c1 + P.c2 / m);
    }
    return acc;
}

double lambda_y(const EnvPair& pair, double u, double v) {
    const double weighted = (1.0 - u) / pair.env0.alpha + u / pair.env1.alpha;
    return expected_phi(pair, u, v) / (std::abs(pair.env1.a - pair.env0.a) * weighted);
}

double lambda_y(const EnvPair& pair, const UVCoords& coords) {
    if (coords.w0 != pair.env0.alpha || coords.w1 != pair.env1.alpha) {
        throw ChartMismatch(
            "lambda_y expects alpha-chart coordinates; convert through JumpRates first");
    }
    return lambda_y(pair, coords.u, coords.v);
}

double lambda_x(const EnvPair& pair, const JumpRates& rates) {
    if (!pair.d0_ne_d1()) {
        throw DegenerateLogistic(
            "d0 == d1: the resident logistic does not switch; use the Monte Carlo estimator");
    }
    const EnvPair swapped = swap_species(pair);
    const UVCoords chart = beta_chart(pair, rates);
    return lambda_y(swapped, chart.u, chart.v);
}

double lambda_x(const EnvPair& pair, const UVCoords& coords) {
    if (coords.w0 != pair.env0.beta || coords.w1 != pair.env1.beta) {
        throw ChartMismatch(
            "lambda_x expects beta-chart coordinates; convert through JumpRates first");
    }
    return lambda_x(pair, uv_to_rates(coords));
}

double limit_v_inf(const EnvPair& pair, double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::invalid_argument("limit_v_inf: u must lie in [0, 1]");
    }
    const double alpha0 = pair.env0.alpha;
    const double alpha1 = pair.env1.alpha;
    const double s = u * alpha0 / (u * alpha0 + (1.0 - u) * alpha1);
    const Environment mixed = mix(pair, s);
    return mixed.beta * (1.0 - mixed.c / mixed.a);
}

double limit_v_zero(const EnvPair& pair, double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::invalid_argument("limit_v_zero: u must lie in [0, 1]");
    }
    const Environment& e0 = pair.env0;
    const Environment& e1 = pair.env1;
    const double g0 = e0.beta / e0.alpha * (1.0 - e0.c / e0.a);
    const double g1 = e1.beta / e1.alpha * (1.0 - e1.c / e1.a);
    const double g = (g1 - g0) * u + g0;
    return g / ((1.0 - u) / e0.alpha + u / e1.alpha);
}

namespace {

/// Real roots of A x^2 + B x + C, ascending; handles the linear and constant
/// degenerations.
std::vector<double> quadratic_roots(double A, double B, double C) {
    std::vector<double> roots;
    if (A == 0.0) {
        if (B != 0.0) roots.push_back(-C / B);
        return roots;
    }
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return roots;
    if (disc == 0.0) {
        roots.push_back(-B / (2.0 * A));
        return roots;
    }
    const double sq = std::sqrt(disc);
    const double qf = -0.5 * (B + (B >= 0.0 ? sq : -sq));
    double r1 = qf / A;
    double r2 = (qf != 0.0) ? C / qf : -B / A - r1;
    if (r1 > r2) std::swap(r1, r2);
    roots.push_back(r1);
    if (r2 != r1) roots.push_back(r2);
    return roots;
}

}  // namespace

ThresholdAnalysis threshold_analysis(const EnvPair& pair) {
    const Environment& e0 = pair.env0;
    const Environment& e1 = pair.env1;
    ThresholdAnalysis out;
    out.R = e0.beta * e1.alpha / (e0.alpha * e1.beta);
    out.A = (e1.a - e0.a) * (out.R - 1.0);
    out.B = (2.0 * e0.a - e0.c - e1.a) * out.R + (e1.c - e0.a);
    out.C = (e0.c - e0.a) * out.R;
    out.discriminant = out.B * out.B - 4.0 * out.A * out.C;
    out.coeff_a = pair.a0_ne_a1 ? poly_P(pair).c2 : std::numeric_limits<double>::quiet_NaN();

    // i_tilde = {u in [0,1]: T(u) < 0}, assembled from the root structure.
    std::vector<double> cuts{0.0};
    for (double r : quadratic_roots(out.A, out.B, out.C)) {
        if (r > 0.0 && r < 1.0) cuts.push_back(r);
    }
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double lo = cuts[k];
        const double hi = cuts[k + 1];
        if (hi <= lo) continue;
        if (out.T(0.5 * (lo + hi)) < 0.0) {
            if (!out.i_tilde.empty() && out.i_tilde.back().hi == lo) {
                out.i_tilde.back().hi = hi;  // merge across a tangent root
            } else {
                out.i_tilde.push_back(Interval{lo, hi});
            }
        }
    }
    for (const Interval& iv : out.i_tilde) {
        if (iv.lo > 0.0) out.alpha.push_back(iv.lo);
        if (iv.hi < 1.0) out.alpha.push_back(iv.hi);
    }
    std::sort(out.alpha.begin(), out.alpha.end());

    // alpha_bar: unique zero in (0, 1) of the slow-switching numerator g
    // when its endpoint values have opposite signs.
    const double g0 = e0.beta / e0.alpha * (1.0 - e0.c / e0.a);
    const double g1 = e1.beta / e1.alpha * (1.0 - e1.c / e1.a);
    if ((g0 < 0.0 && g1 > 0.0) || (g0 > 0.0 && g1 < 0.0)) {
        out.alpha_bar = g0 / (g0 - g1);
    }
    return out;
}

}  // namespace lvswitch
