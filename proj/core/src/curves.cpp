#include "lvswitch/curves.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lvswitch/errors.hpp"
#include "lvswitch/parallel.hpp"

namespace lvswitch {

namespace {

constexpr double kSignBand = 1e-12;
constexpr double kLogTol = 1e-10;

int sign_band(double x) {
    if (std::abs(x) <= kSignBand) return 0;
    return x > 0.0 ? 1 : -1;
}

/// Triangular u-map from the alpha chart into the beta chart.
double alpha_u_to_beta_u(const EnvPair& pair, double u) {
    const double r0 = u * pair.env0.alpha / pair.env0.beta;
    const double r1 = (1.0 - u) * pair.env1.alpha / pair.env1.beta;
    return r0 / (r0 + r1);
}

/// v-scale between the charts at fixed u: beta_v = kappa(u) * alpha_v.
double chart_v_scale(const EnvPair& pair, double u) {
    return u * pair.env0.alpha / pair.env0.beta + (1.0 - u) * pair.env1.alpha / pair.env1.beta;
}

}  // namespace

ExtendedV critical_v(const EnvPair& pair, Species species, double u, double v_min, double v_max) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::invalid_argument("critical_v: u must lie in (0, 1)");
    }
    if (!(v_min > 0.0 && v_max > v_min)) {
        throw std::invalid_argument("critical_v: need 0 < v_min < v_max");
    }

    // Reduce the x-species to the y-machinery of the swapped pair; the search
    // runs in the native beta chart, scaled so the reported v window is the
    // alpha-chart one.
    EnvPair work = species == Species::Y ? pair : swap_species(pair);
    double uu = u;
    double scale = 1.0;
    if (species == Species::X) {
        uu = alpha_u_to_beta_u(pair, u);
        scale = chart_v_scale(pair, u);
    }
    if (!work.a0_ne_a1) {
        throw DegenerateLogistic("critical_v: closed form unavailable for the requested species");
    }

    const auto rate = [&](double v) { return lambda_y(work, uu, scale * v); };

    const double f_lo = rate(v_min);
    const double f_hi = rate(v_max);
    const int s_lo = sign_band(f_lo);
    const int s_hi = sign_band(f_hi);

    if (s_lo == s_hi) {
        if (s_lo > 0) return ExtendedV::zero();
        if (s_lo < 0) return ExtendedV::infinite();
        // Rate vanishes across the window (coeff_a ~ 0 at a threshold u);
        // classify by the analytic limits, treating a dead-zero as Zero.
        const double l0 = limit_v_zero(work, uu);
        const double linf = limit_v_inf(work, uu);
        const int t0 = sign_band(l0);
        const int tinf = sign_band(linf);
        if (t0 < 0 && tinf < 0) return ExtendedV::infinite();
        return ExtendedV::zero();
    }
    if (s_lo == 0) return ExtendedV::finite(v_min);
    if (s_hi == 0) return ExtendedV::finite(v_max);

    double lo = std::log(v_min);
    double hi = std::log(v_max);
    int lo_sign = s_lo;
    while (hi - lo > kLogTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = rate(std::exp(mid));
        if (fm == 0.0) return ExtendedV::finite(std::exp(mid));
        if ((fm > 0.0 ? 1 : -1) == lo_sign) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double root = std::exp(0.5 * (lo + hi));
    if (!(root >= v_min && root <= v_max)) {
        throw InternalContract("critical_v: bisection left the search window");
    }
    return ExtendedV::finite(root);
}

CriticalCurve curve_grid(const EnvPair& pair, Species species, int n, double v_min, double v_max) {
    if (n < 2) {
        throw std::invalid_argument("curve_grid: need n >= 2, got " + std::to_string(n));
    }
    CriticalCurve curve;
    curve.species = species;
    curve.w0 = pair.env0.alpha;
    curve.w1 = pair.env1.alpha;
    curve.u_grid.resize(n);
    curve.values.resize(n);
    for (int k = 0; k < n; ++k) {
        curve.u_grid[k] = static_cast<double>(k + 1) / static_cast<double>(n + 1);
    }
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
        curve.values[k] = critical_v(pair, species, curve.u_grid[k], v_min, v_max);
    });
    return curve;
}

namespace {

int limit_sign(double value) {
    if (std::abs(value) <= kSignBand) return 0;
    return value > 0.0 ? 1 : -1;
}

}  // namespace

ShapeSummary shape_summary(const EnvPair& pair, Species species) {
    const EnvPair work = species == Species::Y ? pair : swap_species(pair);
    if (!work.a0_ne_a1) {
        throw DegenerateLogistic("shape_summary: closed form unavailable for the requested species");
    }
    const ThresholdAnalysis th = threshold_analysis(work);

    ShapeSummary out;
    out.species = species;
    out.coeff_a = th.coeff_a;
    out.alpha = th.alpha;
    out.alpha_bar = th.alpha_bar;

    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), th.alpha.begin(), th.alpha.end());
    if (th.alpha_bar) cuts.push_back(*th.alpha_bar);
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double lo = cuts[k];
        const double hi = cuts[k + 1];
        if (hi - lo <= 0.0) continue;
        const double um = 0.5 * (lo + hi);
        const int s0 = limit_sign(limit_v_zero(work, um));
        const int sinf = limit_sign(limit_v_inf(work, um));
        ShapeSegment seg{lo, hi, SegmentKind::Finite, Monotonicity::Unspecified};
        if (s0 >= 0 && sinf >= 0) {
            seg.kind = SegmentKind::Zero;
        } else if (s0 <= 0 && sinf <= 0) {
            seg.kind = SegmentKind::Infinite;
        }
        out.segments.push_back(seg);
    }

    // Merge adjacent equal kinds (a cut can separate segments of equal sign
    // pattern when only one limit changes sign there).
    std::vector<ShapeSegment> merged;
    for (const ShapeSegment& seg : out.segments) {
        if (!merged.empty() && merged.back().kind == seg.kind) {
            merged.back().u_hi = seg.u_hi;
        } else {
            merged.push_back(seg);
        }
    }
    out.segments = std::move(merged);

    for (std::size_t k = 0; k < out.segments.size(); ++k) {
        ShapeSegment& seg = out.segments[k];
        if (seg.kind != SegmentKind::Finite) continue;
        const bool inf_left = k > 0 && out.segments[k - 1].kind == SegmentKind::Infinite;
        const bool zero_left = k > 0 && out.segments[k - 1].kind == SegmentKind::Zero;
        const bool inf_right = k + 1 < out.segments.size() &&
                               out.segments[k + 1].kind == SegmentKind::Infinite;
        const bool zero_right = k + 1 < out.segments.size() &&
                                out.segments[k + 1].kind == SegmentKind::Zero;
        if (inf_left && zero_right) seg.mono = Monotonicity::Decreasing;
        if (zero_left && inf_right) seg.mono = Monotonicity::Increasing;
    }
    return out;
}

std::vector<CurveRun> curve_runs(const CriticalCurve& curve) {
    std::vector<CurveRun> runs;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        SegmentKind kind;
        switch (curve.values[i].kind) {
            case ExtendedV::Kind::Zero: kind = SegmentKind::Zero; break;
            case ExtendedV::Kind::Finite: kind = SegmentKind::Finite; break;
            default: kind = SegmentKind::Infinite; break;
        }
        if (!runs.empty() && runs.back().kind == kind) {
            runs.back().last = i;
        } else {
            runs.push_back(CurveRun{kind, i, i});
        }
    }
    return runs;
}

}  // namespace lvswitch
