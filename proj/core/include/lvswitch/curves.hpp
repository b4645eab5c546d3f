#pragma once

#include <optional>
#include <vector>

#include "lvswitch/invasion.hpp"

namespace lvswitch {

enum class Species { X, Y };

/// Critical switching speed at a fixed balance u, with the window-boundary
/// encoding: Zero means the invasion rate is positive over the whole
/// numerical v-range (the critical curve sits at 0), Infinite means it is
/// negative throughout (the curve sits at infinity).
struct ExtendedV {
    enum class Kind { Zero, Finite, Infinite };

    Kind kind;
    double value;  // meaningful only when kind == Finite

    static ExtendedV zero() noexcept { return {Kind::Zero, 0.0}; }
    static ExtendedV finite(double v) noexcept { return {Kind::Finite, v}; }
    static ExtendedV infinite() noexcept { return {Kind::Infinite, 0.0}; }

    friend bool operator==(const ExtendedV&, const ExtendedV&) = default;
};

inline constexpr double kCriticalVMin = 1e-6;
inline constexpr double kCriticalVMax = 1e6;

/// Locates the zero of the invasion rate along v at fixed u (alpha-chart
/// coordinates for both species; the x-rate search runs in its native
/// beta-chart and the result is mapped back through JumpRates). Sign changes
/// are bracketed on [v_min, v_max] and bisected in log v to relative
/// tolerance 1e-10; a constant sign yields Zero or Infinite.
ExtendedV critical_v(const EnvPair& pair, Species species, double u,
                     double v_min = kCriticalVMin, double v_max = kCriticalVMax);

/// Sampled critical curve in the alpha-chart plotting plane.
struct CriticalCurve {
    Species species;
    std::vector<double> u_grid;
    std::vector<ExtendedV> values;
    double w0, w1;  // chart weights of the reported coordinates
};

/// critical_v on the uniform interior grid u_k = k/(n+1), k = 1..n.
CriticalCurve curve_grid(const EnvPair& pair, Species species, int n,
                         double v_min = kCriticalVMin, double v_max = kCriticalVMax);

enum class SegmentKind { Infinite, Finite, Zero };
enum class Monotonicity { Decreasing, Increasing, Unspecified };

struct ShapeSegment {
    double u_lo, u_hi;
    SegmentKind kind;
    Monotonicity mono = Monotonicity::Unspecified;
};

/// Predicted piecewise layout of the critical curve, derived from the
/// threshold analysis: the u-axis is cut at the sign changes of the two
/// v-limits and each piece is labeled by their sign pair
/// ((-,-) -> Infinite, (+,+) -> Zero, mixed -> Finite). A Finite piece
/// flanked by Infinite on the left and Zero on the right must decrease, and
/// conversely; other flankings leave the direction unspecified.
struct ShapeSummary {
    Species species;
    double coeff_a;
    std::vector<double> alpha;
    std::optional<double> alpha_bar;
    std::vector<ShapeSegment> segments;
};

ShapeSummary shape_summary(const EnvPair& pair, Species species);

/// Collapses a sampled curve into maximal runs of equal kind, for comparison
/// against a ShapeSummary.
struct CurveRun {
    SegmentKind kind;
    std::size_t first, last;  // inclusive grid indices
};

std::vector<CurveRun> curve_runs(const CriticalCurve& curve);

}  // namespace lvswitch
