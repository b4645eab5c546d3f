#pragma once

#include <array>
#include <string_view>

namespace lvswitch {

/// One competition environment. The planar dynamics are
///   x' = alpha * x * (1 - a*x - b*y)
///   y' = beta  * y * (1 - c*x - d*y)
/// with all six parameters strictly positive and finite.
struct Environment {
    double a, b, c, d;
    double alpha, beta;

    Environment(double a_, double b_, double c_, double d_, double alpha_, double beta_);

    friend bool operator==(const Environment&, const Environment&) = default;
};

/// Competitive configuration, from the sign pattern of (a - c, b - d).
/// Type1: favorable to x. Type2: favorable to y. Type3: coexistence.
/// Type4: one species excludes the other depending on the start.
/// Degenerate (a == c or b == d) is a legitimate outcome, reached continuously
/// by mixed environments, not an error.
enum class EnvType { Type1, Type2, Type3, Type4, Degenerate };

std::string_view to_string(EnvType type) noexcept;

EnvType classify(const Environment& env) noexcept;

/// Right-hand side of the planar system at (x, y), x >= 0, y >= 0.
std::array<double, 2> vector_field(const Environment& env, double x, double y) noexcept;

/// Exchanges the roles of the two species: the y-dynamics of the result are
/// the x-dynamics of the input. Involution; maps Type1 <-> Type2 and fixes
/// Type3 and Type4.
Environment swap_species(const Environment& env) noexcept;

/// An ordered couple of environments; all analysis runs on one of these.
struct EnvPair {
    Environment env0, env1;
    bool a0_ne_a1;

    EnvPair(Environment e0, Environment e1)
        : env0(e0), env1(e1), a0_ne_a1(e0.a != e1.a) {}

    bool d0_ne_d1() const noexcept { return env0.d != env1.d; }

    friend bool operator==(const EnvPair&, const EnvPair&) = default;
};

/// Species-swapped pair (both members swapped).
EnvPair swap_species(const EnvPair& pair) noexcept;

/// Convex mixture: the environment whose vector field is
/// (1-s)*F_env0 + s*F_env1. Growth rates mix linearly; the competition
/// coefficients mix with growth-rate weights. s in [0, 1].
Environment mix(const EnvPair& pair, double s);

}  // namespace lvswitch
