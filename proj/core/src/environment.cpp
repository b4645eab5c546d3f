#include "lvswitch/environment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lvswitch {

namespace {

void require_positive_finite(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string("environment field ") + name +
                                    " must be strictly positive and finite, got " +
                                    std::to_string(value));
    }
}

}  // namespace

Environment::Environment(double a_, double b_, double c_, double d_, double alpha_, double beta_)
    : a(a_), b(b_), c(c_), d(d_), alpha(alpha_), beta(beta_) {
    require_positive_finite(a, "a");
    require_positive_finite(b, "b");
    require_positive_finite(c, "c");
    require_positive_finite(d, "d");
    require_positive_finite(alpha, "alpha");
    require_positive_finite(beta, "beta");
}

std::string_view to_string(EnvType type) noexcept {
    switch (type) {
        case EnvType::Type1: return "Type1";
        case EnvType::Type2: return "Type2";
        case EnvType::Type3: return "Type3";
        case EnvType::Type4: return "Type4";
        case EnvType::Degenerate: return "Degenerate";
    }
    return "Degenerate";
}

EnvType classify(const Environment& env) noexcept {
    if (env.a == env.c || env.b == env.d) return EnvType::Degenerate;
    if (env.a < env.c) return env.b < env.d ? EnvType::Type1 : EnvType::Type4;
    return env.b > env.d ? EnvType::Type2 : EnvType::Type3;
}

std::array<double, 2> vector_field(const Environment& env, double x, double y) noexcept {
    return {env.alpha * x * (1.0 - env.a * x - env.b * y),
            env.beta * y * (1.0 - env.c * x - env.d * y)};
}

Environment swap_species(const Environment& env) noexcept {
    return Environment(env.d, env.c, env.b, env.a, env.beta, env.alpha);
}

EnvPair swap_species(const EnvPair& pair) noexcept {
    return EnvPair(swap_species(pair.env0), swap_species(pair.env1));
}

Environment mix(const EnvPair& pair, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::invalid_argument("mix: s must lie in [0, 1], got " + std::to_string(s));
    }
    if (s == 0.0) return pair.env0;
    if (s == 1.0) return pair.env1;
    const Environment& e0 = pair.env0;
    const Environment& e1 = pair.env1;
    const double alpha_s = s * e1.alpha + (1.0 - s) * e0.alpha;
    const double beta_s = s * e1.beta + (1.0 - s) * e0.beta;
    const double a_s = (s * e1.alpha * e1.a + (1.0 - s) * e0.alpha * e0.a) / alpha_s;
    const double b_s = (s * e1.alpha * e1.b + (1.0 - s) * e0.alpha * e0.b) / alpha_s;
    const double c_s = (s * e1.beta * e1.c + (1.0 - s) * e0.beta * e0.c) / beta_s;
    const double d_s = (s * e1.beta * e1.d + (1.0 - s) * e0.beta * e0.d) / beta_s;
    return Environment(a_s, b_s, c_s, d_s, alpha_s, beta_s);
}

}  // namespace lvswitch
