#include "lvswitch/coords.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lvswitch {

namespace {

void require_rate(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string(name) +
                                    " must be strictly positive and finite, got " +
                                    std::to_string(value));
    }
}

}  // namespace

JumpRates::JumpRates(double l0, double l1) : lambda0(l0), lambda1(l1) {
    require_rate(lambda0, "lambda0");
    require_rate(lambda1, "lambda1");
}

UVCoords rates_to_uv(const JumpRates& rates, double w0, double w1) {
    require_rate(w0, "chart weight w0");
    require_rate(w1, "chart weight w1");
    const double r0 = rates.lambda0 / w0;
    const double r1 = rates.lambda1 / w1;
    return UVCoords{r0 / (r0 + r1), r0 + r1, w0, w1};
}

JumpRates uv_to_rates(const UVCoords& coords) {
    if (!(coords.u > 0.0 && coords.u < 1.0)) {
        throw std::invalid_argument("uv_to_rates: u encodes a boundary regime, not a process (u = " +
                                    std::to_string(coords.u) + ")");
    }
    if (!(coords.v > 0.0) || !std::isfinite(coords.v)) {
        throw std::invalid_argument("uv_to_rates: v must be strictly positive and finite");
    }
    return JumpRates(coords.u * coords.v * coords.w0, (1.0 - coords.u) * coords.v * coords.w1);
}

UVCoords xi(double s, double t, double alpha0, double alpha1) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::invalid_argument("xi: s must lie in [0, 1]");
    }
    require_rate(t, "t");
    require_rate(alpha0, "alpha0");
    require_rate(alpha1, "alpha1");
    const double alpha_s = (1.0 - s) * alpha0 + s * alpha1;
    return UVCoords{s * alpha1 / alpha_s, t * alpha_s / (alpha0 * alpha1), alpha0, alpha1};
}

STCoords rates_to_st(const JumpRates& rates) noexcept {
    const double t = rates.lambda0 + rates.lambda1;
    return STCoords{rates.lambda0 / t, t};
}

JumpRates st_to_rates(const STCoords& st) {
    if (!(st.s > 0.0 && st.s < 1.0)) {
        throw std::invalid_argument("st_to_rates: s must lie in (0, 1)");
    }
    require_rate(st.t, "t");
    return JumpRates(st.s * st.t, (1.0 - st.s) * st.t);
}

UVCoords alpha_chart(const EnvPair& pair, const JumpRates& rates) {
    return rates_to_uv(rates, pair.env0.alpha, pair.env1.alpha);
}

UVCoords beta_chart(const EnvPair& pair, const JumpRates& rates) {
    return rates_to_uv(rates, pair.env0.beta, pair.env1.beta);
}

}  // namespace lvswitch
