#pragma once

#include "lvswitch/environment.hpp"

namespace lvswitch {

/// Switching intensities: lambda0 leaves mode 0, lambda1 leaves mode 1.
struct JumpRates {
    double lambda0, lambda1;

    JumpRates(double l0, double l1);

    friend bool operator==(const JumpRates&, const JumpRates&) = default;
};

/// Balance/speed parametrization of the rates: s*t = lambda0, (1-s)*t = lambda1.
struct STCoords {
    double s, t;
};

/// Growth-rate-weighted chart: u*v = lambda0/w0, (1-u)*v = lambda1/w1.
/// The weight pair records which chart this is (the alpha pair for y-invasion
/// analysis, the beta pair for x-invasion analysis); conversions between
/// charts go through JumpRates. Boundary values u in {0, 1} are representable
/// (they encode limit regimes) but cannot be turned back into rates.
struct UVCoords {
    double u, v;
    double w0, w1;
};

UVCoords rates_to_uv(const JumpRates& rates, double w0, double w1);

/// Inverse of rates_to_uv; rejects u in {0, 1} and v == 0.
JumpRates uv_to_rates(const UVCoords& coords);

/// Chart change (s, t) -> (u, v) with weights (alpha0, alpha1).
/// Triangular: u depends on s only.
UVCoords xi(double s, double t, double alpha0, double alpha1);

STCoords rates_to_st(const JumpRates& rates) noexcept;
JumpRates st_to_rates(const STCoords& st);

/// Convenience charts for a pair.
UVCoords alpha_chart(const EnvPair& pair, const JumpRates& rates);
UVCoords beta_chart(const EnvPair& pair, const JumpRates& rates);

}  // namespace lvswitch
