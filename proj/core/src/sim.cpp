#include "lvswitch/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lvswitch/errors.hpp"
#include "lvswitch/parallel.hpp"
#include "lvswitch/rng.hpp"

namespace lvswitch {

namespace {

double max_growth_rate(const EnvPair& pair) {
    return std::max(std::max(pair.env0.alpha, pair.env1.alpha),
                    std::max(pair.env0.beta, pair.env1.beta));
}

struct ResolvedConfig {
    double t_max;
    double dt_max;
    double burn_in;
    std::uint64_t seed;
    double x0, y0;
    int i0;
};

ResolvedConfig resolve(const EnvPair& pair, const SimConfig& cfg) {
    ResolvedConfig r;
    r.t_max = cfg.t_max;
    r.dt_max = cfg.dt_max > 0.0 ? cfg.dt_max : 0.01 / max_growth_rate(pair);
    r.burn_in = cfg.burn_in >= 0.0 ? cfg.burn_in : 0.1 * cfg.t_max;
    r.seed = cfg.seed;
    r.x0 = cfg.x0;
    r.y0 = cfg.y0;
    r.i0 = cfg.i0;
    if (!(r.t_max > 0.0) || !std::isfinite(r.t_max)) {
        throw std::invalid_argument("t_max must be strictly positive and finite");
    }
    if (!(r.dt_max > 0.0 && r.dt_max <= r.t_max)) {
        throw std::invalid_argument("dt_max must satisfy 0 < dt_max <= t_max");
    }
    if (!(r.burn_in < r.t_max)) {
        throw std::invalid_argument("burn_in must be smaller than t_max");
    }
    if (r.i0 != 0 && r.i0 != 1) {
        throw std::invalid_argument("i0 must be 0 or 1");
    }
    if (!(r.x0 > 0.0) || !(r.y0 > 0.0)) {
        throw std::invalid_argument("initial state must be strictly positive");
    }
    return r;
}

double state_bound(const EnvPair& pair) {
    const double inv = std::max(std::max(1.0 / pair.env0.a, 1.0 / pair.env1.a),
                                std::max(1.0 / pair.env0.d, 1.0 / pair.env1.d));
    return 10.0 * inv;
}

inline void rk4_planar(const Environment& e, double h, double& x, double& y) {
    const auto fx = [&](double px, double py) { return e.alpha * px * (1.0 - e.a * px - e.b * py); };
    const auto fy = [&](double px, double py) { return e.beta * py * (1.0 - e.c * px - e.d * py); };
    const double k1x = fx(x, y), k1y = fy(x, y);
    const double k2x = fx(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
    const double k2y = fy(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
    const double k3x = fx(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
    const double k3y = fy(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
    const double k4x = fx(x + h * k3x, y + h * k3y);
    const double k4y = fy(x + h * k3x, y + h * k3y);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
}

inline void rk4_logistic(double growth, double self, double h, double& x) {
    const auto f = [&](double p) { return growth * p * (1.0 - self * p); };
    const double k1 = f(x);
    const double k2 = f(x + 0.5 * h * k1);
    const double k3 = f(x + 0.5 * h * k2);
    const double k4 = f(x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Shared event-driven loop. step(mode, h, t_before, t_after) advances the
/// state and returns false to stop the run; on_sample(t, mode) fires after
/// each step; on_segment records each holding interval. Returns at t_max or
/// on early stop.
template <class StepFn, class SampleFn, class SegmentFn>
void drive_pdmp(const ResolvedConfig& rc, const JumpRates& rates, StepFn&& step,
                SampleFn&& on_sample, SegmentFn&& on_segment) {
    SplitMix64 rng(rc.seed);
    const double lambda[2] = {rates.lambda0, rates.lambda1};
    double t = 0.0;
    int mode = rc.i0;
    while (t < rc.t_max) {
        const double hold = rng.next_exponential(lambda[mode]);
        const double seg_start = t;
        const double seg_end = std::min(t + hold, rc.t_max);
        const double span = seg_end - seg_start;
        const long nsub = std::max(1L, static_cast<long>(std::ceil(span / rc.dt_max)));
        const double h = span / static_cast<double>(nsub);
        for (long k = 1; k <= nsub; ++k) {
            const double t_next = (k == nsub) ? seg_end : seg_start + h * static_cast<double>(k);
            const bool keep_going = step(mode, h, t, t_next);
            t = t_next;
            on_sample(t, mode);
            if (!keep_going) {
                on_segment(ModeSegment{seg_start, t, mode});
                return;
            }
        }
        on_segment(ModeSegment{seg_start, seg_end, mode});
        if (seg_end >= rc.t_max) break;
        mode = 1 - mode;
    }
}

}  // namespace

Trajectory simulate_pdmp(const EnvPair& pair, const JumpRates& rates, const SimConfig& cfg,
                         int record_stride) {
    if (record_stride < 1) throw std::invalid_argument("record_stride must be >= 1");
    const ResolvedConfig rc = resolve(pair, cfg);
    const double bound = state_bound(pair);
    const Environment* envs[2] = {&pair.env0, &pair.env1};

    Trajectory traj;
    double x = rc.x0, y = rc.y0;
    long counter = 0;
    traj.times.push_back(0.0);
    traj.x.push_back(x);
    traj.y.push_back(y);
    traj.mode.push_back(rc.i0);

    drive_pdmp(
        rc, rates,
        [&](int mode, double h, double, double) {
            rk4_planar(*envs[mode], h, x, y);
            if (!(x >= 0.0 && y >= 0.0 && x <= bound && y <= bound) || !std::isfinite(x) ||
                !std::isfinite(y)) {
                throw IntegratorBlowup("state left [0, " + std::to_string(bound) +
                                       "]^2; reduce dt_max");
            }
            return true;
        },
        [&](double t, int mode) {
            if (++counter % record_stride == 0 || t >= rc.t_max) {
                traj.times.push_back(t);
                traj.x.push_back(x);
                traj.y.push_back(y);
                traj.mode.push_back(mode);
            }
        },
        [&](const ModeSegment& seg) { traj.segments.push_back(seg); });
    return traj;
}

Trajectory simulate_switched_logistic(const EnvPair& pair, const JumpRates& rates, Axis axis,
                                      const SimConfig& cfg, int record_stride) {
    if (record_stride < 1) throw std::invalid_argument("record_stride must be >= 1");
    const ResolvedConfig rc = resolve(pair, cfg);
    const double bound = state_bound(pair);
    // Axis X: (growth, self) = (alpha_i, a_i); axis Y: (beta_i, d_i).
    const double growth[2] = {axis == Axis::X ? pair.env0.alpha : pair.env0.beta,
                              axis == Axis::X ? pair.env1.alpha : pair.env1.beta};
    const double self[2] = {axis == Axis::X ? pair.env0.a : pair.env0.d,
                            axis == Axis::X ? pair.env1.a : pair.env1.d};

    Trajectory traj;
    double z = axis == Axis::X ? rc.x0 : rc.y0;
    long counter = 0;
    const auto record = [&](double t, int mode) {
        traj.times.push_back(t);
        traj.x.push_back(axis == Axis::X ? z : 0.0);
        traj.y.push_back(axis == Axis::X ? 0.0 : z);
        traj.mode.push_back(mode);
    };
    record(0.0, rc.i0);

    drive_pdmp(
        rc, rates,
        [&](int mode, double h, double, double) {
            rk4_logistic(growth[mode], self[mode], h, z);
            if (!(z >= 0.0 && z <= bound) || !std::isfinite(z)) {
                throw IntegratorBlowup("state left [0, " + std::to_string(bound) +
                                       "]; reduce dt_max");
            }
            return true;
        },
        [&](double t, int mode) {
            if (++counter % record_stride == 0 || t >= rc.t_max) record(t, mode);
        },
        [&](const ModeSegment& seg) { traj.segments.push_back(seg); });
    return traj;
}

ErgodicStats estimate_lambda(const EnvPair& pair, const JumpRates& rates, Species species,
                             const SimConfig& cfg) {
    const double mixing = 100.0 * (1.0 / rates.lambda0 + 1.0 / rates.lambda1);
    if (cfg.t_max < mixing) {
        throw std::invalid_argument("estimate_lambda: t_max must be at least 100*(1/lambda0 + "
                                    "1/lambda1) = " +
                                    std::to_string(mixing));
    }
    const ResolvedConfig rc = resolve(pair, cfg);
    const double bound = state_bound(pair);

    // Resident runs on the other species' axis; the integrand is the
    // invader's per-capita growth against the resident state.
    const Axis axis = species == Species::Y ? Axis::X : Axis::Y;
    const double growth[2] = {axis == Axis::X ? pair.env0.alpha : pair.env0.beta,
                              axis == Axis::X ? pair.env1.alpha : pair.env1.beta};
    const double self[2] = {axis == Axis::X ? pair.env0.a : pair.env0.d,
                            axis == Axis::X ? pair.env1.a : pair.env1.d};
    const double inv_growth[2] = {species == Species::Y ? pair.env0.beta : pair.env0.alpha,
                                  species == Species::Y ? pair.env1.beta : pair.env1.alpha};
    const double inv_coef[2] = {species == Species::Y ? pair.env0.c : pair.env0.b,
                                species == Species::Y ? pair.env1.c : pair.env1.b};

    constexpr int kBatches = 25;
    const double span = rc.t_max - rc.burn_in;
    const double batch_len = span / kBatches;
    double integral[kBatches] = {};
    double time_in[kBatches] = {};

    double z = axis == Axis::X ? rc.x0 : rc.y0;
    drive_pdmp(
        rc, rates,
        [&](int mode, double h, double t_before, double) {
            const double g_before = inv_growth[mode] * (1.0 - inv_coef[mode] * z);
            rk4_logistic(growth[mode], self[mode], h, z);
            if (!(z >= 0.0 && z <= bound) || !std::isfinite(z)) {
                throw IntegratorBlowup("state left [0, " + std::to_string(bound) +
                                       "]; reduce dt_max");
            }
            const double g_after = inv_growth[mode] * (1.0 - inv_coef[mode] * z);
            // Trapezoid contribution, prorated when the step straddles burn-in.
            double weight = h;
            if (t_before + h <= rc.burn_in) return true;
            if (t_before < rc.burn_in) weight = t_before + h - rc.burn_in;
            const double mid = t_before + h - 0.5 * weight;
            int k = static_cast<int>((mid - rc.burn_in) / batch_len);
            k = std::clamp(k, 0, kBatches - 1);
            integral[k] += weight * 0.5 * (g_before + g_after);
            time_in[k] += weight;
            return true;
        },
        [](double, int) {}, [](const ModeSegment&) {});

    ErgodicStats stats;
    stats.batches = kBatches;
    double total_i = 0.0, total_t = 0.0;
    double means[kBatches];
    for (int k = 0; k < kBatches; ++k) {
        total_i += integral[k];
        total_t += time_in[k];
        means[k] = time_in[k] > 0.0 ? integral[k] / time_in[k] : 0.0;
    }
    stats.estimate = total_i / total_t;
    stats.total_time = total_t;
    double var = 0.0;
    double mean_of_means = 0.0;
    for (double m : means) mean_of_means += m;
    mean_of_means /= kBatches;
    for (double m : means) var += (m - mean_of_means) * (m - mean_of_means);
    var /= (kBatches - 1);
    stats.std_error = std::sqrt(var / kBatches);
    return stats;
}

RegimeVotes detect_regime(const EnvPair& pair, const JumpRates& rates, const SimConfig& cfg,
                          int replicas, double extinction_threshold) {
    if (replicas < 20) {
        throw std::invalid_argument("detect_regime: need at least 20 replicas");
    }
    if (!(extinction_threshold > 0.0)) {
        throw std::invalid_argument("detect_regime: extinction threshold must be positive");
    }

    enum class Outcome { Persistence, ExtinctionX, ExtinctionY };
    struct ReplicaResult {
        Outcome outcome = Outcome::Persistence;
        bool near_extinct_at_end = false;
    };
    std::vector<ReplicaResult> results(replicas);

    parallel_for(static_cast<std::size_t>(replicas), [&](std::size_t r) {
        SimConfig replica_cfg = cfg;
        replica_cfg.seed = cfg.seed ^ static_cast<std::uint64_t>(r);
        const ResolvedConfig rc = resolve(pair, replica_cfg);
        const double bound = state_bound(pair);
        const Environment* envs[2] = {&pair.env0, &pair.env1};

        double x = rc.x0, y = rc.y0;
        bool decided = false;
        ReplicaResult res;
        drive_pdmp(
                rc, rates,
                [&](int mode, double h, double, double) {
                    rk4_planar(*envs[mode], h, x, y);
                    if (!(x >= 0.0 && y >= 0.0 && x <= bound && y <= bound) ||
                        !std::isfinite(x) || !std::isfinite(y)) {
                        throw IntegratorBlowup("state escaped the admissible box");
                    }
                    const bool x_out = x < extinction_threshold;
                    const bool y_out = y < extinction_threshold;
                    if (x_out || y_out) {
                        res.outcome = (x_out && (!y_out || x <= y)) ? Outcome::ExtinctionX
                                                                    : Outcome::ExtinctionY;
                        decided = true;
                    }
                    return !decided;
                },
                [](double, int) {}, [](const ModeSegment&) {});
        } catch (const IntegratorBlowup&) {
            throw;
        }
        if (!decided) {
            res.outcome = Outcome::Persistence;
            res.near_extinct_at_end = std::min(x, y) < 1e-4;
        }
        results[r] = res;
    });

    RegimeVotes votes;
    votes.replicas = replicas;
    bool all_near = true;
    for (const ReplicaResult& res : results) {
        switch (res.outcome) {
            case Outcome::Persistence: votes.persistence++; break;
            case Outcome::ExtinctionX: votes.extinction_x++; break;
            case Outcome::ExtinctionY: votes.extinction_y++; break;
        }
        if (!(res.outcome == Outcome::Persistence && res.near_extinct_at_end)) all_near = false;
    }
    votes.inconclusive = all_near;
    return votes;
}

}  // namespace lvswitch
