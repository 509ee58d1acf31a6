#include "hyphull/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "hyphull/errors.hpp"
#include "hyphull/geometry.hpp"

namespace hyphull {

namespace {

struct Grid {
    std::size_t steps;
    double dt;
};

Grid validate(const SimConfig& cfg) {
    if (!(cfg.t_end > 0.0)) throw InvalidConfig("simulate: t_end must be positive");
    if (!(cfg.dt > 0.0)) throw InvalidConfig("simulate: dt must be positive");
    const double dt = std::min(cfg.dt, cfg.t_end);
    // Relative nudge so exact multiples do not round up to an extra
    // zero-length step.
    const auto steps = static_cast<std::size_t>(std::ceil((cfg.t_end / dt) * (1.0 - 1e-12)));
    return Grid{std::max<std::size_t>(steps, 1), dt};
}

}  // namespace

void simulate_halfplane(const SimConfig& cfg, HalfPlanePath& out) {
    const Grid g = validate(cfg);
    const std::size_t m = g.steps + 1;
    out.times.resize(m);
    out.x.resize(m);
    out.y.resize(m);
    out.wy.resize(m);
    out.xi.resize(m);
    out.times[0] = 0.0;
    out.x[0] = 0.0;
    out.y[0] = 1.0;
    out.wy[0] = 0.0;
    out.xi[0] = 0.0;

    PathRng rng(cfg.seed, cfg.path_index);
    KahanSum xi;
    double s = 0.0;
    for (std::size_t i = 0; i < g.steps; ++i) {
        const double h = std::min(g.dt, cfg.t_end - s);
        const double sq = std::sqrt(h);
        const double zx = cfg.zero_noise ? 0.0 : rng.gauss();
        const double zy = cfg.zero_noise ? 0.0 : rng.gauss();
        out.x[i + 1] = out.x[i] + out.y[i] * sq * zx;  // Euler: dX = Y dW^X
        out.wy[i + 1] = out.wy[i] + sq * zy;
        s = (i + 1 == g.steps) ? cfg.t_end : s + h;
        out.times[i + 1] = s;
        out.y[i + 1] = std::exp(out.wy[i + 1] - 0.5 * s);  // exact geometric form
        xi.add(0.5 * h * (out.y[i] * out.y[i] + out.y[i + 1] * out.y[i + 1]));
        out.xi[i + 1] = xi.value();
    }
}

HalfPlanePath simulate_halfplane(const SimConfig& cfg) {
    HalfPlanePath out;
    simulate_halfplane(cfg, out);
    return out;
}

double running_max(const HalfPlanePath& path) {
    if (path.x.empty()) throw EmptyPath("running_max: empty path");
    double m = path.x[0];
    for (const double v : path.x) m = std::max(m, v);
    return m;
}

XiSample simulate_xi(const SimConfig& cfg) {
    const Grid g = validate(cfg);
    PathRng rng(cfg.seed, cfg.path_index);
    KahanSum xi;
    double w = 0.0;
    double s = 0.0;
    double prev = 1.0;  // exp(2 W_0 - 0)
    for (std::size_t i = 0; i < g.steps; ++i) {
        const double h = std::min(g.dt, cfg.t_end - s);
        w += std::sqrt(h) * (cfg.zero_noise ? 0.0 : rng.gauss());
        s = (i + 1 == g.steps) ? cfg.t_end : s + h;
        const double cur = std::exp(2.0 * w - s);
        xi.add(0.5 * h * (prev + cur));
        prev = cur;
    }
    return XiSample{cfg.t_end, xi.value()};
}

void simulate_polar(const SimConfig& cfg, PolarPath& out, double r_floor, double s_entrance,
                    ReflectOrder order) {
    const Grid g = validate(cfg);
    if (!(r_floor > 0.0)) throw InvalidConfig("simulate_polar: r_floor must be positive");
    if (!(s_entrance > 0.0) || !(s_entrance < cfg.t_end))
        throw InvalidConfig("simulate_polar: need 0 < s_entrance < t_end");

    const std::size_t m = g.steps + 1;
    out.times.resize(m);
    out.r.resize(m);
    out.theta_winding.resize(m);
    out.wr.resize(m);
    out.s_entrance = s_entrance;
    out.r_floor = r_floor;
    out.bound_slack = 0.0;

    PathRng rng(cfg.seed, cfg.path_index);
    out.theta_entrance = cfg.zero_noise ? 0.0 : 2.0 * std::numbers::pi * rng.uniform01();

    // The drift dt/(2 tanh R) must not be evaluated below the diffusive scale
    // sqrt(dt)/2: at the literal reflection floor the Euler drift step would
    // be dt/(2 r_floor) >> 1 and destroy the path. coth >= 1 still holds, so
    // the pathwise bound R_t >= t/2 + W_t is unaffected.
    const double drift_floor = std::max(r_floor, 0.5 * std::sqrt(g.dt));

    double state = 0.0;  // R_0 = 0
    double w = 0.0;
    double theta = 0.0;
    bool winding = false;
    double s = 0.0;
    out.times[0] = 0.0;
    out.r[0] = 0.0;
    out.theta_winding[0] = 0.0;
    out.wr[0] = 0.0;

    for (std::size_t i = 0; i < g.steps; ++i) {
        const double h = std::min(g.dt, cfg.t_end - s);
        const double sq = std::sqrt(h);
        const double zr = cfg.zero_noise ? 0.0 : rng.gauss();
        const double zt = cfg.zero_noise ? 0.0 : rng.gauss();

        const double reflected = std::max(state, r_floor);
        if (winding) theta += sq * zt / std::sinh(reflected);

        const double base = (order == ReflectOrder::ReflectThenStep) ? reflected : std::max(state, 0.0);
        const double drift_at = std::max(base, drift_floor);
        state = base + 0.5 * h / std::tanh(drift_at) + sq * zr;
        if (order == ReflectOrder::StepThenReflect) state = std::max(state, r_floor);

        w += sq * zr;
        s = (i + 1 == g.steps) ? cfg.t_end : s + h;
        if (!winding && s >= s_entrance - 1e-12) winding = true;  // winding starts at first gridpoint >= s

        out.times[i + 1] = s;
        out.r[i + 1] = std::max(state, 0.0);
        out.theta_winding[i + 1] = theta;
        out.wr[i + 1] = w;
        out.bound_slack = std::max(out.bound_slack, 0.5 * s + w - out.r[i + 1]);
    }
    out.bound_slack = std::max(out.bound_slack, 0.0);
}

PolarPath simulate_polar(const SimConfig& cfg, double r_floor, double s_entrance, ReflectOrder order) {
    PolarPath out;
    simulate_polar(cfg, out, r_floor, s_entrance, order);
    return out;
}

double sample_exp_time(double lambda, PathRng& rng) {
    if (!(lambda > 0.0)) throw InvalidConfig("sample_exp_time: lambda must be positive");
    const double u = 1.0 - rng.uniform01();  // uniform on (0, 1]
    return -std::log(u) / lambda;
}

namespace {

void put(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace

void write_halfplane_csv(std::ostream& os, const HalfPlanePath& path) {
    os << "t,x,y,xi\n";
    for (std::size_t i = 0; i < path.times.size(); ++i) {
        put(os, path.times[i]);
        os << ',';
        put(os, path.x[i]);
        os << ',';
        put(os, path.y[i]);
        os << ',';
        put(os, path.xi[i]);
        os << '\n';
    }
}

void write_polar_csv(std::ostream& os, const PolarPath& path) {
    os << "t,r,theta\n";
    for (std::size_t i = 0; i < path.times.size(); ++i) {
        put(os, path.times[i]);
        os << ',';
        put(os, path.r[i]);
        os << ',';
        const double th = (path.times[i] < path.s_entrance)
                              ? path.theta_entrance
                              : normalize_angle(path.theta_entrance + path.theta_winding[i]);
        put(os, th);
        os << '\n';
    }
}

}  // namespace hyphull
