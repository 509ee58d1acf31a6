#pragma once

// Path generation for hyperbolic Brownian motion.
//
// The primary scheme works in half-plane coordinates: Y_t = exp(W^Y_t - t/2)
// is stored in exact geometric form (never Euler-stepped), X is the single
// stochastic integral dX = Y dW^X, and the exponential functional
// xi_t = int_0^t Y_s^2 ds accumulates by trapezoid. The polar scheme exists
// for figure reproduction and cross-validation only: it carries the tanh
// singularity at R = 0 and the rapid-spinning entrance.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hyphull/rng.hpp"

namespace hyphull {

struct SimConfig {
    double t_end = 1.0;
    double dt = 1e-3;
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
    bool zero_noise = false;  // debug: all Gaussian increments forced to 0
};

/// Half-plane trajectory on the grid {0, dt, 2dt, ..., t_end} (final step
/// shortened to land exactly on t_end). Invariant: y[i] = exp(wy[i] -
/// times[i]/2) to the last bit; xi is nondecreasing.
struct HalfPlanePath {
    std::vector<double> times;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> wy;  // driving noise W^Y at gridpoints
    std::vector<double> xi;  // running exponential functional
};

/// Radial/winding trajectory. theta_winding holds the post-s winding process
/// (0 before s_entrance); theta_entrance is the Unif[0,2pi) entrance angle.
struct PolarPath {
    std::vector<double> times;
    std::vector<double> r;
    std::vector<double> theta_winding;
    std::vector<double> wr;  // driving radial noise at gridpoints
    double theta_entrance = 0.0;
    double s_entrance = 0.0;
    double r_floor = 0.0;
    /// max over the grid of (t/2 + W - R)+ ; zero in exact arithmetic since
    /// coth >= 1 and reflection only raises R.
    double bound_slack = 0.0;
};

struct XiSample {
    double t = 0.0;
    double xi_t = 0.0;
};

/// Drift handling when R sits between 0 and the reflection floor.
enum class ReflectOrder { ReflectThenStep, StepThenReflect };

/// Compensated accumulator; the xi integrand spans many orders of magnitude
/// over long horizons and naive summation loses the tail.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

HalfPlanePath simulate_halfplane(const SimConfig& cfg);
void simulate_halfplane(const SimConfig& cfg, HalfPlanePath& out);  // reuses buffers

/// X*_t = max of x over the grid.
double running_max(const HalfPlanePath& path);

/// Terminal statistics of a half-plane path without materializing the grid
/// arrays; draw-for-draw identical to simulate_halfplane.
struct HalfPlaneTerminal {
    double x = 0.0;
    double xstar = 0.0;
    double y = 1.0;
    double xi = 0.0;
};
HalfPlaneTerminal simulate_halfplane_terminal(const SimConfig& cfg);

/// Trapezoid discretization of int_0^t exp(2 W_s - s) ds; only the terminal
/// value is materialized.
XiSample simulate_xi(const SimConfig& cfg);

PolarPath simulate_polar(const SimConfig& cfg, double r_floor = 1e-6, double s_entrance = 1e-3,
                         ReflectOrder order = ReflectOrder::ReflectThenStep);
void simulate_polar(const SimConfig& cfg, PolarPath& out, double r_floor = 1e-6, double s_entrance = 1e-3,
                    ReflectOrder order = ReflectOrder::ReflectThenStep);

/// -log(U)/lambda with U uniform on (0, 1].
double sample_exp_time(double lambda, PathRng& rng);

/// CSV dumps, 17 significant digits. Half-plane header: t,x,y,xi.
/// Polar header: t,r,theta with theta the full angle (entrance + winding,
/// reduced to [0,2pi)).
void write_halfplane_csv(std::ostream& os, const HalfPlanePath& path);
void write_polar_csv(std::ostream& os, const PolarPath& path);

}  // namespace hyphull
