#pragma once

// Monte Carlo orchestration: perimeter estimators, radius/angle statistics,
// moment estimators and distribution tests. Paths are distributed across a
// worker pool; every path is a pure function of (seed, path_index), results
// land in a per-index slot, and the reduction is a deterministic pairwise
// tree over path_index order, so estimates are bit-identical for any thread
// count.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyphull/quadrature.hpp"
#include "hyphull/simulate.hpp"

namespace hyphull {

struct MCEstimate {
    double mean = 0.0;
    double std_err = 0.0;  // sample std / sqrt(n); 0 when n < 2
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string label;
    double horizon = 0.0;
};

struct KSResult {
    double statistic = 0.0;  // in [0, 1]
    std::uint64_t n = 0;
    std::string reference;
};

struct AngularRateResult {
    std::vector<double> slopes;        // per-path slope of log|Theta_end - Theta_t| on t
    std::vector<double> theta_limits;  // per-path theta_infinity proxy in [0, 2pi)
};

/// Distribute body(0..n-1) over a pool; exceptions from workers are rethrown.
void parallel_for_index(std::uint64_t n, int threads, const std::function<void(std::uint64_t)>& body);

/// Deterministic pairwise-tree sum.
double pairwise_sum(std::span<const double> v);

/// Pairwise mean / stderr over per-path samples.
MCEstimate summarize_samples(std::string label, double horizon, std::uint64_t seed,
                             std::span<const double> values);

/// Run path_value(path_index) for path_index in [0, n) and collect by index.
std::vector<double> mc_samples(std::uint64_t n, int threads,
                               const std::function<double(std::uint64_t)>& path_value);

// --- perimeter estimators -------------------------------------------------

/// Direct hull pipeline: half-plane path -> Poincare -> Klein -> incremental
/// hull -> edge-sum perimeter. Paths with path_index % 100 == 0 are audited
/// against the Cauchy integral (|diff| <= 1e-6) and every path is checked
/// against the line-segment bound L >= 2R - 1e-9.
MCEstimate estimate_L_direct(double t, std::uint64_t n, const SimConfig& sim, const QuadratureSpec& q = {},
                             int threads = 0);

/// Mean of the running maximum X*_t (E L_t = 2 pi E X*_t).
MCEstimate estimate_Xstar(double t, std::uint64_t n, const SimConfig& sim, int threads = 0);

/// Rao-Blackwellized estimator sqrt(8 pi) E sqrt(xi_t): only the 1-D driving
/// noise W^Y is simulated.
MCEstimate estimate_L_rb(double t, std::uint64_t n, const SimConfig& sim, int threads = 0);

/// Perimeter at an independent Exp(lambda) time, rb form. Each path draws its
/// own horizon from a dedicated stream (salt separated from the path noise)
/// and is simulated to it exactly; horizons are capped at the 1 - 1e-8
/// quantile. Reported horizon is the mean 1/lambda.
MCEstimate estimate_L_exp_time(double lambda, std::uint64_t n, const SimConfig& sim, int threads = 0);

enum class RadiusScheme { HalfPlane, Polar };

/// Mean geodesic radius at horizon t. HalfPlane recovers R through
/// cosh R = (x^2+y^2+1)/(2y); Polar reads the radial coordinate.
MCEstimate estimate_radius(double t, std::uint64_t n, const SimConfig& sim,
                           RadiusScheme scheme = RadiusScheme::HalfPlane, int threads = 0);

/// Mean of xi_t^p.
MCEstimate estimate_xi_moment(double t, double p, std::uint64_t n, const SimConfig& sim, int threads = 0);

// --- distribution tests ----------------------------------------------------

double cauchy_cdf(double x);
double half_stable_cdf(double s);  // erfc(1/sqrt(2s)) on s > 0

/// Two-sided KS distance between the sample and a reference CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// KS of X_t against the standard Cauchy law and of xi_t against the positive
/// half-stable law, both at a large horizon.
std::pair<KSResult, KSResult> ks_test_limit_laws(double t_large, std::uint64_t n, const SimConfig& sim,
                                                 int threads = 0);

/// Reference-law samplers for threshold calibration at matched n.
std::vector<double> sample_reference_cauchy(std::uint64_t n, std::uint64_t seed);
std::vector<double> sample_reference_half_stable(std::uint64_t n, std::uint64_t seed);

/// Per-path winding-convergence slopes over t_grid (polar scheme, horizon =
/// back of t_grid, whose winding value proxies Theta_infinity) and the
/// per-path limiting-angle proxies.
AngularRateResult angular_convergence_rate(std::uint64_t n, const SimConfig& sim, double s_entrance,
                                           std::span<const double> t_grid, int threads = 0);

// --- results CSV ------------------------------------------------------------

struct ResultRow {
    MCEstimate est;
    double dt = 0.0;
    std::optional<double> target;
    std::string target_source;
};

/// Header: label,horizon,n,dt,seed,mean,stderr,target,target_source.
/// Floats at 17 significant digits; target fields empty when absent.
void write_results_csv(std::ostream& os, std::span<const ResultRow> rows);

}  // namespace hyphull
