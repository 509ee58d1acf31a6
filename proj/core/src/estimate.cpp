#include "hyphull/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "hyphull/cauchy.hpp"
#include "hyphull/errors.hpp"
#include "hyphull/geometry.hpp"
#include "hyphull/hull.hpp"

namespace hyphull {

namespace {

constexpr std::uint64_t kSaltExpTime = 1;     // horizon draws, separate from path noise
constexpr std::uint64_t kSaltReference = 2;   // reference-law samplers
constexpr double kExpTimeTailMass = 1e-8;     // horizon cap quantile

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

double pairwise_sum_rec(const double* v, std::size_t len) {
    if (len <= 32) {
        double s = 0.0;
        for (std::size_t i = 0; i < len; ++i) s += v[i];
        return s;
    }
    const std::size_t half = len / 2;
    return pairwise_sum_rec(v, half) + pairwise_sum_rec(v + half, len - half);
}

}  // namespace

double pairwise_sum(std::span<const double> v) {
    return v.empty() ? 0.0 : pairwise_sum_rec(v.data(), v.size());
}

void parallel_for_index(std::uint64_t n, int threads, const std::function<void(std::uint64_t)>& body) {
    const int nt = std::min<int>(resolve_threads(threads), 256);
    if (nt <= 1 || n < 2) {
        for (std::uint64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    constexpr std::uint64_t chunk = 16;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const std::uint64_t end = std::min(begin + chunk, n);
            try {
                for (std::uint64_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nt));
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

MCEstimate summarize_samples(std::string label, double horizon, std::uint64_t seed,
                             std::span<const double> values) {
    MCEstimate est;
    est.label = std::move(label);
    est.horizon = horizon;
    est.seed = seed;
    est.n = values.size();
    if (values.empty()) return est;
    est.mean = pairwise_sum(values) / static_cast<double>(values.size());
    if (values.size() >= 2) {
        std::vector<double> sq(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double d = values[i] - est.mean;
            sq[i] = d * d;
        }
        const double var = pairwise_sum(sq) / static_cast<double>(values.size() - 1);
        est.std_err = std::sqrt(var / static_cast<double>(values.size()));
    }
    return est;
}

std::vector<double> mc_samples(std::uint64_t n, int threads,
                               const std::function<double(std::uint64_t)>& path_value) {
    std::vector<double> out(n);
    parallel_for_index(n, threads, [&](std::uint64_t i) { out[i] = path_value(i); });
    return out;
}

// --- estimators -------------------------------------------------------------

MCEstimate estimate_L_direct(double t, std::uint64_t n, const SimConfig& sim, const QuadratureSpec& q,
                             int threads) {
    if (!(t > 0.0)) throw InvalidConfig("estimate_L_direct: t must be positive");
    auto samples = mc_samples(n, threads, [&](std::uint64_t idx) {
        thread_local HalfPlanePath path;
        SimConfig cfg = sim;
        cfg.t_end = t;
        cfg.path_index = idx;
        simulate_halfplane(cfg, path);

        HullAccumulator acc;
        for (std::size_t i = 0; i < path.times.size(); ++i) {
            const PoincarePoint p = halfplane_to_poincare(HalfPlanePoint{path.x[i], path.y[i]});
            acc.add(poincare_to_klein(p));
        }
        const ConvexPolygon& poly = acc.finish();
        const double per = edge_sum_perimeter(poly);

        const double radius = halfplane_radius(HalfPlanePoint{path.x.back(), path.y.back()});
        if (per < 2.0 * radius - 1e-9)
            throw ToleranceNotMet("estimate_L_direct: line-segment lower bound violated");
        if (idx % 100 == 0) {
            const double via_cauchy = cauchy_perimeter(poly, q);
            if (std::abs(via_cauchy - per) > 1e-6)
                throw ToleranceNotMet("estimate_L_direct: Cauchy/edge-sum audit failed");
        }
        return per;
    });
    return summarize_samples("direct", t, sim.seed, samples);
}

MCEstimate estimate_Xstar(double t, std::uint64_t n, const SimConfig& sim, int threads) {
    if (!(t > 0.0)) throw InvalidConfig("estimate_Xstar: t must be positive");
    auto samples = mc_samples(n, threads, [&](std::uint64_t idx) {
        SimConfig cfg = sim;
        cfg.t_end = t;
        cfg.path_index = idx;
        return simulate_halfplane_terminal(cfg).xstar;
    });
    return summarize_samples("xstar", t, sim.seed, samples);
}

MCEstimate estimate_L_rb(double t, std::uint64_t n, const SimConfig& sim, int threads) {
    if (!(t > 0.0)) throw InvalidConfig("estimate_L_rb: t must be positive");
    const double c = std::sqrt(8.0 * std::numbers::pi);
    auto samples = mc_samples(n, threads, [&](std::uint64_t idx) {
        SimConfig cfg = sim;
        cfg.t_end = t;
        cfg.path_index = idx;
        return c * std::sqrt(simulate_xi(cfg).xi_t);
    });
    return summarize_samples("rb", t, sim.seed, samples);
}

MCEstimate estimate_L_exp_time(double lambda, std::uint64_t n, const SimConfig& sim, int threads) {
    if (!(lambda > 0.0)) throw InvalidConfig("estimate_L_exp_time: lambda must be positive");
    const double t_cap = -std::log(kExpTimeTailMass) / lambda;
    const double c = std::sqrt(8.0 * std::numbers::pi);
    auto samples = mc_samples(n, threads, [&](std::uint64_t idx) {
        PathRng horizon_rng(sim.seed, idx, kSaltExpTime);
        const double t = std::min(sample_exp_time(lambda, horizon_rng), t_cap);
        SimConfig cfg = sim;
        cfg.t_end = t;
        cfg.path_index = idx;
        return c * std::sqrt(simulate_xi(cfg).xi_t);
    });
    return summarize_samples("exp_time", 1.0 / lambda, sim.seed, samples);
}

MCEstimate estimate_radius(double t, std::uint64_t n, const SimConfig& sim, RadiusScheme scheme,
                           int threads) {
    if (!(t > 0.0)) throw InvalidConfig("estimate_radius: t must be positive");
    std::vector<double> samples;
    if (scheme == RadiusScheme::HalfPlane) {
        samples = mc_samples(n, threads, [&](std::uint64_t idx) {
            SimConfig cfg = sim;
            cfg.t_end = t;
            cfg.path_index = idx;
            const HalfPlaneTerminal hp = simulate_halfplane_terminal(cfg);
            return halfplane_radius(HalfPlanePoint{hp.x, hp.y});
        });
    } else {
        samples = mc_samples(n, threads, [&](std::uint64_t idx) {
            thread_local PolarPath path;
            SimConfig cfg = sim;
            cfg.t_end = t;
            cfg.path_index = idx;
            simulate_polar(cfg, path);
            return path.r.back();
        });
    }
    return summarize_samples(scheme == RadiusScheme::HalfPlane ? "radius_hp" : "radius_polar", t,
                             sim.seed, samples);
}

MCEstimate estimate_xi_moment(double t, double p, std::uint64_t n, const SimConfig& sim, int threads) {
    if (!(t > 0.0)) throw InvalidConfig("estimate_xi_moment: t must be positive");
    if (!(p > 0.0)) throw InvalidConfig("estimate_xi_moment: p must be positive");
    auto samples = mc_samples(n, threads, [&](std::uint64_t idx) {
        SimConfig cfg = sim;
        cfg.t_end = t;
        cfg.path_index = idx;
        return std::pow(simulate_xi(cfg).xi_t, p);
    });
    char label[48];
    std::snprintf(label, sizeof(label), "xi_moment_p%g", p);
    return summarize_samples(label, t, sim.seed, samples);
}

// --- distribution tests ------------------------------------------------------

double cauchy_cdf(double x) { return 0.5 + std::atan(x) / std::numbers::pi; }

double half_stable_cdf(double s) {
    if (!(s > 0.0)) return 0.0;
    return std::erfc(1.0 / std::sqrt(2.0 * s));
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw InvalidConfig("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

std::pair<KSResult, KSResult> ks_test_limit_laws(double t_large, std::uint64_t n, const SimConfig& sim,
                                                 int threads) {
    if (!(t_large > 0.0)) throw InvalidConfig("ks_test_limit_laws: t must be positive");
    std::vector<double> xs(n);
    std::vector<double> xis(n);
    parallel_for_index(n, threads, [&](std::uint64_t idx) {
        SimConfig cfg = sim;
        cfg.t_end = t_large;
        cfg.path_index = idx;
        const HalfPlaneTerminal hp = simulate_halfplane_terminal(cfg);
        xs[idx] = hp.x;
        xis[idx] = hp.xi;
    });
    KSResult a{ks_statistic(std::move(xs), cauchy_cdf), n, "cauchy"};
    KSResult b{ks_statistic(std::move(xis), half_stable_cdf), n, "half-stable"};
    return {a, b};
}

std::vector<double> sample_reference_cauchy(std::uint64_t n, std::uint64_t seed) {
    std::vector<double> out(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        PathRng rng(seed, i, kSaltReference);
        out[i] = std::tan(std::numbers::pi * (rng.uniform01() - 0.5));
    }
    return out;
}

std::vector<double> sample_reference_half_stable(std::uint64_t n, std::uint64_t seed) {
    // 1/N^2 for N standard normal has the positive 1/2-stable law with
    // density (2 pi)^{-1/2} s^{-3/2} exp(-1/(2s)).
    std::vector<double> out(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        PathRng rng(seed, i, kSaltReference);
        double z = rng.gauss();
        while (z == 0.0) z = rng.gauss();
        out[i] = 1.0 / (z * z);
    }
    return out;
}

AngularRateResult angular_convergence_rate(std::uint64_t n, const SimConfig& sim, double s_entrance,
                                           std::span<const double> t_grid, int threads) {
    if (t_grid.size() < 3) throw InvalidConfig("angular_convergence_rate: need at least 3 grid times");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw InvalidConfig("angular_convergence_rate: t_grid must increase");

    AngularRateResult res;
    res.slopes.resize(n);
    res.theta_limits.resize(n);
    std::vector<double> grid(t_grid.begin(), t_grid.end());
    parallel_for_index(n, threads, [&](std::uint64_t idx) {
        thread_local PolarPath path;
        SimConfig cfg = sim;
        cfg.t_end = grid.back();
        cfg.path_index = idx;
        simulate_polar(cfg, path, 1e-6, s_entrance);

        const double theta_end = path.theta_winding.back();
        // regression of log|Theta_end - Theta_t| on t over the interior grid
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        std::size_t m = 0;
        for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
            const auto it = std::lower_bound(path.times.begin(), path.times.end(), grid[k] - 1e-12);
            const auto i = static_cast<std::size_t>(it - path.times.begin());
            const double gap = std::abs(theta_end - path.theta_winding[i]);
            if (gap <= 0.0) continue;
            const double lx = grid[k];
            const double ly = std::log(gap);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++m;
        }
        const double denom = static_cast<double>(m) * sxx - sx * sx;
        res.slopes[idx] = (m >= 2 && denom != 0.0) ? (static_cast<double>(m) * sxy - sx * sy) / denom : 0.0;
        res.theta_limits[idx] = normalize_angle(path.theta_entrance + theta_end);
    });
    return res;
}

// --- results CSV --------------------------------------------------------------

namespace {

void put17(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace

void write_results_csv(std::ostream& os, std::span<const ResultRow> rows) {
    os << "label,horizon,n,dt,seed,mean,stderr,target,target_source\n";
    for (const ResultRow& r : rows) {
        os << r.est.label << ',';
        put17(os, r.est.horizon);
        os << ',' << r.est.n << ',';
        put17(os, r.dt);
        os << ',' << r.est.seed << ',';
        put17(os, r.est.mean);
        os << ',';
        put17(os, r.est.std_err);
        os << ',';
        if (r.target) put17(os, *r.target);
        os << ',' << r.target_source << '\n';
    }
}

}  // namespace hyphull
