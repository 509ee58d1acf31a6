#include "hyphull/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hyphull/errors.hpp"

namespace hyphull {

namespace {

constexpr int kCoarseScan = 1024;    // coarse grid for locating switch angles
constexpr int kSwitchBisections = 60;

std::size_t argmax_vertex(double phi, const ConvexPolygon& poly) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const KleinPoint& x = poly.vertices[i];
        const double val = (x.v * c - x.u * s) / (1.0 - x.u * c - x.v * s);
        if (val > best_val) {
            best_val = val;
            best = i;
        }
    }
    return best;
}

}  // namespace

double lambda_fn(double phi, const KleinPoint& x) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return (x.v * c - x.u * s) / (1.0 - x.u * c - x.v * s);
}

double support(double phi, const ConvexPolygon& poly) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    double best = -std::numeric_limits<double>::infinity();
    for (const KleinPoint& x : poly.vertices) {
        const double val = (x.v * c - x.u * s) / (1.0 - x.u * c - x.v * s);
        best = std::max(best, val);
    }
    return best;
}

double cauchy_perimeter(const ConvexPolygon& poly, const QuadratureSpec& q) {
    if (poly.vertices.empty()) throw EmptyPath("cauchy_perimeter: empty polygon");
    if (!(q.abs_tol > 0.0) || q.max_panels < 1) throw InvalidConfig("cauchy_perimeter: bad quadrature spec");
    const double two_pi = 2.0 * std::numbers::pi;
    if (poly.vertices.size() == 1) return 0.0;

    // Locate switch angles: scan a fixed coarse grid for arg-max changes,
    // then bisect each change down to machine width.
    std::vector<double> cuts;
    cuts.push_back(0.0);
    std::size_t prev_idx = argmax_vertex(0.0, poly);
    const double dphi = two_pi / kCoarseScan;
    for (int k = 1; k <= kCoarseScan; ++k) {
        const double phi = k * dphi;
        const std::size_t idx = argmax_vertex(phi, poly);
        if (idx != prev_idx) {
            double lo = phi - dphi;
            double hi = phi;
            for (int it = 0; it < kSwitchBisections; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (argmax_vertex(mid, poly) == prev_idx)
                    lo = mid;
                else
                    hi = mid;
            }
            cuts.push_back(hi);
            prev_idx = idx;
        }
    }
    cuts.push_back(two_pi);

    const auto integrand = [&poly](double phi) { return support(phi, poly); };
    int panels_left = q.max_panels;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (b <= a) continue;
        const double tol = q.abs_tol * (b - a) / two_pi;
        total += detail::adaptive_gl16(integrand, a, b, tol, panels_left);
    }
    return total;
}

double cauchy_perimeter_poincare(std::span<const PoincarePoint> points, const QuadratureSpec& q) {
    if (points.empty()) throw EmptyPath("cauchy_perimeter_poincare: no points");
    HullAccumulator acc;
    for (const PoincarePoint& p : points) acc.add(poincare_to_klein(p));
    return cauchy_perimeter(acc.finish(), q);
}

}  // namespace hyphull
