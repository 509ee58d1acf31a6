#pragma once

// Coordinate models of the hyperbolic plane (geodesic polar, Poincare
// half-plane, Poincare disk, Beltrami-Klein disk), the exact transforms
// between them, and distance functions. All functions are pure; points are
// plain value types.

#include <cmath>
#include <numbers>

#include "hyphull/errors.hpp"

namespace hyphull {

// Disk points with |z|^2 >= 1 - kBoundaryTol are rejected as OutOfDomain
// rather than clamped; simulated paths live strictly inside the disk and
// clamping would corrupt perimeter integrals.
inline constexpr double kBoundaryTol = 1e-14;

struct GeodesicPolar {
    double r = 0.0;      // hyperbolic distance from the origin, >= 0
    double theta = 0.0;  // angle in [0, 2pi); stored as 0 at the origin
};

struct HalfPlanePoint {
    double x = 0.0;
    double y = 1.0;  // > 0; (0,1) is the origin
};

struct PoincarePoint {
    double u = 0.0;
    double v = 0.0;
    double norm2() const { return u * u + v * v; }
};

struct KleinPoint {
    double u = 0.0;
    double v = 0.0;
    double norm2() const { return u * u + v * v; }
};

namespace detail {

inline void require_in_disk(double n2, const char* where) {
    // NaN also fails the comparison and is rejected.
    if (!(n2 < 1.0 - kBoundaryTol)) throw OutOfDomain(std::string(where) + ": point not strictly inside the unit disk");
}

}  // namespace detail

/// atanh computed as 0.5*(log1p(r) - log1p(-r)). The naive form loses digits
/// as r -> 1, exactly where hyperbolic radii (and perimeters) are largest.
inline double atanh_stable(double r) {
    return 0.5 * (std::log1p(r) - std::log1p(-r));
}

/// Reduce an angle to [0, 2pi).
inline double normalize_angle(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(theta, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    return a;
}

/// (R, theta) -> (x, y):  x = sinh R cos t / (cosh R - sinh R sin t),
/// y = 1 / (cosh R - sinh R sin t). The denominator is >= e^{-R} > 0, but for
/// large R the direct difference cancels catastrophically, so it is evaluated
/// as cosh R * (1 - tanh R sin t) with 1 - tanh R = 2 e^{-2R} / (1 + e^{-2R}).
inline HalfPlanePoint polar_to_halfplane(const GeodesicPolar& p) {
    if (!(p.r >= 0.0)) throw OutOfDomain("polar_to_halfplane: negative radius");
    const double st = std::sin(p.theta);
    const double ct = std::cos(p.theta);
    const double th = std::tanh(p.r);
    double one_minus_t_sin;
    if (st > 0.0) {
        const double em = std::exp(-2.0 * p.r);
        const double one_minus_tanh = 2.0 * em / (1.0 + em);
        one_minus_t_sin = (1.0 - st) + st * one_minus_tanh;
    } else {
        one_minus_t_sin = 1.0 - th * st;
    }
    HalfPlanePoint out;
    out.x = th * ct / one_minus_t_sin;
    out.y = 1.0 / (std::cosh(p.r) * one_minus_t_sin);
    return out;
}

inline PoincarePoint halfplane_to_poincare(const HalfPlanePoint& p) {
    if (!(p.y > 0.0)) throw OutOfDomain("halfplane_to_poincare: y must be positive");
    const double d = p.x * p.x + (p.y + 1.0) * (p.y + 1.0);
    PoincarePoint out{2.0 * p.x / d, (p.x * p.x + p.y * p.y - 1.0) / d};
    detail::require_in_disk(out.norm2(), "halfplane_to_poincare");
    return out;
}

inline HalfPlanePoint poincare_to_halfplane(const PoincarePoint& p) {
    detail::require_in_disk(p.norm2(), "poincare_to_halfplane");
    const double d = p.u * p.u + (1.0 - p.v) * (1.0 - p.v);
    return HalfPlanePoint{2.0 * p.u / d, 2.0 * (1.0 - p.v) / d - 1.0};
}

/// f(z) = 2z / (1 + |z|^2); isometry from the Poincare disk onto the
/// Beltrami-Klein disk, fixing angles.
inline KleinPoint poincare_to_klein(const PoincarePoint& p) {
    detail::require_in_disk(p.norm2(), "poincare_to_klein");
    const double c = 2.0 / (1.0 + p.norm2());
    return KleinPoint{c * p.u, c * p.v};
}

/// g(z) = z / (1 + sqrt(1 - |z|^2)); inverse of poincare_to_klein.
inline PoincarePoint klein_to_poincare(const KleinPoint& q) {
    detail::require_in_disk(q.norm2(), "klein_to_poincare");
    const double c = 1.0 / (1.0 + std::sqrt(1.0 - q.norm2()));
    return PoincarePoint{c * q.u, c * q.v};
}

/// Geodesic radius of a Poincare-disk point: R = 2 atanh |p|.
inline double geodesic_radius(const PoincarePoint& p) {
    const double n2 = p.norm2();
    detail::require_in_disk(n2, "geodesic_radius");
    const double r = std::sqrt(n2);
    return std::log1p(r) - std::log1p(-r);
}

/// Geodesic radius of a Klein-disk point: atanh |q| (note the missing factor
/// of two relative to the Poincare disk).
inline double klein_geodesic_radius(const KleinPoint& q) {
    const double n2 = q.norm2();
    detail::require_in_disk(n2, "klein_geodesic_radius");
    return atanh_stable(std::sqrt(n2));
}

/// Hyperbolic distance between two Poincare-disk points:
/// arcosh(1 + 2|a-b|^2 / ((1-|a|^2)(1-|b|^2))).
inline double hyp_distance(const PoincarePoint& a, const PoincarePoint& b) {
    const double na = a.norm2();
    const double nb = b.norm2();
    detail::require_in_disk(na, "hyp_distance");
    detail::require_in_disk(nb, "hyp_distance");
    const double du = a.u - b.u;
    const double dv = a.v - b.v;
    const double d2 = du * du + dv * dv;
    if (d2 == 0.0) return 0.0;
    return std::acosh(1.0 + 2.0 * d2 / ((1.0 - na) * (1.0 - nb)));
}

/// Geodesic radius of a half-plane point via cosh R = (x^2 + y^2 + 1) / (2y).
inline double halfplane_radius(const HalfPlanePoint& p) {
    if (!(p.y > 0.0)) throw OutOfDomain("halfplane_radius: y must be positive");
    const double c = (p.x * p.x + p.y * p.y + 1.0) / (2.0 * p.y);
    return std::acosh(std::max(1.0, c));
}

}  // namespace hyphull
