#pragma once

// Hyperbolic Cauchy formula: the perimeter of a convex body K in the Klein
// disk is the angular integral of the support-type functional
// lambda(phi, x) = (x2 cos phi - x1 sin phi) / (1 - x1 cos phi - x2 sin phi),
// with the supremum over K attained at hull vertices.

#include <span>

#include "hyphull/hull.hpp"
#include "hyphull/quadrature.hpp"

namespace hyphull {

double lambda_fn(double phi, const KleinPoint& x);

/// sup of lambda_fn(phi, .) over the polygon; the sup over the full body is
/// attained at a vertex, so only vertices are scanned.
double support(double phi, const ConvexPolygon& poly);

/// Perimeter via the angular integral of the support function. The integrand
/// is piecewise analytic with kinks where the arg-max vertex changes; panels
/// are split at those switch angles and integrated adaptively.
double cauchy_perimeter(const ConvexPolygon& poly, const QuadratureSpec& q = {});

/// Cauchy formula for a point set given in Poincare-disk coordinates: maps
/// through f(z) = 2z/(1+|z|^2) into Klein coordinates, hulls, integrates.
double cauchy_perimeter_poincare(std::span<const PoincarePoint> points, const QuadratureSpec& q = {});

}  // namespace hyphull
