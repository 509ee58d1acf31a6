#pragma once

// Euclidean convex hulls in Beltrami-Klein coordinates. Hyperbolic geodesics
// are straight chords in the Klein disk, so the Euclidean hull of a point set
// is its hyperbolic hull; the perimeter is the cyclic sum of geodesic edge
// lengths.

#include <span>
#include <vector>

#include "hyphull/geometry.hpp"

namespace hyphull {

/// Counterclockwise, strictly convex vertex list in Klein coordinates.
/// Degenerate hulls are allowed: one vertex (a point) or two (a segment).
struct ConvexPolygon {
    std::vector<KleinPoint> vertices;
};

/// A discretized trajectory in the Klein disk.
struct PlanarPath {
    std::vector<KleinPoint> points;
    std::vector<double> times;  // strictly increasing, same length as points
};

/// Streaming hull builder. Points are buffered and folded into the running
/// hull in batches of kBatch, so long trajectories never materialize as one
/// point set inside the hull routine.
class HullAccumulator {
  public:
    static constexpr std::size_t kBatch = 4096;

    void add(const KleinPoint& p);
    void add(std::span<const KleinPoint> pts);
    /// Collapse pending points and return the hull. The accumulator stays
    /// usable (further adds extend the same hull).
    const ConvexPolygon& finish();
    std::size_t points_seen() const { return n_seen_; }

  private:
    void fold();

    ConvexPolygon hull_;
    std::vector<KleinPoint> pending_;
    std::size_t n_seen_ = 0;
};

/// Convex hull of a set of Klein points (monotone chain). Collinear interior
/// points are excluded from the vertex list. Throws EmptyPath on no input.
ConvexPolygon convex_hull(std::span<const KleinPoint> points);

/// Convex hull of a trajectory; validates the path shape first.
ConvexPolygon convex_hull(const PlanarPath& path);

/// Perimeter as the cyclic sum of geodesic edge lengths. A 1-vertex polygon
/// has perimeter 0; a 2-vertex segment counts its single edge twice (the
/// boundary traverses both sides).
double edge_sum_perimeter(const ConvexPolygon& poly);

/// Signed area cross product (b - a) x (c - a); exact sign on doubles.
inline double orientation(const KleinPoint& a, const KleinPoint& b, const KleinPoint& c) {
    return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

}  // namespace hyphull
