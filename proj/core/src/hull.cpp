#include "hyphull/hull.hpp"

#include <algorithm>
#include <cmath>

#include "hyphull/errors.hpp"

namespace hyphull {

namespace {

// Turns with |cross| <= kCollinearEps are treated as collinear and the middle
// point is dropped, keeping the vertex sequence strictly convex.
constexpr double kCollinearEps = 1e-15;

bool lex_less(const KleinPoint& a, const KleinPoint& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
}

bool lex_equal(const KleinPoint& a, const KleinPoint& b) {
    return a.u == b.u && a.v == b.v;
}

// Andrew's monotone chain on a scratch vector (sorted + deduped in place).
// Returns counterclockwise vertices.
std::vector<KleinPoint> monotone_chain(std::vector<KleinPoint>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), lex_equal), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<KleinPoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= kCollinearEps) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
        while (k >= lower && orientation(h[k - 2], h[k - 1], pts[i]) <= kCollinearEps) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point repeats the first
    return h;
}

}  // namespace

void HullAccumulator::add(const KleinPoint& p) {
    if (!(p.norm2() < 1.0 - kBoundaryTol)) throw OutOfDomain("HullAccumulator: point not inside the unit disk");
    pending_.push_back(p);
    ++n_seen_;
    if (pending_.size() >= kBatch) fold();
}

void HullAccumulator::add(std::span<const KleinPoint> pts) {
    for (const auto& p : pts) add(p);
}

void HullAccumulator::fold() {
    pending_.insert(pending_.end(), hull_.vertices.begin(), hull_.vertices.end());
    hull_.vertices = monotone_chain(pending_);
    pending_.clear();
}

const ConvexPolygon& HullAccumulator::finish() {
    if (n_seen_ == 0) throw EmptyPath("convex_hull: no points");
    if (!pending_.empty()) fold();
    return hull_;
}

ConvexPolygon convex_hull(std::span<const KleinPoint> points) {
    HullAccumulator acc;
    acc.add(points);
    return acc.finish();
}

ConvexPolygon convex_hull(const PlanarPath& path) {
    if (path.points.empty()) throw EmptyPath("convex_hull: empty path");
    if (path.points.size() != path.times.size()) throw InvalidConfig("convex_hull: points/times length mismatch");
    for (std::size_t i = 1; i < path.times.size(); ++i)
        if (!(path.times[i] > path.times[i - 1])) throw InvalidConfig("convex_hull: times must be strictly increasing");
    return convex_hull(std::span<const KleinPoint>(path.points));
}

double edge_sum_perimeter(const ConvexPolygon& poly) {
    const std::size_t m = poly.vertices.size();
    if (m <= 1) return 0.0;
    std::vector<PoincarePoint> pd(m);
    for (std::size_t i = 0; i < m; ++i) pd[i] = klein_to_poincare(poly.vertices[i]);
    double per = 0.0;
    for (std::size_t i = 0; i < m; ++i) per += hyp_distance(pd[i], pd[(i + 1) % m]);
    return per;
}

}  // namespace hyphull
