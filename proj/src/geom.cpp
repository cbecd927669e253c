#include "slicedev/geom.hpp"

namespace slicedev {

Tolerances& tolerances() {
    static Tolerances tol;
    return tol;
}

void apply_tolerance_env() {
    const char* env = std::getenv("SLICEDEV_TOLERANCE");
    if (!env) return;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env) throw std::runtime_error("SLICEDEV_TOLERANCE is not a number");
    tolerances().eps_angle = v;
    tolerances().eps_len = v;
}

Orientation orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    const double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x),
                                   std::abs(b.y), std::abs(c.x), std::abs(c.y), 1.0});
    const double eps = tolerances().eps_orient * scale * scale;
    if (std::abs(det) > eps)
        return det > 0.0 ? Orientation::CounterClockwise : Orientation::Clockwise;
    if (tolerances().extended_precision_fallback) {
        const long double detl =
            (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - a.y) -
            (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(c.x) - a.x);
        const long double epsl = 1e-18L * scale * scale;
        if (detl > epsl) return Orientation::CounterClockwise;
        if (detl < -epsl) return Orientation::Clockwise;
    }
    return Orientation::Collinear;
}

namespace {

bool in_box(const Vec2& p, const Vec2& a, const Vec2& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

SegmentRelation classify_segments(const Vec2& p1, const Vec2& p2,
                                  const Vec2& q1, const Vec2& q2) {
    const double tol = tolerances().eps_len;
    if (distance(p1, p2) <= tol || distance(q1, q2) <= tol)
        throw std::invalid_argument("degenerate segment");

    const Orientation o1 = orient2d(p1, p2, q1);
    const Orientation o2 = orient2d(p1, p2, q2);
    const Orientation o3 = orient2d(q1, q2, p1);
    const Orientation o4 = orient2d(q1, q2, p2);

    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
        // Collinear: project onto the dominant axis and compare intervals.
        const Vec2 d = p2 - p1;
        const bool use_x = std::abs(d.x) >= std::abs(d.y);
        auto coord = [use_x](const Vec2& v) { return use_x ? v.x : v.y; };
        double plo = coord(p1), phi = coord(p2);
        if (plo > phi) std::swap(plo, phi);
        double qlo = coord(q1), qhi = coord(q2);
        if (qlo > qhi) std::swap(qlo, qhi);
        const double lo = std::max(plo, qlo);
        const double hi = std::min(phi, qhi);
        const double touch_eps = tol * (1.0 + std::abs(lo) + std::abs(hi));
        if (hi < lo - touch_eps) return SegmentRelation::Disjoint;
        if (hi - lo > touch_eps) return SegmentRelation::Overlap;
        return SegmentRelation::EndpointTouch;
    }

    const bool q1_on = o1 == Orientation::Collinear && in_box(q1, p1, p2);
    const bool q2_on = o2 == Orientation::Collinear && in_box(q2, p1, p2);
    const bool p1_on = o3 == Orientation::Collinear && in_box(p1, q1, q2);
    const bool p2_on = o4 == Orientation::Collinear && in_box(p2, q1, q2);
    if (q1_on || q2_on || p1_on || p2_on) return SegmentRelation::EndpointTouch;

    if (o1 != o2 && o3 != o4) return SegmentRelation::Proper;
    return SegmentRelation::Disjoint;
}

}  // namespace slicedev
