#include "slicedev/develop.hpp"

#include <cmath>
#include <stdexcept>

#include "slicedev/arm.hpp"

namespace slicedev {

const char* to_string(DevelopSide side) {
    return side == DevelopSide::Right ? "right" : "left";
}

Development develop(const SliceCurve& curve, DevelopSide side) {
    const std::size_t m = curve.size();
    // m = 2 is the doubly-covered segment a flat slice produces.
    if (m < 2) throw std::invalid_argument("slice curve needs at least 2 corners");
    Development dev;
    dev.side = side;
    dev.lengths = curve.link_lengths();
    dev.betas.reserve(m - 1);
    for (std::size_t i = 1; i < m; ++i) {
        const Corner& c = curve.corners[i];
        const double theta = side == DevelopSide::Right ? c.theta_right : c.theta_left;
        dev.betas.push_back(theta - M_PI);
    }
    dev.chain = configure({dev.lengths, dev.betas});
    return dev;
}

Reconfiguration as_reconfiguration(const SliceCurve& curve) {
    const std::size_t m = curve.size();
    if (m < 3) throw std::invalid_argument("slice curve needs at least 3 corners");
    Reconfiguration rec;
    rec.lengths = curve.link_lengths();
    rec.alpha.reserve(m - 1);
    rec.beta.reserve(m - 1);
    for (std::size_t i = 1; i < m; ++i) {
        rec.alpha.push_back(M_PI - curve.corners[i].phi);
        rec.beta.push_back(curve.corners[i].theta_right - M_PI);
    }
    rec.valid = is_valid_reconfiguration(rec.alpha, rec.beta);
    return rec;
}

SliceTheoremReport verify_slice_result(const SliceResult& sliced) {
    SliceTheoremReport report;
    report.variant = sliced.variant;
    if (sliced.is_degenerate()) {
        report.degenerate = true;
        report.passed = true;
        report.notes.push_back("degenerate slice develops as is; nothing to prove");
        return report;
    }

    const SliceCurve& curve = *sliced.curve;
    const double eps = tolerances().eps_angle;
    report.degenerate = false;
    report.curve = curve;
    report.perimeter = curve.perimeter();

    report.surface_sums_ok = true;
    for (const Corner& c : curve.corners) {
        const double sum = c.theta_right + c.theta_left;
        if (c.kind == CornerKind::EdgeCrossing) {
            if (std::abs(sum - 2.0 * M_PI) > eps) report.surface_sums_ok = false;
        } else if (sum > 2.0 * M_PI + eps) {
            report.surface_sums_ok = false;
        }
        // The lower polytope P0 carries phi + theta_right at each corner.
        if (c.phi + c.theta_right > 2.0 * M_PI + eps) report.surface_sums_ok = false;
    }
    if (!report.surface_sums_ok) report.notes.push_back("surface angle sums violated");

    report.angle_bounds_ok = verify_angle_bounds(curve);
    if (!report.angle_bounds_ok) report.notes.push_back("phi <= theta <= 2pi - phi violated");

    const Reconfiguration rec = as_reconfiguration(curve);
    report.reconfiguration_valid = rec.valid;
    if (!rec.valid) report.notes.push_back("development is not a valid reconfiguration");

    const Chain section = configure({rec.lengths, rec.alpha});
    report.section_convex = classify_convex(section, true).is_convex;
    if (!report.section_convex) report.notes.push_back("section polygon chain is not convex");

    report.right = develop(curve, DevelopSide::Right);
    report.left = develop(curve, DevelopSide::Left);
    report.right_simple = is_simple(report.right->chain);
    report.left_simple = is_simple(report.left->chain);
    if (!report.right_simple) report.notes.push_back("right development self-intersects");
    if (!report.left_simple)
        report.notes.push_back("left development self-intersects (not covered by the theorem)");

    double dev_length = 0.0;
    const auto& joints = report.right->chain.joints;
    for (std::size_t i = 0; i + 1 < joints.size(); ++i)
        dev_length += distance(joints[i], joints[i + 1]);
    report.length_ok =
        std::abs(dev_length - report.perimeter) <= 1e-9 * (1.0 + report.perimeter);
    if (!report.length_ok) report.notes.push_back("development changed the total length");

    report.arm_ok = false;
    if (rec.valid && report.section_convex)
        report.arm_ok = check_arm({rec.lengths, rec.alpha}, rec.beta).passed;
    if (!report.arm_ok) report.notes.push_back("forbidden-disk check failed on the development");

    // The left development is reported but not asserted; the theorem only
    // speaks for the right one.
    report.passed = report.surface_sums_ok && report.angle_bounds_ok &&
                    report.reconfiguration_valid && report.section_convex &&
                    report.right_simple && report.length_ok && report.arm_ok;
    return report;
}

SliceTheoremReport check_slice_theorem(const Polytope& p, const PlaneSpec& plane) {
    return verify_slice_result(slice(p, plane));
}

}  // namespace slicedev
