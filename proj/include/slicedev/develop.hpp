#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicedev/chain.hpp"
#include "slicedev/polytope.hpp"

namespace slicedev {

enum class DevelopSide { Right, Left };

const char* to_string(DevelopSide side);

// Planar development of a slice curve, cut open at corner c_0, with b_0 at
// the origin and the first link along +x. Right: beta_i = theta_right_i - pi.
// Left: beta_i = theta_left_i - pi, i.e. the re-oriented drawing driven by
// the left surface angles; for curves avoiding polytope vertices the two
// sides are mirror images (the turn sequences negate).
struct Development {
    Chain chain;
    std::vector<double> lengths;
    std::vector<double> betas;
    DevelopSide side = DevelopSide::Right;

    double span() const { return distance(chain.hand(), chain.shoulder()); }
};

Development develop(const SliceCurve& curve, DevelopSide side);

// The section polygon's opened boundary chain (alpha from the interior
// angles) against the development turns (beta from the surface angles).
struct Reconfiguration {
    std::vector<double> lengths;
    std::vector<double> alpha;
    std::vector<double> beta;
    bool valid = false;
};

Reconfiguration as_reconfiguration(const SliceCurve& curve);

// End-to-end verification of one slice: angle bounds, surface-angle sums,
// reconfiguration validity, simplicity of both developments, and the
// forbidden-disk connection. Degenerate slices pass trivially.
struct SliceTheoremReport {
    SliceVariant variant = SliceVariant::Empty;
    bool degenerate = true;
    bool section_convex = false;
    bool angle_bounds_ok = false;
    bool surface_sums_ok = false;
    bool reconfiguration_valid = false;
    bool right_simple = false;
    bool left_simple = false;
    bool arm_ok = false;
    bool length_ok = false;
    bool passed = false;
    double perimeter = 0.0;
    std::optional<SliceCurve> curve;
    std::optional<Development> right;
    std::optional<Development> left;
    std::vector<std::string> notes;
};

SliceTheoremReport check_slice_theorem(const Polytope& p, const PlaneSpec& plane);

// The same verification on an already-computed slice; everything it needs
// is recorded in the curve's corners.
SliceTheoremReport verify_slice_result(const SliceResult& sliced);

}  // namespace slicedev
