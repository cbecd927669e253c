#pragma once

#include <cstddef>
#include <vector>

#include "slicedev/chain.hpp"

namespace slicedev {

// Tangent indicatrix of a planar polygonal chain: one unit direction per
// link plus the running total of absolute turning consumed on entry to
// that link. Doubling when the indicatrix folds back is kept, never
// cancelled, which is exactly what the absolute values encode.
struct Indicatrix {
    std::vector<Vec2> link_directions;
    std::vector<double> cumulative_turning;

    double total_turning() const {
        return cumulative_turning.empty() ? 0.0 : cumulative_turning.back();
    }
};

// A point of the indicatrix: either the (constant) tangent of a whole
// link, or a mid-turn tangent at a joint where the absolute turn is
// partitioned into split_before + split_after.
struct TangentLocator {
    bool at_vertex = false;
    std::size_t index = 0;  // link index, or joint index in vertex form
    double split_before = 0.0;
    double split_after = 0.0;

    static TangentLocator on_link(std::size_t link) { return {false, link, 0.0, 0.0}; }
    static TangentLocator at_joint(std::size_t joint, double before, double after) {
        return {true, joint, before, after};
    }
};

Indicatrix build_indicatrix(const Chain& chain);

// Absolute turning of the indicatrix from s1 to s2 (s1 must not come
// after s2 along the chain).
double arc_length(const Indicatrix& ind, const TangentLocator& s1, const TangentLocator& s2);

// Shortest circle arc between two unit directions, in [0, pi].
double circular_distance(const Vec2& d1, const Vec2& d2);

// The point of a convex chain whose tangent is parallel to the missing
// link a_0 a_n (pointing from shoulder toward hand). Either a whole link,
// or the joint whose turn brackets that direction, with the split.
TangentLocator find_tangent_point(const Chain& chain);

// Sum of l_i * cos(angle between link i and `direction`). Equals the
// chord length |a_n - a_0| when `direction` is the unit chord.
double projection_chord(const Chain& chain, const Vec2& direction);

// The Schur-style bound: projects the reconfigured chain onto the tangent
// direction corresponding to the original chain's tangent point. Lands in
// [a, |b_n - b_0|] for every valid reconfiguration.
double chord_lower_bound(const ChainSpec& spec, const std::vector<double>& beta);

}  // namespace slicedev
