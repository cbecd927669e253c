#pragma once

#include <cstddef>
#include <vector>

#include "slicedev/geom.hpp"

namespace slicedev {

// A chain configuration: fixed edge lengths l_0..l_{n-1} plus the turn
// angle at each interior joint, radians in (-pi, pi], positive for left
// (counterclockwise) turns.
struct ChainSpec {
    std::vector<double> lengths;
    std::vector<double> turns;

    std::size_t links() const { return lengths.size(); }

    // Throws std::invalid_argument with a diagnostic on any violated
    // invariant (size mismatch, nonpositive length, turn out of range).
    void validate() const;
};

// Realized joint coordinates a_0..a_n. a_0 is the shoulder, a_n the hand.
struct Chain {
    std::vector<Vec2> joints;

    std::size_t links() const { return joints.empty() ? 0 : joints.size() - 1; }
    const Vec2& shoulder() const { return joints.front(); }
    const Vec2& hand() const { return joints.back(); }
};

enum class ConvexityIssue {
    OK,
    RepeatedJoint,
    ClosedAtShoulder,
    JointOffHull,
    AllCollinear,
    NegativeTurn,
};

struct ConvexityReport {
    bool is_convex = false;
    ConvexityIssue reason = ConvexityIssue::OK;
};

const char* to_string(ConvexityIssue issue);

// Open disk about the shoulder of radius equal to the original
// hand-shoulder distance; valid reconfigurations never enter it.
struct ForbiddenDisk {
    Vec2 center;
    double radius = 0.0;
};

// Realizes the configuration: shoulder at the origin, first edge along +x,
// each later link direction rotated by the turn at the intervening joint.
Chain configure(const ChainSpec& spec);

// Signed turn angle at each interior joint, in (-pi, pi]. Throws on a
// zero-length link (the turn is undefined there).
std::vector<double> turn_angles(const Chain& chain);

// A chain is convex when its joints, closed up with the missing link
// a_n -> a_0, traverse a nondegenerate convex polygon counterclockwise.
// With `closed` the chain may end with the hand at the shoulder and the
// wrap from the last link to the first replaces the missing-link angles.
ConvexityReport classify_convex(const Chain& chain, bool closed = false);

// Negates every turn: a reflection through the line of the first edge.
ChainSpec reflect(const ChainSpec& spec);

// True iff |beta_i| <= alpha_i + eps_angle for all i. Throws on size
// mismatch. alpha is expected to come from a convex chain.
bool is_valid_reconfiguration(const std::vector<double>& alpha,
                              const std::vector<double>& beta);

ForbiddenDisk forbidden_disk(const ChainSpec& spec);

// Nonadjacent segments must be disjoint and adjacent segments must meet
// only at the shared joint. In closed mode the wrap-around pair of the
// first and last segment counts as adjacent.
bool is_simple(const Chain& chain, bool closed = false);

}  // namespace slicedev
