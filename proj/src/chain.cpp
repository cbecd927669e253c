#include "slicedev/chain.hpp"

#include <cmath>
#include <sstream>

namespace slicedev {

void ChainSpec::validate() const {
    if (lengths.empty()) throw std::invalid_argument("chain needs at least one link");
    if (turns.size() + 1 != lengths.size()) {
        std::ostringstream os;
        os << "turn count " << turns.size() << " does not match " << lengths.size()
           << " links (expected " << lengths.size() - 1 << ")";
        throw std::invalid_argument(os.str());
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (!(lengths[i] > 0.0) || !std::isfinite(lengths[i])) {
            std::ostringstream os;
            os << "link " << i << " has nonpositive length " << lengths[i];
            throw std::invalid_argument(os.str());
        }
    }
    for (std::size_t i = 0; i < turns.size(); ++i) {
        if (!std::isfinite(turns[i]) || turns[i] > M_PI || turns[i] <= -M_PI) {
            std::ostringstream os;
            os << "turn " << i + 1 << " = " << turns[i] << " outside (-pi, pi]";
            throw std::invalid_argument(os.str());
        }
    }
}

const char* to_string(ConvexityIssue issue) {
    switch (issue) {
        case ConvexityIssue::OK: return "OK";
        case ConvexityIssue::RepeatedJoint: return "RepeatedJoint";
        case ConvexityIssue::ClosedAtShoulder: return "ClosedAtShoulder";
        case ConvexityIssue::JointOffHull: return "JointOffHull";
        case ConvexityIssue::AllCollinear: return "AllCollinear";
        case ConvexityIssue::NegativeTurn: return "NegativeTurn";
    }
    return "?";
}

Chain configure(const ChainSpec& spec) {
    spec.validate();
    Chain chain;
    chain.joints.reserve(spec.lengths.size() + 1);
    chain.joints.emplace_back(0.0, 0.0);
    double heading = 0.0;
    for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
        if (i > 0) heading += spec.turns[i - 1];
        const Vec2 step{spec.lengths[i] * std::cos(heading), spec.lengths[i] * std::sin(heading)};
        chain.joints.push_back(chain.joints.back() + step);
    }
    return chain;
}

namespace {

double signed_turn(const Vec2& u, const Vec2& v) {
    double t = std::atan2(u.cross(v), u.dot(v));
    if (t <= -M_PI) t = M_PI;
    return t;
}

double coordinate_scale(const std::vector<Vec2>& pts) {
    double s = 1.0;
    for (const Vec2& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

}  // namespace

std::vector<double> turn_angles(const Chain& chain) {
    if (chain.links() < 2) throw std::invalid_argument("need at least two links for turn angles");
    const double eps = tolerances().eps_len * coordinate_scale(chain.joints);
    std::vector<double> turns;
    turns.reserve(chain.links() - 1);
    for (std::size_t i = 1; i + 1 < chain.joints.size(); ++i) {
        const Vec2 u = chain.joints[i] - chain.joints[i - 1];
        const Vec2 v = chain.joints[i + 1] - chain.joints[i];
        if (u.norm() <= eps || v.norm() <= eps)
            throw std::invalid_argument("zero-length link: turn angle undefined");
        turns.push_back(signed_turn(u, v));
    }
    return turns;
}

ConvexityReport classify_convex(const Chain& chain, bool closed) {
    const auto& joints = chain.joints;
    const std::size_t n = chain.links();
    const double eps_angle = tolerances().eps_angle;

    if (n < 1) return {false, ConvexityIssue::AllCollinear};
    const double eps = tolerances().eps_len * coordinate_scale(joints);

    const bool hand_at_shoulder = distance(joints.front(), joints.back()) <= eps;
    if (hand_at_shoulder && !closed) return {false, ConvexityIssue::ClosedAtShoulder};

    // Cycle vertices: drop the duplicated hand when it sits on the shoulder.
    std::vector<Vec2> cycle(joints.begin(), joints.end() - (hand_at_shoulder ? 1 : 0));
    const std::size_t m = cycle.size();

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (distance(cycle[i], cycle[j]) <= eps) return {false, ConvexityIssue::RepeatedJoint};

    bool collinear = true;
    for (std::size_t i = 2; i < m && collinear; ++i)
        collinear = orient2d(cycle[0], cycle[1], cycle[i]) == Orientation::Collinear;
    if (collinear) return {false, ConvexityIssue::AllCollinear};

    // Interior turns of the chain itself must lie in [0, pi).
    for (std::size_t i = 1; i + 1 < joints.size(); ++i) {
        const double t = signed_turn(joints[i] - joints[i - 1], joints[i + 1] - joints[i]);
        if (t < -eps_angle) return {false, ConvexityIssue::NegativeTurn};
        if (t > M_PI - eps_angle) return {false, ConvexityIssue::JointOffHull};
    }

    // Closing the cycle with the missing link (or the wrap, when closed)
    // must keep every turn nonnegative and the total at exactly one loop.
    // Equivalent to all joints in convex position in traversal order.
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 incoming = cycle[i] - cycle[(i + m - 1) % m];
        const Vec2 outgoing = cycle[(i + 1) % m] - cycle[i];
        const double t = signed_turn(incoming, outgoing);
        if (t < -eps_angle) return {false, ConvexityIssue::JointOffHull};
        total += t;
    }
    if (std::abs(total - 2.0 * M_PI) > eps_angle * static_cast<double>(m + 1))
        return {false, ConvexityIssue::JointOffHull};

    return {true, ConvexityIssue::OK};
}

ChainSpec reflect(const ChainSpec& spec) {
    spec.validate();
    ChainSpec out = spec;
    for (double& t : out.turns) {
        t = -t;
        if (t <= -M_PI) t = M_PI;
    }
    return out;
}

bool is_valid_reconfiguration(const std::vector<double>& alpha,
                              const std::vector<double>& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("turn vectors differ in size");
    const double eps = tolerances().eps_angle;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (std::abs(beta[i]) > alpha[i] + eps) return false;
    return true;
}

ForbiddenDisk forbidden_disk(const ChainSpec& spec) {
    const Chain chain = configure(spec);
    return {chain.shoulder(), distance(chain.hand(), chain.shoulder())};
}

bool is_simple(const Chain& chain, bool closed) {
    const auto& joints = chain.joints;
    const std::size_t n = chain.links();
    if (n == 0) return false;
    const double eps = tolerances().eps_len * coordinate_scale(joints);
    for (std::size_t i = 0; i < n; ++i)
        if (distance(joints[i], joints[i + 1]) <= eps) return false;
    if (n == 1) return true;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (closed && i == 0 && j == n - 1);
            const SegmentRelation rel = classify_segments(joints[i], joints[i + 1],
                                                          joints[j], joints[j + 1]);
            if (adjacent) {
                if (rel == SegmentRelation::Proper || rel == SegmentRelation::Overlap)
                    return false;
            } else if (rel != SegmentRelation::Disjoint) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace slicedev
