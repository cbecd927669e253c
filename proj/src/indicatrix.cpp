#include "slicedev/indicatrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slicedev {

Indicatrix build_indicatrix(const Chain& chain) {
    if (chain.links() < 1) throw std::invalid_argument("empty chain");
    Indicatrix ind;
    ind.link_directions.reserve(chain.links());
    for (std::size_t i = 0; i + 1 < chain.joints.size(); ++i) {
        const Vec2 link = chain.joints[i + 1] - chain.joints[i];
        if (link.norm() == 0.0) throw std::invalid_argument("zero-length link");
        ind.link_directions.push_back(link.normalized());
    }
    ind.cumulative_turning.resize(chain.links(), 0.0);
    if (chain.links() >= 2) {
        const auto turns = turn_angles(chain);
        for (std::size_t i = 1; i < ind.cumulative_turning.size(); ++i)
            ind.cumulative_turning[i] = ind.cumulative_turning[i - 1] + std::abs(turns[i - 1]);
    }
    return ind;
}

namespace {

// Chain-order rank: links at even slots, joints between them at odd ones.
std::size_t order_key(const TangentLocator& s) {
    return s.at_vertex ? 2 * s.index - 1 : 2 * s.index;
}

double turning_coordinate(const Indicatrix& ind, const TangentLocator& s) {
    const double eps = tolerances().eps_angle;
    if (!s.at_vertex) {
        if (s.index >= ind.link_directions.size())
            throw std::invalid_argument("link index out of range");
        return ind.cumulative_turning[s.index];
    }
    if (s.index == 0 || s.index >= ind.link_directions.size())
        throw std::invalid_argument("joint index out of range");
    if (s.split_before < -eps || s.split_after < -eps)
        throw std::invalid_argument("negative turn split");
    const double turn_abs =
        ind.cumulative_turning[s.index] - ind.cumulative_turning[s.index - 1];
    if (std::abs(s.split_before + s.split_after - turn_abs) > eps * (1.0 + turn_abs))
        throw std::invalid_argument("turn split does not sum to the joint turn");
    return ind.cumulative_turning[s.index - 1] + s.split_before;
}

}  // namespace

double arc_length(const Indicatrix& ind, const TangentLocator& s1, const TangentLocator& s2) {
    const double c1 = turning_coordinate(ind, s1);
    const double c2 = turning_coordinate(ind, s2);
    if (order_key(s1) > order_key(s2))
        throw std::invalid_argument("locators out of chain order");
    return std::max(0.0, c2 - c1);
}

double circular_distance(const Vec2& d1, const Vec2& d2) {
    const double tol = 1e-9;
    if (std::abs(d1.norm() - 1.0) > tol || std::abs(d2.norm() - 1.0) > tol)
        throw std::invalid_argument("directions must be unit vectors");
    return std::atan2(std::abs(d1.cross(d2)), d1.dot(d2));
}

TangentLocator find_tangent_point(const Chain& chain) {
    const ConvexityReport report = classify_convex(chain);
    if (!report.is_convex) {
        std::ostringstream os;
        os << "tangent point requires a convex chain: " << to_string(report.reason);
        throw std::invalid_argument(os.str());
    }
    const Vec2 u = (chain.hand() - chain.shoulder()).normalized();
    const Indicatrix ind = build_indicatrix(chain);
    const double eps = tolerances().eps_angle;

    // Signed offset from each link direction to the chord direction. For a
    // convex chain this sequence starts >= 0, ends <= 0, and decreases by
    // the turn at each joint, so it crosses zero exactly once.
    std::vector<double> delta(ind.link_directions.size());
    for (std::size_t i = 0; i < delta.size(); ++i) {
        const Vec2& d = ind.link_directions[i];
        delta[i] = std::atan2(d.cross(u), d.dot(u));
    }
    for (std::size_t i = 0; i < delta.size(); ++i)
        if (std::abs(delta[i]) <= eps) return TangentLocator::on_link(i);
    for (std::size_t j = 1; j < delta.size(); ++j) {
        if (delta[j - 1] > 0.0 && delta[j] < 0.0) {
            const double turn = delta[j - 1] - delta[j];
            return TangentLocator::at_joint(j, delta[j - 1], turn - delta[j - 1]);
        }
    }
    throw std::logic_error("no tangent parallel to the missing link found");
}

double projection_chord(const Chain& chain, const Vec2& direction) {
    const double tol = 1e-9;
    if (std::abs(direction.norm() - 1.0) > tol)
        throw std::invalid_argument("direction must be a unit vector");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < chain.joints.size(); ++i) {
        const Vec2 link = chain.joints[i + 1] - chain.joints[i];
        const double len = link.norm();
        if (len == 0.0) continue;
        sum += len * std::cos(circular_distance(link * (1.0 / len), direction));
    }
    return sum;
}

double chord_lower_bound(const ChainSpec& spec, const std::vector<double>& beta) {
    const Chain original = configure(spec);
    if (!is_valid_reconfiguration(spec.turns, beta))
        throw std::invalid_argument("beta is not a valid reconfiguration of alpha");
    const TangentLocator q = find_tangent_point(original);

    const Chain moved = configure({spec.lengths, beta});
    const Indicatrix moved_ind = build_indicatrix(moved);

    Vec2 reference;
    if (!q.at_vertex) {
        reference = moved_ind.link_directions[q.index];
    } else {
        // Mid-turn tangent at the corresponding joint of B: rotate the
        // incoming link by beta clamped to the first part of the split.
        const double b = std::clamp(beta[q.index - 1], -q.split_before, q.split_before);
        reference = moved_ind.link_directions[q.index - 1].rotated(b);
    }
    return projection_chord(moved, reference);
}

}  // namespace slicedev
