#include "slicedev/arm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slicedev {

const char* to_string(SampleMode mode) {
    switch (mode) {
        case SampleMode::Uniform: return "uniform";
        case SampleMode::Extreme: return "extreme";
        case SampleMode::SignFlips: return "signflips";
    }
    return "?";
}

namespace {

void require_convex(const Chain& chain) {
    ConvexityReport report = classify_convex(chain, false);
    if (!report.is_convex && report.reason == ConvexityIssue::ClosedAtShoulder)
        report = classify_convex(chain, true);
    if (!report.is_convex) {
        std::ostringstream os;
        os << "chain is not convex: " << to_string(report.reason);
        throw std::invalid_argument(os.str());
    }
}

void require_valid(const std::vector<double>& alpha, const std::vector<double>& beta) {
    if (!is_valid_reconfiguration(alpha, beta))
        throw std::invalid_argument("beta is not a valid reconfiguration of alpha");
}

}  // namespace

ArmCheckReport check_arm(const ChainSpec& spec, const std::vector<double>& beta) {
    const Chain original = configure(spec);
    require_convex(original);
    require_valid(spec.turns, beta);

    const Chain moved = configure({spec.lengths, beta});
    ArmCheckReport report;
    report.hand_distance = distance(moved.hand(), moved.shoulder());
    report.forbidden_radius = distance(original.hand(), original.shoulder());
    report.margin = report.hand_distance - report.forbidden_radius;
    report.passed =
        report.margin >= -tolerances().eps_len * (1.0 + report.forbidden_radius);
    report.beta = beta;
    return report;
}

bool check_pairwise(const ChainSpec& spec, const std::vector<double>& beta,
                    int samples_per_link) {
    if (samples_per_link < 1) throw std::invalid_argument("samples_per_link must be >= 1");
    const Chain a = configure(spec);
    require_convex(a);
    require_valid(spec.turns, beta);
    const Chain b = configure({spec.lengths, beta});

    // Same arc-length positions on both chains: all joints plus interior
    // samples of every link.
    std::vector<Vec2> pa, pb;
    pa.reserve(a.joints.size() + spec.links() * samples_per_link);
    pb.reserve(pa.capacity());
    for (std::size_t i = 0; i < a.joints.size(); ++i) {
        pa.push_back(a.joints[i]);
        pb.push_back(b.joints[i]);
        if (i + 1 == a.joints.size()) break;
        for (int k = 1; k <= samples_per_link; ++k) {
            const double t = static_cast<double>(k) / (samples_per_link + 1);
            pa.push_back(a.joints[i] + t * (a.joints[i + 1] - a.joints[i]));
            pb.push_back(b.joints[i] + t * (b.joints[i + 1] - b.joints[i]));
        }
    }

    const double eps = tolerances().eps_len;
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = i + 1; j < pa.size(); ++j) {
            const double before = distance(pa[i], pa[j]);
            const double after = distance(pb[i], pb[j]);
            if (after < before - eps * (1.0 + before)) return false;
        }
    return true;
}

std::vector<double> sample_valid_turns(const std::vector<double>& alpha,
                                       std::uint64_t seed, SampleMode mode) {
    SplitMix64 rng(seed);
    std::vector<double> beta(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        switch (mode) {
            case SampleMode::Uniform:
                beta[i] = rng.uniform(-alpha[i], alpha[i]);
                break;
            case SampleMode::Extreme:
            case SampleMode::SignFlips:
                beta[i] = rng.coin() ? alpha[i] : -alpha[i];
                break;
        }
    }
    return beta;
}

ReachableArc reachable_region_2link(const ChainSpec& spec) {
    spec.validate();
    if (spec.links() != 2)
        throw std::invalid_argument("reachable region arc is defined for 2-link chains only");
    const double alpha = spec.turns[0];
    if (!(alpha > 0.0) || !(alpha < M_PI))
        throw std::invalid_argument("2-link chain is convex only for a turn in (0, pi)");
    ReachableArc arc;
    arc.center = {spec.lengths[0], 0.0};
    arc.radius = spec.lengths[1];
    arc.angle_lo = -alpha;
    arc.angle_hi = alpha;
    return arc;
}

std::vector<Vec2> sample_reachable(const ChainSpec& spec, int count, std::uint64_t seed,
                                   SampleMode mode) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    const Chain original = configure(spec);
    require_convex(original);
    const double radius = distance(original.hand(), original.shoulder());

    std::vector<Vec2> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        const auto beta =
            sample_valid_turns(spec.turns, derive_seed(seed, static_cast<std::uint64_t>(i)), mode);
        const Chain moved = configure({spec.lengths, beta});
        const Vec2 hand = moved.hand();
        if (hand.norm() < radius - tolerances().eps_len * (1.0 + radius))
            throw std::logic_error("sampled hand position entered the forbidden disk");
        points.push_back(hand);
    }
    return points;
}

std::vector<double> convexify(const std::vector<double>& gamma) {
    std::vector<double> beta(gamma.size());
    std::transform(gamma.begin(), gamma.end(), beta.begin(),
                   [](double g) { return std::abs(g); });
    return beta;
}

ChainSpec random_convex_spec(SplitMix64& rng, int nlinks) {
    if (nlinks < 2) throw std::invalid_argument("need at least two links");
    const int npts = nlinks + 1;
    constexpr double kMinGap = 0.05;  // radians of circle arc

    std::vector<double> angles(npts);
    for (int attempt = 0; attempt < 256; ++attempt) {
        for (double& a : angles) a = rng.uniform(0.0, 2.0 * M_PI);
        std::sort(angles.begin(), angles.end());
        double min_gap = 2.0 * M_PI - (angles.back() - angles.front());
        for (int i = 1; i < npts; ++i) min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        if (min_gap < kMinGap) continue;

        const double radius = rng.uniform(0.5, 2.0);
        Chain chain;
        chain.joints.reserve(npts);
        for (double a : angles)
            chain.joints.emplace_back(radius * std::cos(a), radius * std::sin(a));

        ChainSpec spec;
        spec.lengths.reserve(nlinks);
        for (int i = 0; i < nlinks; ++i)
            spec.lengths.push_back(distance(chain.joints[i], chain.joints[i + 1]));
        spec.turns = turn_angles(chain);
        if (classify_convex(configure(spec)).is_convex) return spec;
    }
    throw std::logic_error("failed to sample a convex chain");
}

}  // namespace slicedev
