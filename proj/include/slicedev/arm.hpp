#pragma once

#include <cstdint>
#include <vector>

#include "slicedev/chain.hpp"
#include "slicedev/rng.hpp"

namespace slicedev {

// One forbidden-disk check. The underlying theorem is proven, so
// passed=false signals an implementation bug, not a counterexample.
struct ArmCheckReport {
    double hand_distance = 0.0;
    double forbidden_radius = 0.0;
    double margin = 0.0;  // hand_distance - forbidden_radius
    bool passed = false;
    std::vector<double> beta;
};

// Hand positions of a 2-link chain over beta in [-alpha, alpha]: a circle
// arc centered on the middle joint, entirely outside the forbidden disk.
struct ReachableArc {
    Vec2 center;
    double radius = 0.0;
    double angle_lo = 0.0;
    double angle_hi = 0.0;

    Vec2 point_at(double angle) const {
        return center + Vec2{radius * std::cos(angle), radius * std::sin(angle)};
    }
};

enum class SampleMode { Uniform, Extreme, SignFlips };

const char* to_string(SampleMode mode);

// Reconfigures the convex chain to beta and compares the hand-shoulder
// distance against the forbidden radius. Throws if the spec is not convex
// (open or closed) or beta is not a valid reconfiguration.
ArmCheckReport check_arm(const ChainSpec& spec, const std::vector<double>& beta);

// Checks that no sampled pair of chain points (joints plus
// samples_per_link interior points per link) moves closer under beta.
bool check_pairwise(const ChainSpec& spec, const std::vector<double>& beta,
                    int samples_per_link);

// Draws beta with beta_i in [-alpha_i, alpha_i]. Extreme and SignFlips
// both pin |beta_i| = alpha_i with independent random signs.
std::vector<double> sample_valid_turns(const std::vector<double>& alpha,
                                       std::uint64_t seed, SampleMode mode);

// Exact reachable region for n = 2; throws unless the spec has exactly
// two links and an interior turn in (0, pi).
ReachableArc reachable_region_2link(const ChainSpec& spec);

// `count` hand positions from independently seeded valid reconfigurations.
// Every point is asserted to lie outside the open forbidden disk.
std::vector<Vec2> sample_reachable(const ChainSpec& spec, int count, std::uint64_t seed,
                                   SampleMode mode = SampleMode::Uniform);

// Flips all turns nonnegative: the intermediate configuration that turns a
// valid reconfiguration into a classic Cauchy opening.
std::vector<double> convexify(const std::vector<double>& gamma);

// Random convex chain with `nlinks` links: consecutive points on a circle
// of random radius, with arc gaps bounded away from zero so lengths and
// turns stay nondegenerate.
ChainSpec random_convex_spec(SplitMix64& rng, int nlinks);

}  // namespace slicedev
