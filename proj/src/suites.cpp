#include "slicedev/suites.hpp"

#include <algorithm>
#include <cmath>

#include "slicedev/json_io.hpp"

namespace slicedev {

namespace {

template <typename Fn>
void for_each_trial_serial(int trials, Fn&& fn) {
    for (int t = 0; t < trials; ++t) fn(t);
}

template <typename Fn>
void for_each_trial_parallel(int trials, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (int t = 0; t < trials; ++t) fn(t);
#else
    for_each_trial_serial(trials, fn);
#endif
}

template <typename Fn>
void for_each_trial(int trials, bool parallel, Fn&& fn) {
    if (parallel)
        for_each_trial_parallel(trials, fn);
    else
        for_each_trial_serial(trials, fn);
}

constexpr int kMinLinks = 2;
constexpr int kMaxLinks = 12;

}  // namespace

ArmTrial make_arm_trial(std::uint64_t master_seed, int trial) {
    ArmTrial t;
    t.seed = derive_seed(master_seed, static_cast<std::uint64_t>(trial));
    SplitMix64 rng(t.seed);
    const int n = kMinLinks + static_cast<int>(rng.below(kMaxLinks - kMinLinks + 1));
    t.spec = random_convex_spec(rng, n);
    t.mode = static_cast<SampleMode>(trial % 3);
    t.beta = sample_valid_turns(t.spec.turns, derive_seed(t.seed, 1), t.mode);
    return t;
}

SliceTrial make_slice_trial(std::uint64_t master_seed, int trial, int max_hull_points) {
    SliceTrial t;
    t.seed = derive_seed(master_seed, static_cast<std::uint64_t>(trial));
    SplitMix64 rng(t.seed);
    const int npts = 4 + static_cast<int>(rng.below(std::max(1, max_hull_points - 4 + 1)));
    t.polytope = random_hull(npts, derive_seed(t.seed, 1));

    const double z = rng.uniform(-1.0, 1.0);
    const double a = rng.uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 normal{r * std::cos(a), r * std::sin(a), z};
    double lo = normal.dot(t.polytope.vertices[0]), hi = lo;
    for (const Vec3& v : t.polytope.vertices) {
        lo = std::min(lo, normal.dot(v));
        hi = std::max(hi, normal.dot(v));
    }
    const double pad = 0.02 * (hi - lo);
    t.plane = PlaneSpec(normal, rng.uniform(lo + pad, hi - pad));
    return t;
}

ArmSuiteReport run_arm_suite(const RunConfig& cfg) {
    struct Slot {
        double margin = std::numeric_limits<double>::infinity();
        bool disk_ok = true, simple_ok = true, pairwise_ok = true;
        bool pairwise_ran = false;
        bool error = false;
        std::string what;
    };
    std::vector<Slot> slots(cfg.trials);

    for_each_trial(cfg.trials, cfg.parallel, [&](int trial) {
        Slot& slot = slots[trial];
        try {
            const ArmTrial t = make_arm_trial(cfg.seed, trial);
            const ArmCheckReport arm = check_arm(t.spec, t.beta);
            slot.margin = arm.margin;
            slot.disk_ok = arm.passed;
            slot.simple_ok = is_simple(configure({t.spec.lengths, t.beta}));
            if (trial < cfg.pairwise_trials) {
                slot.pairwise_ran = true;
                slot.pairwise_ok = check_pairwise(t.spec, t.beta, cfg.samples_per_link);
            }
        } catch (const std::exception& e) {
            slot.error = true;
            slot.what = e.what();
        }
    });

    ArmSuiteReport report;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const Slot& slot = slots[trial];
        if (slot.pairwise_ran) ++report.pairwise_trials;
        report.min_margin = std::min(report.min_margin, slot.margin);
        std::string what;
        if (slot.error) {
            ++report.errors;
            what = "error: " + slot.what;
        } else {
            if (!slot.disk_ok) ++report.disk_violations, what += "hand entered forbidden disk; ";
            if (!slot.simple_ok) ++report.simplicity_failures, what += "chain not simple; ";
            if (!slot.pairwise_ok) ++report.pairwise_failures, what += "points moved closer; ";
        }
        if (!what.empty()) {
            const ArmTrial t = make_arm_trial(cfg.seed, trial);
            report.failures.push_back(
                {trial, t.seed, what,
                 {{"spec", to_json(t.spec)}, {"beta", t.beta}, {"mode", to_string(t.mode)}}});
        }
    }
    return report;
}

BaseCaseReport run_base_case_suite(const RunConfig& cfg) {
    struct Slot {
        bool arc_ok = true, disk_ok = true, equality_ok = true;
        double deviation = 0.0;
        std::string what;
    };
    std::vector<Slot> slots(cfg.trials);
    const double eps = 1e-9;

    for_each_trial(cfg.trials, cfg.parallel, [&](int trial) {
        Slot& slot = slots[trial];
        const std::uint64_t seed = derive_seed(cfg.seed ^ 0xba5ebeefULL, trial);
        SplitMix64 rng(seed);
        ChainSpec spec = random_convex_spec(rng, 2);
        const ReachableArc arc = reachable_region_2link(spec);
        const double a = forbidden_disk(spec).radius;

        const auto points = sample_reachable(spec, cfg.base_points, derive_seed(seed, 2),
                                             trial % 2 ? SampleMode::Uniform : SampleMode::Extreme);
        for (const Vec2& p : points) {
            const double arc_dev = std::abs(distance(p, arc.center) - arc.radius);
            const double angle = std::atan2(p.y - arc.center.y, p.x - arc.center.x);
            slot.deviation = std::max(slot.deviation, arc_dev);
            if (arc_dev > eps * (1.0 + arc.radius) || angle < arc.angle_lo - eps ||
                angle > arc.angle_hi + eps)
                slot.arc_ok = false;
            if (p.norm() < a - eps * (1.0 + a)) slot.disk_ok = false;
        }
        // The minimum shoulder distance is attained at beta = +-alpha.
        for (const double b : {arc.angle_lo, arc.angle_hi}) {
            const Chain extreme = configure({spec.lengths, {b}});
            if (std::abs(extreme.hand().norm() - a) > eps * (1.0 + a)) slot.equality_ok = false;
        }
        if (!slot.arc_ok) slot.what += "hand left the analytic arc; ";
        if (!slot.disk_ok) slot.what += "hand entered forbidden disk; ";
        if (!slot.equality_ok) slot.what += "extreme turns missed the disk boundary; ";
    });

    BaseCaseReport report;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const Slot& slot = slots[trial];
        report.max_arc_deviation = std::max(report.max_arc_deviation, slot.deviation);
        if (!slot.arc_ok) ++report.arc_failures;
        if (!slot.disk_ok) ++report.disk_failures;
        if (!slot.equality_ok) ++report.equality_failures;
        if (!slot.what.empty())
            report.failures.push_back(
                {trial, derive_seed(cfg.seed ^ 0xba5ebeefULL, trial), slot.what, {}});
    }
    return report;
}

IndicatrixSuiteReport run_indicatrix_suite(const RunConfig& cfg) {
    struct Slot {
        bool turning_ok = true, sandwich_ok = true, projection_ok = true;
        bool sandwich_ran = false, projection_ran = false;
        double projection_error = 0.0;
        double sandwich_slack = std::numeric_limits<double>::infinity();
        bool error = false;
        std::string what;
    };
    std::vector<Slot> slots(cfg.trials);
    const double eps = 1e-9;

    for_each_trial(cfg.trials, cfg.parallel, [&](int trial) {
        Slot& slot = slots[trial];
        try {
            const ArmTrial t = make_arm_trial(cfg.seed, trial);
            const Chain a = configure(t.spec);
            const Chain b = configure({t.spec.lengths, t.beta});
            const double turn_a = build_indicatrix(a).total_turning();
            const double turn_b = build_indicatrix(b).total_turning();
            if (turn_b > turn_a + eps) slot.turning_ok = false;

            if (trial < cfg.sandwich_trials) {
                slot.sandwich_ran = true;
                const double bound = chord_lower_bound(t.spec, t.beta);
                const double chord_a = distance(a.hand(), a.shoulder());
                const double chord_b = distance(b.hand(), b.shoulder());
                slot.sandwich_slack = std::min(bound - chord_a, chord_b - bound);
                if (bound < chord_a - eps || bound > chord_b + eps) slot.sandwich_ok = false;
            }

            if (trial < cfg.projection_trials) {
                slot.projection_ran = true;
                // Any chain at all; only a nondegenerate chord is needed.
                SplitMix64 rng(derive_seed(t.seed, 3));
                Chain chain;
                for (int attempt = 0; attempt < 64; ++attempt) {
                    ChainSpec spec;
                    const int n = 2 + static_cast<int>(rng.below(15));
                    for (int i = 0; i < n; ++i) spec.lengths.push_back(rng.uniform(0.2, 2.0));
                    for (int i = 0; i + 1 < n; ++i)
                        spec.turns.push_back(rng.uniform(-0.999 * M_PI, 0.999 * M_PI));
                    chain = configure(spec);
                    if (distance(chain.hand(), chain.shoulder()) > 1e-6) break;
                }
                const double chord = distance(chain.hand(), chain.shoulder());
                const Vec2 u = (chain.hand() - chain.shoulder()).normalized();
                slot.projection_error = std::abs(projection_chord(chain, u) - chord);
                if (slot.projection_error > 1e-12 * (1.0 + chord)) slot.projection_ok = false;
            }
        } catch (const std::exception& e) {
            slot.error = true;
            slot.what = e.what();
        }
    });

    IndicatrixSuiteReport report;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const Slot& slot = slots[trial];
        if (slot.sandwich_ran) {
            ++report.sandwich_trials;
            report.min_sandwich_slack = std::min(report.min_sandwich_slack, slot.sandwich_slack);
        }
        if (slot.projection_ran) {
            ++report.projection_trials;
            report.max_projection_error =
                std::max(report.max_projection_error, slot.projection_error);
        }
        std::string what;
        if (slot.error) {
            ++report.errors;
            what = "error: " + slot.what;
        } else {
            if (!slot.turning_ok) ++report.turning_failures, what += "total turning grew; ";
            if (!slot.sandwich_ok) ++report.sandwich_failures, what += "chord bound left [a, a*]; ";
            if (!slot.projection_ok)
                ++report.projection_failures, what += "projection identity broke; ";
        }
        if (!what.empty()) {
            const ArmTrial t = make_arm_trial(cfg.seed, trial);
            report.failures.push_back(
                {trial, t.seed, what,
                 {{"spec", to_json(t.spec)}, {"beta", t.beta}, {"mode", to_string(t.mode)}}});
        }
    }
    return report;
}

SliceSuiteReport run_slice_suite(const RunConfig& cfg) {
    struct Slot {
        bool degenerate = false;
        bool ok = true;
        bool left_simple = true;
        double angle_slack = std::numeric_limits<double>::infinity();
        bool error = false;
        std::string what;
    };
    std::vector<Slot> slots(cfg.trials);

    for_each_trial(cfg.trials, cfg.parallel, [&](int trial) {
        Slot& slot = slots[trial];
        try {
            const SliceTrial t = make_slice_trial(cfg.seed, trial, cfg.max_hull_points);
            const SliceTheoremReport rep = check_slice_theorem(t.polytope, t.plane);
            slot.degenerate = rep.degenerate;
            slot.ok = rep.passed;
            slot.left_simple = rep.degenerate || rep.left_simple;
            if (!rep.degenerate) {
                for (const Corner& c : rep.curve->corners)
                    slot.angle_slack =
                        std::min({slot.angle_slack, c.theta_right - c.phi,
                                  2.0 * M_PI - c.phi - c.theta_right});
                if (!rep.passed) {
                    for (const auto& note : rep.notes) slot.what += note + "; ";
                }
            }
        } catch (const std::exception& e) {
            slot.error = true;
            slot.what = e.what();
        }
    });

    SliceSuiteReport report;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const Slot& slot = slots[trial];
        if (slot.error) {
            ++report.errors;
        } else if (slot.degenerate) {
            ++report.degenerate;
        } else {
            ++report.curves;
            if (!slot.ok) ++report.failed_curves;
            if (!slot.left_simple) ++report.left_nonsimple;
            report.min_angle_slack = std::min(report.min_angle_slack, slot.angle_slack);
        }
        if (!slot.what.empty()) {
            const SliceTrial t = make_slice_trial(cfg.seed, trial, cfg.max_hull_points);
            report.failures.push_back({trial, t.seed,
                                       slot.error ? "error: " + slot.what : slot.what,
                                       {{"off", to_off(t.polytope)},
                                        {"plane",
                                         {t.plane.normal.x, t.plane.normal.y, t.plane.normal.z,
                                          t.plane.offset}}}});
        }
    }
    return report;
}

}  // namespace slicedev
