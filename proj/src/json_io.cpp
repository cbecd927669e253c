#include "slicedev/json_io.hpp"

#include "slicedev/suites.hpp"

namespace slicedev {

using nlohmann::json;

json to_json(const ChainSpec& spec) {
    return {{"lengths", spec.lengths}, {"turns", spec.turns}};
}

ChainSpec chain_spec_from_json(const json& j) {
    ChainSpec spec;
    spec.lengths = j.at("lengths").get<std::vector<double>>();
    spec.turns = j.at("turns").get<std::vector<double>>();
    spec.validate();
    return spec;
}

json to_json(const Chain& chain) {
    json joints = json::array();
    for (const Vec2& p : chain.joints) joints.push_back({p.x, p.y});
    return {{"joints", joints}};
}

namespace {

json corner_to_json(const Corner& c) {
    return {{"position", {c.position.x, c.position.y, c.position.z}},
            {"kind", c.kind == CornerKind::EdgeCrossing ? "EdgeCrossing" : "PolytopeVertex"},
            {"id", c.id},
            {"phi", c.phi},
            {"theta_right", c.theta_right},
            {"theta_left", c.theta_left}};
}

Corner corner_from_json(const json& j) {
    Corner c;
    const auto pos = j.at("position").get<std::vector<double>>();
    if (pos.size() != 3) throw std::invalid_argument("corner position must have 3 coordinates");
    c.position = {pos[0], pos[1], pos[2]};
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "EdgeCrossing") c.kind = CornerKind::EdgeCrossing;
    else if (kind == "PolytopeVertex") c.kind = CornerKind::PolytopeVertex;
    else throw std::invalid_argument("unknown corner kind '" + kind + "'");
    c.id = j.value("id", -1);
    c.phi = j.at("phi").get<double>();
    c.theta_right = j.at("theta_right").get<double>();
    c.theta_left = j.at("theta_left").get<double>();
    return c;
}

}  // namespace

json to_json(const SliceResult& result) {
    json j;
    j["variant"] = to_string(result.variant);
    if (result.variant == SliceVariant::Curve) {
        const SliceCurve& curve = *result.curve;
        json corners = json::array();
        for (const Corner& c : curve.corners) corners.push_back(corner_to_json(c));
        j["corners"] = std::move(corners);
        j["plane"] = {{"normal", {curve.plane.normal.x, curve.plane.normal.y, curve.plane.normal.z}},
                      {"offset", curve.plane.offset}};
    }
    if (result.degenerate_id >= 0) j["degenerate_id"] = result.degenerate_id;
    if (!result.warnings.empty()) j["warnings"] = result.warnings;
    return j;
}

SliceResult slice_result_from_json(const json& j) {
    SliceResult result;
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "Curve") result.variant = SliceVariant::Curve;
    else if (variant == "DegenerateFace") result.variant = SliceVariant::DegenerateFace;
    else if (variant == "DegenerateEdge") result.variant = SliceVariant::DegenerateEdge;
    else if (variant == "DegenerateVertex") result.variant = SliceVariant::DegenerateVertex;
    else if (variant == "Empty") result.variant = SliceVariant::Empty;
    else throw std::invalid_argument("unknown slice variant '" + variant + "'");
    result.degenerate_id = j.value("degenerate_id", -1);
    if (result.variant == SliceVariant::Curve) {
        SliceCurve curve;
        for (const json& cj : j.at("corners")) curve.corners.push_back(corner_from_json(cj));
        if (curve.corners.size() < 3)
            throw std::invalid_argument("slice curve needs at least 3 corners");
        if (j.contains("plane")) {
            const auto n = j["plane"].at("normal").get<std::vector<double>>();
            if (n.size() != 3) throw std::invalid_argument("plane normal must have 3 coordinates");
            curve.plane = PlaneSpec({n[0], n[1], n[2]}, j["plane"].at("offset").get<double>());
        }
        result.curve = std::move(curve);
    }
    return result;
}

json to_json(const Development& dev) {
    json joints = json::array();
    for (const Vec2& p : dev.chain.joints) joints.push_back({p.x, p.y});
    return {{"joints", joints}, {"betas", dev.betas}, {"side", to_string(dev.side)}};
}

json to_json(const Indicatrix& ind) {
    json dirs = json::array();
    for (const Vec2& d : ind.link_directions) dirs.push_back({d.x, d.y});
    return {{"directions", dirs}, {"cumulative_turning", ind.cumulative_turning}};
}

json to_json(const FailureRecord& f) {
    return {{"trial", f.trial}, {"seed", f.seed}, {"what", f.what}, {"detail", f.detail}};
}

namespace {

json failures_to_json(const std::vector<FailureRecord>& failures) {
    json arr = json::array();
    for (const FailureRecord& f : failures) arr.push_back(to_json(f));
    return arr;
}

}  // namespace

json to_json(const ArmSuiteReport& r) {
    return {{"suite", "arm"},
            {"seed", r.seed},
            {"trials", r.trials},
            {"disk_violations", r.disk_violations},
            {"simplicity_failures", r.simplicity_failures},
            {"pairwise_trials", r.pairwise_trials},
            {"pairwise_failures", r.pairwise_failures},
            {"errors", r.errors},
            {"min_margin", r.min_margin},
            {"failures", failures_to_json(r.failures)}};
}

json to_json(const BaseCaseReport& r) {
    return {{"suite", "base2link"},
            {"seed", r.seed},
            {"trials", r.trials},
            {"arc_failures", r.arc_failures},
            {"disk_failures", r.disk_failures},
            {"equality_failures", r.equality_failures},
            {"max_arc_deviation", r.max_arc_deviation},
            {"failures", failures_to_json(r.failures)}};
}

json to_json(const IndicatrixSuiteReport& r) {
    return {{"suite", "indicatrix"},
            {"seed", r.seed},
            {"trials", r.trials},
            {"turning_failures", r.turning_failures},
            {"projection_trials", r.projection_trials},
            {"projection_failures", r.projection_failures},
            {"sandwich_trials", r.sandwich_trials},
            {"sandwich_failures", r.sandwich_failures},
            {"errors", r.errors},
            {"max_projection_error", r.max_projection_error},
            {"min_sandwich_slack", r.min_sandwich_slack},
            {"failures", failures_to_json(r.failures)}};
}

json to_json(const SliceSuiteReport& r) {
    return {{"suite", "slice"},
            {"seed", r.seed},
            {"trials", r.trials},
            {"curves", r.curves},
            {"degenerate", r.degenerate},
            {"failed_curves", r.failed_curves},
            {"errors", r.errors},
            {"left_nonsimple", r.left_nonsimple},
            {"min_angle_slack", r.min_angle_slack},
            {"failures", failures_to_json(r.failures)}};
}

}  // namespace slicedev
