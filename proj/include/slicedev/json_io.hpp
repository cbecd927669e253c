#pragma once

#include <json.hpp>

#include "slicedev/chain.hpp"
#include "slicedev/develop.hpp"
#include "slicedev/indicatrix.hpp"
#include "slicedev/polytope.hpp"

namespace slicedev {

struct FailureRecord;
struct ArmSuiteReport;
struct BaseCaseReport;
struct IndicatrixSuiteReport;
struct SliceSuiteReport;

// {"lengths": [...], "turns": [...]}
nlohmann::json to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(const nlohmann::json& j);

// {"joints": [[x, y], ...]}
nlohmann::json to_json(const Chain& chain);

// {"variant": "...", "corners": [{"position": [x,y,z], "kind": ..., ...}]}
nlohmann::json to_json(const SliceResult& result);
SliceResult slice_result_from_json(const nlohmann::json& j);

// {"joints": [...], "betas": [...], "side": "right"|"left"}
nlohmann::json to_json(const Development& dev);

nlohmann::json to_json(const Indicatrix& ind);

nlohmann::json to_json(const FailureRecord& f);
nlohmann::json to_json(const ArmSuiteReport& r);
nlohmann::json to_json(const BaseCaseReport& r);
nlohmann::json to_json(const IndicatrixSuiteReport& r);
nlohmann::json to_json(const SliceSuiteReport& r);

}  // namespace slicedev
