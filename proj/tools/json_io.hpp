#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "dwlab/estimators.hpp"
#include "dwlab/hypothesis.hpp"
#include "dwlab/limits.hpp"
#include "dwlab/montecarlo.hpp"
#include "dwlab/recovery.hpp"

namespace dwlab::cli {

using nlohmann::json;

struct RunManifest {
    std::string command_line;
    std::optional<std::uint64_t> seed;
    std::string rng_algorithm;
    std::string version;
    std::string timestamp;
};

RunManifest make_manifest(const std::string& command_line, std::optional<std::uint64_t> seed);

json to_json(const RunManifest& m);
json to_json(const Matrix2& m);
json to_json(const AsymptoticSet& a);
json to_json(const EstimateSet& e, bool with_residuals);
json to_json(const TestOutcome& t);
json to_json(const TestWeights& w);
json to_json(const RecoveredParams& r);
json to_json(const KsResult& k);
json to_json(const ReplicateSummary& r);

}  // namespace dwlab::cli
