#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "arrlab/constructions.hpp"
#include "arrlab/statistics.hpp"
#include "arrlab/verification.hpp"

namespace arrlab::json_io {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json metadata_to_json(const ConstructionMetadata& meta);
ConstructionMetadata metadata_from_json(const json& j);

/// {"dim": d, "hyperplanes": [{"a": ["p/q", ...], "b": "p/q"}, ...]} plus an
/// optional "metadata" block.
json arrangement_to_json(const Arrangement& arr, const std::optional<ConstructionMetadata>& meta = std::nullopt);

struct LoadedArrangement {
  Arrangement arrangement;
  std::optional<ConstructionMetadata> metadata;
};
/// Throws InputError on schema violations.
LoadedArrangement arrangement_from_json(const json& j);

json cell_record_to_json(const CellRecord& cell);
json census_to_json(const CensusReport& report, bool include_cells);
json instance_to_json(const InstanceSpec& spec);
json verification_to_json(const VerificationResult& result);
json suite_to_json(const std::vector<VerificationResult>& results, const SeedSet& seeds);

json seeds_to_json(const SeedSet& seeds);
/// {"bound": B, "planar": [{"n": n, "seed": s}, ...], "spatial": [...]}.
SeedSet seeds_from_json(const json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
json parse(const std::string& text);

}  // namespace arrlab::json_io
