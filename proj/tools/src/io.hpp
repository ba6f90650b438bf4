#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "toricmot/fan.hpp"
#include "toricmot/homology.hpp"
#include "toricmot/motive.hpp"

namespace toricmot::cli {

using nlohmann::json;

struct FanFile {
  Fan fan;
  std::optional<bool> quasiprojective;
  std::optional<bool> complete_hint;
  std::optional<Fan> refinement;
  std::optional<GradedGroups> homology;
};

/// Throws ToricError(ParseError) on malformed input; every number must be
/// an exact integer.
FanFile parse_fan_file(const json& j);
FanFile load_fan_file(const std::string& path);

GradedGroups parse_homology(const json& j);
GradedGroups load_homology_file(const std::string& path);

json fan_to_json(const Fan& f);
json homology_to_json(const GradedGroups& h);
json vector_to_json(const LatticeVector& v);

/// {"text": ..., "summands": [{twist, shift, free_rank, torsion}, ...]}
json motive_to_json(const Motive& m);
/// Accepts the summand list or the wrapping object.
Motive motive_from_json(const json& j);

}  // namespace toricmot::cli
