#pragma once

#include "hypermorse/graph_spaces.hpp"

#include <map>
#include <optional>
#include <string>

namespace hypermorse::cli {

/// Parsed `kind:key=val,key=val`.
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, long long> values;
};

/// Strict parse: unknown kinds, unknown keys, missing keys and repeated keys are errors.
GeneratorSpec parse_generator_spec(const std::string& text);

/// A generated or loaded space plus what the commands need to know about it.
struct SpaceSource {
  std::string descriptor;
  GeodesicSpace space;
  /// Boundary cycles when the space is a tessellation patch.
  std::vector<std::vector<PointId>> cycles;
  /// Radius when the space is a full regular tree ball centered at 0.
  std::optional<int> ball_radius;
};

SpaceSource build_space(const GeneratorSpec& spec);

/// Exactly one of generator / edge-list path must be nonempty.
SpaceSource load_space(const std::string& generator, const std::string& edge_list_path);

} // namespace hypermorse::cli
