#pragma once

#include "hypermorse/bounds.hpp"
#include "hypermorse/rational.hpp"
#include "hypermorse/richness.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypermorse::cli {

inline constexpr int kReportSchemaVersion = 1;

enum class Format { json, csv };

struct CommandOptions {
  std::string gen;
  std::string input;
  Rational lambda{1};
  Rational c{0};
  std::int64_t delta_param = 1;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  Format format = Format::json;
  MorseConstants constants;
  bool extremal = false;

  // four-point scan
  std::size_t max_exact = 150;
  std::size_t sample_quadruples = 0;

  // delta-length / contraction
  std::string curve_file;
  std::optional<PointId> from;
  std::optional<PointId> to;
  std::size_t walk_length = 12;

  // richness
  RichnessOptions richness;
  bool endpoints_given = false;
};

/// Outcome of one subcommand. `report` carries a wall_clock_seconds field that
/// is outside the determinism contract; everything else is a function of the options.
struct CommandResult {
  nlohmann::json report;
  std::string csv;
  bool ok = true;

  std::string render(Format format) const;
};

CommandResult cmd_hyperbolicity(const CommandOptions& options);
CommandResult cmd_morse(const CommandOptions& options);
CommandResult cmd_displacement(const CommandOptions& options);
CommandResult cmd_contraction(const CommandOptions& options);
CommandResult cmd_richness(const CommandOptions& options);
CommandResult cmd_delta_length(const CommandOptions& options);

/// Per-trial seed derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Parses "3,5,8" into point ids; "" and "none" give an empty list.
std::vector<PointId> parse_id_list(const std::string& text);

} // namespace hypermorse::cli
