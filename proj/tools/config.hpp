#pragma once
// Configuration parsing for the command-line front end. Configs are JSON; the
// schema is documented in the repository README. Every parse failure carries
// the JSON path of the offending field so the message pinpoints the problem.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "indsup/complexity.hpp"
#include "indsup/joint.hpp"
#include "indsup/learning.hpp"
#include "indsup/scenario.hpp"
#include "indsup/separation.hpp"

namespace indsup::tools {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error("at " + path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Reads and parses a JSON config file; throws ConfigError on IO or syntax
// problems (path "$" plus the parser's byte position).
Json load_config_file(const std::string& file_path);

// Canonical serialized form: alphabetically sorted keys, two-space indent,
// shortest round-trip numbers. serialize(parse(x)) is a fixpoint.
std::string canonical_form(const Json& config);

struct ScenarioBundle {
  Scenario scenario;
  EvidenceTable evidence;  // from the optional top-level "evidence" list
  bool has_evidence = false;
};

// Builds the scenario (and optional evidence table) from the root config.
ScenarioBundle build_scenario(const Json& root);

struct CurveSettings {
  std::vector<std::size_t> m_grid = {100, 1000, 10000};
  std::size_t trials = 20;
  double delta = 0.05;
  std::uint64_t seed = 0;
};

// Curve parameters from the optional "curve" stanza, with defaults.
CurveSettings curve_settings(const Json& root);

struct DimensionSettings {
  std::string target = "composed";  // "composed", "hypotheses", or "transitions"
  DimensionOptions options;
};

// Dimension-search parameters from the optional "dimension" stanza.
DimensionSettings dimension_settings(const Json& root);

struct JointBundle {
  TransitionClass class1;
  TransitionClass class2;
  double lambda = 0.5;
  JointContext context;
  std::size_t label_i = 0;
  std::size_t label_j = 1;
  std::optional<JointConstraint> constraint;
};

// Two-source setup from the "joint" stanza plus the scenario context fields
// (instances, labels, dx, h0, hypotheses).
JointBundle build_joint(const Json& root);

}  // namespace indsup::tools
