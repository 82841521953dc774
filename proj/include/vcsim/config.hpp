#pragma once

#include "vcsim/experiment.hpp"

#include <string>

namespace vcsim {

/// Built-in experiment presets.
///  - "paper_defaults": 10 pods x 40 racks x 40 hosts, mean VC size 49,
///    80k requests with 10k warmup. The full-scale reproduction target;
///    takes a long time.
///  - "desk_scale": 2 pods x 4 racks x 8 hosts, mean VC size 12, 4000
///    requests with 500 warmup. Finishes in seconds.
ExperimentConfig preset(const std::string& name);

/// Loads an ExperimentConfig from a JSON file. Every rational field accepts
/// "num/den" strings so exact fractions survive the config boundary.
/// Throws std::runtime_error with a diagnostic on malformed input.
ExperimentConfig load_config(const std::string& path);

/// Resolves a --config argument: a preset name if one matches, else a file.
ExperimentConfig resolve_config(const std::string& name_or_path);

}  // namespace vcsim
