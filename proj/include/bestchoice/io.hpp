// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "bestchoice/samples.hpp"
#include "bestchoice/simulate.hpp"
#include "bestchoice/stats.hpp"

namespace bestchoice::io {

// 12 significant digits, '.' separator, locale-free; stable across reruns so
// emitted tables diff cleanly.
std::string format_number(double x);

// Experiment config as JSON:
//   {
//     "distributions": [ {"kind": "uniform", "lo": .., "hi": ..},
//                        {"kind": "exponential", "rate": ..},
//                        {"kind": "discrete", "values": [..], "probs": [..]},
//                        {"kind": "empirical", "samples": [..]} ],
//     "trials": N, "seed": S, "mode": "full-knowledge" | "sample-based",
//     "epsilon": e, "samples_per_dist": m, "samples_csv": "path"   (optional)
//   }
// parse_config resolves samples_csv relative to the config file's directory
// and loads the table. Throws std::invalid_argument on malformed input.
ExperimentConfig parse_config_text(const std::string& text, const std::string& base_dir = "");
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

// Result JSON with a stable key order; no timestamp, so identical runs are
// byte-identical.
std::string serialize_result(const SimulationResult& result);

// Manifest emitted alongside every result file: command, resolved config
// (any JSON object), seed, timestamp, artifact version.
std::string make_manifest(const std::string& command, const std::string& config_json,
                          std::uint64_t seed, const std::string& timestamp);

// Sample table CSV: header row of labels, then one row of n decimal values
// per line.
samples::SampleTable read_sample_table_csv(const std::string& path);
void write_sample_table_csv(const std::string& path, const samples::SampleTable& table);

std::string iso8601_now();

}  // namespace bestchoice::io
