// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#include "bestchoice/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bestchoice/version.hpp"

namespace bestchoice::io {
namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Distribution parse_distribution(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("config: each distribution needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") return Distribution::uniform(j.at("lo").get<double>(), j.at("hi").get<double>());
  if (kind == "exponential") return Distribution::exponential(j.at("rate").get<double>());
  if (kind == "discrete")
    return Distribution::discrete(j.at("values").get<std::vector<double>>(),
                                  j.at("probs").get<std::vector<double>>());
  if (kind == "empirical") return Distribution::empirical(j.at("samples").get<std::vector<double>>());
  throw std::invalid_argument("config: unknown distribution kind \"" + kind + "\"");
}

ordered_json distribution_to_json(const Distribution& d) {
  ordered_json j;
  j["kind"] = d.kind_name();
  d.visit([&](const auto& impl) {
    using T = std::decay_t<decltype(impl)>;
    if constexpr (std::is_same_v<T, Distribution::Uniform>) {
      j["lo"] = impl.lo;
      j["hi"] = impl.hi;
    } else if constexpr (std::is_same_v<T, Distribution::Exponential>) {
      j["rate"] = impl.rate;
    } else if constexpr (std::is_same_v<T, Distribution::Discrete>) {
      j["values"] = impl.values;
      j["probs"] = impl.probs;
    } else {
      j["samples"] = impl.samples;
    }
  });
  return j;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& base_dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  try {
    ExperimentConfig config;
    if (!j.contains("distributions") || !j.at("distributions").is_array())
      throw std::invalid_argument("config: \"distributions\" array is required");
    for (const auto& dj : j.at("distributions")) config.distributions.push_back(parse_distribution(dj));
    config.trials = j.at("trials").get<std::int64_t>();
    config.seed = j.at("seed").get<std::uint64_t>();
    const std::string mode = j.value("mode", std::string("full-knowledge"));
    if (mode == "full-knowledge")
      config.mode = ExperimentMode::full_knowledge;
    else if (mode == "sample-based")
      config.mode = ExperimentMode::sample_based;
    else
      throw std::invalid_argument("config: unknown mode \"" + mode + "\"");
    if (j.contains("epsilon")) config.epsilon = j.at("epsilon").get<double>();
    if (j.contains("samples_per_dist"))
      config.samples_per_dist = j.at("samples_per_dist").get<std::int64_t>();
    if (j.contains("samples_csv")) {
      const std::filesystem::path p = j.at("samples_csv").get<std::string>();
      const std::filesystem::path resolved =
          p.is_absolute() || base_dir.empty() ? p : std::filesystem::path(base_dir) / p;
      config.samples_csv = resolved.string();
      config.sample_table = read_sample_table_csv(resolved.string());
    }
    validate(config);
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  return parse_config_text(read_file(path), std::filesystem::path(path).parent_path().string());
}

std::string serialize_config(const ExperimentConfig& config) {
  ordered_json j;
  j["distributions"] = ordered_json::array();
  for (const auto& d : config.distributions) j["distributions"].push_back(distribution_to_json(d));
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["mode"] = config.mode == ExperimentMode::full_knowledge ? "full-knowledge" : "sample-based";
  if (config.epsilon) j["epsilon"] = *config.epsilon;
  if (config.samples_per_dist) j["samples_per_dist"] = *config.samples_per_dist;
  if (config.samples_csv) j["samples_csv"] = *config.samples_csv;
  return j.dump(2) + "\n";
}

std::string serialize_result(const SimulationResult& result) {
  ordered_json j;
  j["trials"] = result.trials;
  j["wins"] = result.wins;
  j["rate"] = result.rate;
  j["std_error"] = result.std_error;
  j["ci95_low"] = result.ci95_low;
  j["ci95_high"] = result.ci95_high;
  j["reference_bound"] = result.reference_bound;
  return j.dump(2) + "\n";
}

std::string make_manifest(const std::string& command, const std::string& config_json,
                          std::uint64_t seed, const std::string& timestamp) {
  ordered_json j;
  j["command"] = command;
  j["config"] = ordered_json::parse(config_json);
  j["seed"] = seed;
  j["timestamp"] = timestamp;
  j["artifact_version"] = kVersion;
  return j.dump(2) + "\n";
}

samples::SampleTable read_sample_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sample CSV: " + path);
  samples::SampleTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("sample CSV: missing header row");
  {
    std::istringstream header(line);
    std::string label;
    while (std::getline(header, label, ',')) table.labels.push_back(label);
  }
  if (table.labels.empty()) throw std::invalid_argument("sample CSV: empty header row");
  table.columns.assign(table.labels.size(), {});

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(row, cell, ',')) {
      if (col >= table.columns.size())
        throw std::invalid_argument("sample CSV: too many columns on line " + std::to_string(line_no));
      double value = 0.0;
      const char* begin = cell.data();
      const char* end = begin + cell.size();
      const auto res = std::from_chars(begin, end, value);
      if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("sample CSV: bad number \"" + cell + "\" on line " +
                                    std::to_string(line_no));
      table.columns[col].push_back(value);
      ++col;
    }
    if (col != table.columns.size())
      throw std::invalid_argument("sample CSV: ragged row on line " + std::to_string(line_no));
  }
  if (table.rows() == 0) throw std::invalid_argument("sample CSV: no data rows");
  return table;
}

void write_sample_table_csv(const std::string& path, const samples::SampleTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  for (std::size_t i = 0; i < table.labels.size(); ++i) out << (i ? "," : "") << table.labels[i];
  out << "\n";
  for (std::int64_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << format_number(table.columns[c][static_cast<std::size_t>(r)]);
    out << "\n";
  }
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace bestchoice::io
