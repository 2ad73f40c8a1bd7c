#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nlmod/measurement.hpp"
#include "nlmod/modulator.hpp"

namespace nlmod::cli {

/// Invalid configuration document or command line (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { spectrum, correlate, sumrules, measure };
enum class OutputFormat { csv, csv_svg };
enum class ModelKind { rectangular, gaussian };

std::string to_string(Scenario s);

struct ModelConfig {
  ModelKind kind = ModelKind::rectangular;
  double center = 0.0;    // rectangular only
  double duration = 1.0;  // gaussian only
  double delay = 0.0;     // gaussian only
};

struct ModulatorConfig {
  ModulatorKind kind = ModulatorKind::identity;
  double depth = 0.0;
  double omega_m = 1.0;
};

struct RunConfig {
  Scenario scenario = Scenario::spectrum;
  std::optional<std::string> preset;
  ModelConfig model;
  ModulatorConfig signal;
  ModulatorConfig idler;
  double half_width = 200.0;
  std::size_t n_points = 16001;
  double T = 1.0;
  double tol = kDefaultTruncationTolerance;

  // measure scenario
  double omega_m_max = 12.0;
  std::size_t samples = 241;
  double tau_max = 16.0;
  std::size_t tau_points = 641;
  SweepWindow window = SweepWindow::none;

  std::string output = "nlmod";
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 1;

  /// Horizontal window written for continuous figure presets.
  std::optional<std::pair<double, double>> plot_range;
};

/// Parses a configuration document (JSON text). An empty document is
/// treated as an empty object.
RunConfig parse_config(std::string_view text);
RunConfig parse_config(const nlohmann::json& doc);
inline RunConfig parse_config(const char* text) { return parse_config(std::string_view(text)); }

/// Configuration document a figure preset expands to; throws ConfigError
/// for unknown names.
nlohmann::json preset_document(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace nlmod::cli
