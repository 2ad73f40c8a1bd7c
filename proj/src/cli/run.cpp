#include "nlmod/cli/run.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlmod/cli/output.hpp"
#include "nlmod/correlation.hpp"
#include "nlmod/measurement.hpp"
#include "nlmod/spectra.hpp"

namespace nlmod::cli {

namespace fs = std::filesystem;
using nlohmann::json;

BiphotonModel build_model(const RunConfig& cfg) {
  if (cfg.model.kind == ModelKind::rectangular) {
    const FrequencyGrid grid(cfg.model.center, cfg.half_width, cfg.n_points);
    return make_rectangular(cfg.model.center, grid);
  }
  const FrequencyGrid grid(0.0, cfg.half_width, cfg.n_points);
  return make_gaussian_delayed(cfg.model.duration, cfg.model.delay, grid);
}

ModulatorSpec build_modulator(const ModulatorConfig& m, double tol) {
  switch (m.kind) {
    case ModulatorKind::phase: return phase_modulator(m.depth, m.omega_m, tol);
    case ModulatorKind::amplitude: return amplitude_modulator(m.depth, m.omega_m);
    case ModulatorKind::identity:
    case ModulatorKind::custom: break;
  }
  return identity_modulator(m.omega_m);
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

class Writer {
 public:
  Writer(const RunConfig& cfg, std::vector<fs::path>* written) : cfg_(cfg), written_(written) {
    const fs::path parent = fs::path(cfg.output).parent_path();
    if (!parent.empty()) {
      std::error_code ec;
      fs::create_directories(parent, ec);
      if (ec) throw ConfigError("cannot create output directory '" + parent.string() + "'");
    }
  }

  // `suffix` is empty for figure presets (single output named after the prefix).
  void emit(const std::string& suffix, const CsvTable& table, Chart chart) {
    const std::string stem = cfg_.output + (suffix.empty() ? "" : "_" + suffix);
    const fs::path csv = stem + ".csv";
    write_csv(csv, table);
    record(csv);
    if (cfg_.format == OutputFormat::csv_svg) {
      chart.x = table.columns[0];
      chart.y = table.columns[1];
      const fs::path svg = stem + ".svg";
      write_svg(svg, chart);
      record(svg);
    }
  }

 private:
  void record(const fs::path& p) {
    if (written_) written_->push_back(p);
  }
  const RunConfig& cfg_;
  std::vector<fs::path>* written_;
};

CsvTable windowed(const FrequencyGrid& grid, const std::vector<double>& values,
                  const std::optional<std::pair<double, double>>& range, const char* x_name,
                  const char* y_name) {
  CsvTable t{{x_name, y_name}, {{}, {}}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.point(i);
    if (range && (x < range->first || x > range->second)) continue;
    t.columns[0].push_back(x);
    t.columns[1].push_back(values[i]);
  }
  return t;
}

CsvTable comb_table(const SidebandComb& comb) {
  CsvTable t{{"z", "f_normalized"}, {{}, {}}};
  for (int z = -comb.z_max; z <= comb.z_max; ++z) {
    t.columns[0].push_back(z);
    t.columns[1].push_back(comb.normalized(z));
  }
  return t;
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

void run_spectrum(const RunConfig& cfg, const BiphotonModel& model, const ModulatorSpec& s,
                  const ModulatorSpec& i, Parallelism par, Writer& w, std::ostream& out) {
  const auto signal = signal_spectrum(model, s, cfg.T, par);
  const Chart chart{"Signal spectrum", "detuning", "counts per bandwidth", {}, {}, ChartStyle::line};
  if (cfg.preset) {
    w.emit("", windowed(signal.grid, signal.values, cfg.plot_range, "omega", "counts"), chart);
  } else {
    const auto idler = idler_spectrum(model, i, cfg.T, par);
    w.emit("signal", windowed(signal.grid, signal.values, cfg.plot_range, "omega", "counts"), chart);
    Chart ichart = chart;
    ichart.title = "Idler spectrum";
    w.emit("idler", windowed(idler.grid, idler.values, cfg.plot_range, "omega", "counts"), ichart);
    out << "idler total_counts = " << format_number(idler.total_counts) << '\n';
  }
  out << "signal total_counts = " << format_number(signal.total_counts) << '\n';
}

void run_correlate(const RunConfig& cfg, const BiphotonModel& model, const ModulatorSpec& s,
                   const ModulatorSpec& i, Parallelism par, Writer& w) {
  const auto comb = quantum_comb(model, s, i, cfg.T, par);
  const Chart chart{"Quantum correlation vs sideband number", "sideband number z",
                    "f(z) / (2 pi R)", {}, {}, ChartStyle::stem};
  if (cfg.preset) {
    w.emit("", comb_table(comb), chart);
    return;
  }
  w.emit("comb", comb_table(comb), chart);
  const auto curve = classical_curve(model, s, i, cfg.T, std::nullopt, par);
  w.emit("classical", windowed(curve.delta_grid, curve.values, cfg.plot_range, "delta", "c"),
         Chart{"Classical correlation", "Delta", "c(Delta)", {}, {}, ChartStyle::line});
}

void run_sumrules(const RunConfig& cfg, const BiphotonModel& model, const ModulatorSpec& s,
                  const ModulatorSpec& i, Parallelism par, std::ostream& out, std::ostream& err) {
  const auto comb = quantum_comb(model, s, i, cfg.T, par);
  const auto curve = classical_curve(model, s, i, cfg.T, std::nullopt, par);
  const auto r = sum_rules(comb, curve, model);
  const double rt = r.R * r.T;
  out << "R = " << fixed6(r.R) << '\n'
      << "T = " << fixed6(r.T) << '\n'
      << "quantum_sum/RT = " << fixed6(r.quantum_sum / rt) << '\n'
      << "classical_integral/(RT)^2 = " << fixed6(r.classical_integral / (rt * rt)) << '\n'
      << "quantum_deviation = " << format_number(r.quantum_deviation) << '\n'
      << "classical_deviation = " << format_number(r.classical_deviation) << '\n'
      << "single_pair_regime = " << (r.single_pair_regime ? "yes" : "no") << '\n';
  if (!r.single_pair_regime)
    err << "warning: R T = " << rt << " is not << 1; the quantum comb is masked by accidentals\n";

  const fs::path csv = cfg.output + "_sumrules.csv";
  write_csv(csv, CsvTable{{"R", "T", "quantum_sum", "classical_integral", "quantum_deviation",
                           "classical_deviation"},
                          {{r.R}, {r.T}, {r.quantum_sum}, {r.classical_integral},
                           {r.quantum_deviation}, {r.classical_deviation}}});
}

void run_measure(const RunConfig& cfg, const BiphotonModel& model, Parallelism par, Writer& w,
                 std::ostream& out, std::ostream& err) {
  const auto curve =
      measured_curve(model, cfg.signal.depth, cfg.idler.depth, cfg.omega_m_max, cfg.samples, par);
  report_warnings(curve.warnings, err);
  const auto wave = recover_waveform(curve, cfg.tau_max, cfg.tau_points, cfg.window, par);

  const Chart curve_chart{"Coincidence counts vs modulation frequency", "omega_m",
                          "counts per bandwidth (mean removed)", {}, {}, ChartStyle::line};
  const Chart wave_chart{"Recovered biphoton intensity", "tau", "|phi(tau)|^2 (normalized)", {}, {},
                         ChartStyle::line};
  const CsvTable wave_table{{"tau", "intensity"}, {wave.tau_values, wave.intensity}};

  if (cfg.preset == "fig6a") {
    w.emit("", CsvTable{{"omega_m", "F"}, {curve.omega_m_values, curve.mean_subtracted()}}, curve_chart);
  } else if (cfg.preset) {
    w.emit("", wave_table, wave_chart);
  } else {
    Chart raw = curve_chart;
    raw.y_label = "counts per bandwidth";
    w.emit("curve", CsvTable{{"omega_m", "F"}, {curve.omega_m_values, curve.F_values}}, raw);
    w.emit("waveform", wave_table, wave_chart);
  }
  out << "kappa = " << format_number(curve.kappa) << '\n'
      << "peak_tau = " << format_number(wave.peak_tau()) << '\n'
      << "clipped_fraction = " << format_number(wave.clipped_fraction) << '\n';
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::vector<fs::path>* written) {
  try {
    const Parallelism par{cfg.threads};
    Writer writer(cfg, written);
    const BiphotonModel model = build_model(cfg);
    if (cfg.scenario == Scenario::measure) {
      run_measure(cfg, model, par, writer, out, err);
      return kExitOk;
    }
    const ModulatorSpec s = build_modulator(cfg.signal, cfg.tol);
    const ModulatorSpec i = build_modulator(cfg.idler, cfg.tol);
    report_warnings(s.warnings(), err);
    report_warnings(i.warnings(), err);
    switch (cfg.scenario) {
      case Scenario::spectrum: run_spectrum(cfg, model, s, i, par, writer, out); break;
      case Scenario::correlate: run_correlate(cfg, model, s, i, par, writer); break;
      case Scenario::sumrules: run_sumrules(cfg, model, s, i, par, out, err); break;
      case Scenario::measure: break;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlmod::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

namespace {

// "kind[:depth[:omega_m]]"
json modulator_flag(const std::string& text, const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty() || parts.size() > 3)
    throw ConfigError("--" + name + ": expected KIND[:DEPTH[:OMEGA_M]]");
  json m = {{"kind", parts[0]}};
  auto number = [&](const std::string& s, const char* what) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("--" + name + ": " + what + " '" + s + "' is not a number");
    }
  };
  if (parts.size() > 1) m["depth"] = number(parts[1], "depth");
  if (parts.size() > 2) m["omega_m"] = number(parts[2], "omega_m");
  return m;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entangled-photon modulation simulator", "nlmod"};
  std::string scenario;
  std::string preset;
  std::string config_file;
  std::optional<std::string> output, format, model, signal, idler, window;
  std::optional<double> center, duration, delay, half_width, T, tol, omega_m_max, tau_max;
  std::optional<long long> points, samples, tau_points, threads;

  app.add_option("scenario", scenario, "spectrum | correlate | sumrules | measure | figure-preset")
      ->required();
  app.add_option("preset", preset, "Figure preset name (with figure-preset)");
  app.add_option("--config", config_file, "JSON configuration file");
  app.add_option("--out", output, "Output path prefix");
  app.add_option("--format", format, "csv | csv+svg");
  app.add_option("--model", model, "rectangular | gaussian");
  app.add_option("--center", center, "Rectangular model center");
  app.add_option("--duration", duration, "Gaussian duration");
  app.add_option("--delay", delay, "Gaussian delay");
  app.add_option("--half-width", half_width, "Frequency grid half width");
  app.add_option("--points", points, "Frequency grid point count (odd)");
  app.add_option("--T", T, "Gatewidth");
  app.add_option("--tol", tol, "Comb truncation tolerance");
  app.add_option("--signal", signal, "Signal modulator KIND[:DEPTH[:OMEGA_M]]");
  app.add_option("--idler", idler, "Idler modulator KIND[:DEPTH[:OMEGA_M]]");
  app.add_option("--omega-m-max", omega_m_max, "Sweep end for measure");
  app.add_option("--samples", samples, "Sweep sample count for measure");
  app.add_option("--tau-max", tau_max, "Recovered waveform range");
  app.add_option("--tau-points", tau_points, "Recovered waveform sample count");
  app.add_option("--window", window, "none | hann");
  app.add_option("--threads", threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  RunConfig cfg;
  try {
    json doc = json::object();
    if (!config_file.empty()) {
      std::ifstream in(config_file, std::ios::binary);
      if (!in) throw ConfigError("cannot read config file '" + config_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
        try {
          doc = json::parse(text);
        } catch (const json::parse_error& e) {
          throw ConfigError("malformed config file '" + config_file + "': " + e.what());
        }
      }
      if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    }
    doc["scenario"] = scenario;
    if (!preset.empty()) {
      if (scenario != "figure-preset") throw ConfigError("unexpected argument '" + preset + "'");
      doc["preset"] = preset;
    }
    auto set = [&](const char* key, const auto& v) {
      if (v) doc[key] = *v;
    };
    set("output", output);
    set("format", format);
    set("model", model);
    set("center", center);
    set("duration", duration);
    set("delay", delay);
    set("grid_half_width", half_width);
    set("grid_points", points);
    set("T", T);
    set("tol", tol);
    set("omega_m_max", omega_m_max);
    set("samples", samples);
    set("tau_max", tau_max);
    set("tau_points", tau_points);
    set("window", window);
    set("threads", threads);
    if (signal) doc["signal"] = modulator_flag(*signal, "signal");
    if (idler) doc["idler"] = modulator_flag(*idler, "idler");
    cfg = parse_config(doc);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(cfg, out, err);
}

}  // namespace nlmod::cli
