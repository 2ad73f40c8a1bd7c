#include "nlmod/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nlmod::cli {

using nlohmann::json;

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::spectrum: return "spectrum";
    case Scenario::correlate: return "correlate";
    case Scenario::sumrules: return "sumrules";
    case Scenario::measure: return "measure";
  }
  return "unknown";
}

namespace {

const std::set<std::string> kTopLevelKeys = {
    "scenario", "preset",      "model",   "center",  "duration",   "delay",
    "grid_half_width", "grid_points", "T",  "tol",     "signal",     "idler",
    "omega_m_max", "samples",  "tau_max", "tau_points", "window",    "output",
    "format",   "threads",     "plot_range"};

const std::set<std::string> kModulatorKeys = {"kind", "depth", "omega_m"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) throw ConfigError("unknown key '" + prefix + item.key() + "'");
  }
}

double number_at(const json& obj, const char* key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(path + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path + ": expected a finite number");
  return d;
}

long long integer_at(const json& obj, const char* key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(path + ": expected an integer");
  return v.get<long long>();
}

std::string string_at(const json& obj, const char* key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(path + ": expected a string");
  return v.get<std::string>();
}

template <typename Fn>
void if_present(const json& obj, const char* key, Fn&& fn) {
  if (obj.contains(key)) fn(std::string(key));
}

ModulatorConfig parse_modulator(const json& obj, const std::string& name) {
  if (!obj.is_object()) throw ConfigError(name + ": expected an object with kind/depth/omega_m");
  reject_unknown(obj, kModulatorKeys, name + ".");
  ModulatorConfig m;
  if (!obj.contains("kind")) throw ConfigError(name + ".kind required");
  const std::string kind = string_at(obj, "kind", name + ".kind");
  if (kind == "identity") {
    m.kind = ModulatorKind::identity;
  } else if (kind == "phase") {
    m.kind = ModulatorKind::phase;
  } else if (kind == "amplitude") {
    m.kind = ModulatorKind::amplitude;
  } else {
    throw ConfigError(name + ".kind: expected identity, phase or amplitude, got '" + kind + "'");
  }
  if_present(obj, "depth", [&](const std::string& k) { m.depth = number_at(obj, "depth", name + "." + k); });
  if_present(obj, "omega_m",
             [&](const std::string& k) { m.omega_m = number_at(obj, "omega_m", name + "." + k); });

  if (m.kind != ModulatorKind::identity && !obj.contains("depth"))
    throw ConfigError(name + ".depth required for a " + kind + " modulator");
  if (m.kind == ModulatorKind::phase && !obj.contains("omega_m"))
    throw ConfigError(name + ".omega_m required for a phase modulator");
  if (!(m.omega_m > 0.0)) throw ConfigError(name + ".omega_m must be positive");
  if (m.kind == ModulatorKind::phase && std::abs(m.depth) > 20.0)
    throw ConfigError(name + ".depth must satisfy |depth| <= 20 for a phase modulator");
  if (m.kind == ModulatorKind::amplitude && !(m.depth > 0.0))
    throw ConfigError(name + ".depth must be positive for an amplitude modulator");
  return m;
}

json merged_preset(const json& doc) {
  if (!doc.contains("preset")) throw ConfigError("preset required for scenario figure-preset");
  const std::string name = string_at(doc, "preset", "preset");
  json merged = preset_document(name);
  json overrides = doc;
  overrides.erase("scenario");
  overrides.erase("preset");
  merged.merge_patch(overrides);
  merged["preset"] = name;
  if (!merged.contains("output")) merged["output"] = name;
  return merged;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig3a", "fig3b",
                                                 "fig4a", "fig4b", "fig6a", "fig6b"};
  return names;
}

json preset_document(std::string_view name) {
  auto phase = [](double depth, double wm) {
    return json{{"kind", "phase"}, {"depth", depth}, {"omega_m", wm}};
  };
  auto comb = [&](double di, double wm) {
    return json{{"scenario", "correlate"}, {"model", "rectangular"},
                {"signal", phase(2.0, wm)}, {"idler", phase(di, wm)}};
  };
  auto spectrum = [&](double wm, double range) {
    return json{{"scenario", "spectrum"},
                {"model", "rectangular"},
                {"signal", phase(2.0, wm)},
                {"plot_range", {-range, range}}};
  };
  const json measure = {{"scenario", "measure"},
                        {"model", "gaussian"},
                        {"duration", 1.0},
                        {"delay", 8.0},
                        {"signal", {{"kind", "amplitude"}, {"depth", 0.2}}},
                        {"idler", {{"kind", "amplitude"}, {"depth", 0.2}}},
                        {"omega_m_max", 12.0},
                        {"samples", 241},
                        {"tau_max", 16.0},
                        {"tau_points", 641}};

  if (name == "fig2a") return spectrum(0.1, 20.0);
  if (name == "fig2b") return spectrum(10.0, 60.0);
  if (name == "fig3a") return comb(2.0, 0.1);
  if (name == "fig3b") return comb(-2.0, 0.1);
  if (name == "fig4a") return comb(2.0, 10.0);
  if (name == "fig4b") return comb(-2.0, 10.0);
  if (name == "fig6a" || name == "fig6b") return measure;
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

RunConfig parse_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return parse_config(json::object());
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed configuration document: ") + e.what());
  }
  return parse_config(doc);
}

RunConfig parse_config(const json& input) {
  if (!input.is_object()) throw ConfigError("configuration document must be an object");
  reject_unknown(input, kTopLevelKeys, "");
  if (!input.contains("scenario")) throw ConfigError("scenario required");

  const std::string scenario_name = string_at(input, "scenario", "scenario");
  const json doc = scenario_name == "figure-preset" ? merged_preset(input) : input;
  if (scenario_name != "figure-preset" && doc.contains("preset"))
    throw ConfigError("preset is only valid with scenario figure-preset");

  RunConfig cfg;
  const std::string scenario = string_at(doc, "scenario", "scenario");
  if (scenario == "spectrum") {
    cfg.scenario = Scenario::spectrum;
  } else if (scenario == "correlate") {
    cfg.scenario = Scenario::correlate;
  } else if (scenario == "sumrules") {
    cfg.scenario = Scenario::sumrules;
  } else if (scenario == "measure") {
    cfg.scenario = Scenario::measure;
  } else {
    throw ConfigError("scenario: expected spectrum, correlate, sumrules, measure or figure-preset, got '" +
                      scenario + "'");
  }
  if (doc.contains("preset")) cfg.preset = string_at(doc, "preset", "preset");

  if (doc.contains("model")) {
    const std::string model = string_at(doc, "model", "model");
    if (model == "rectangular") {
      cfg.model.kind = ModelKind::rectangular;
    } else if (model == "gaussian") {
      cfg.model.kind = ModelKind::gaussian;
    } else {
      throw ConfigError("model: expected rectangular or gaussian, got '" + model + "'");
    }
  }
  const bool gaussian = cfg.model.kind == ModelKind::gaussian;
  if (doc.contains("center")) {
    if (gaussian) throw ConfigError("center applies to the rectangular model only");
    cfg.model.center = number_at(doc, "center", "center");
  }
  for (const char* key : {"duration", "delay"}) {
    if (doc.contains(key) && !gaussian)
      throw ConfigError(std::string(key) + " applies to the gaussian model only");
  }
  if_present(doc, "duration", [&](const std::string&) {
    cfg.model.duration = number_at(doc, "duration", "duration");
    if (!(cfg.model.duration > 0.0)) throw ConfigError("duration must be positive");
  });
  if_present(doc, "delay", [&](const std::string&) { cfg.model.delay = number_at(doc, "delay", "delay"); });

  cfg.half_width = gaussian ? 40.0 : 200.0;
  cfg.n_points = gaussian ? 8001 : 16001;
  if_present(doc, "grid_half_width", [&](const std::string&) {
    cfg.half_width = number_at(doc, "grid_half_width", "grid_half_width");
    if (!(cfg.half_width > 0.0)) throw ConfigError("grid_half_width must be positive");
  });
  if_present(doc, "grid_points", [&](const std::string&) {
    const long long n = integer_at(doc, "grid_points", "grid_points");
    if (n < 3 || n % 2 == 0) throw ConfigError("grid_points must be an odd integer >= 3");
    cfg.n_points = static_cast<std::size_t>(n);
  });
  if_present(doc, "T", [&](const std::string&) {
    cfg.T = number_at(doc, "T", "T");
    if (!(cfg.T > 0.0)) throw ConfigError("T must be positive");
  });
  if_present(doc, "tol", [&](const std::string&) {
    cfg.tol = number_at(doc, "tol", "tol");
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw ConfigError("tol must lie in (0, 1)");
  });

  if (cfg.scenario == Scenario::measure) {
    cfg.signal = {ModulatorKind::amplitude, 0.2, 1.0};
    cfg.idler = {ModulatorKind::amplitude, 0.2, 1.0};
  }
  if (doc.contains("signal")) cfg.signal = parse_modulator(doc.at("signal"), "signal");
  if (doc.contains("idler")) cfg.idler = parse_modulator(doc.at("idler"), "idler");
  if (cfg.scenario == Scenario::measure &&
      (cfg.signal.kind != ModulatorKind::amplitude || cfg.idler.kind != ModulatorKind::amplitude))
    throw ConfigError("measure scenario requires amplitude modulators on signal and idler");

  if_present(doc, "omega_m_max", [&](const std::string&) {
    cfg.omega_m_max = number_at(doc, "omega_m_max", "omega_m_max");
    if (!(cfg.omega_m_max > 0.0)) throw ConfigError("omega_m_max must be positive");
  });
  if_present(doc, "samples", [&](const std::string&) {
    const long long n = integer_at(doc, "samples", "samples");
    if (n < 2) throw ConfigError("samples must be at least 2");
    cfg.samples = static_cast<std::size_t>(n);
  });
  if_present(doc, "tau_max", [&](const std::string&) {
    cfg.tau_max = number_at(doc, "tau_max", "tau_max");
    if (!(cfg.tau_max > 0.0)) throw ConfigError("tau_max must be positive");
  });
  if_present(doc, "tau_points", [&](const std::string&) {
    const long long n = integer_at(doc, "tau_points", "tau_points");
    if (n < 2) throw ConfigError("tau_points must be at least 2");
    cfg.tau_points = static_cast<std::size_t>(n);
  });
  if_present(doc, "window", [&](const std::string&) {
    const std::string w = string_at(doc, "window", "window");
    if (w == "none") {
      cfg.window = SweepWindow::none;
    } else if (w == "hann") {
      cfg.window = SweepWindow::hann;
    } else {
      throw ConfigError("window: expected none or hann, got '" + w + "'");
    }
  });

  if_present(doc, "output", [&](const std::string&) {
    cfg.output = string_at(doc, "output", "output");
    if (cfg.output.empty()) throw ConfigError("output must not be empty");
  });
  if_present(doc, "format", [&](const std::string&) {
    const std::string f = string_at(doc, "format", "format");
    if (f == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (f == "csv+svg") {
      cfg.format = OutputFormat::csv_svg;
    } else {
      throw ConfigError("format: expected csv or csv+svg, got '" + f + "'");
    }
  });
  if_present(doc, "threads", [&](const std::string&) {
    const long long n = integer_at(doc, "threads", "threads");
    if (n < 1 || n > 256) throw ConfigError("threads must lie in [1, 256]");
    cfg.threads = static_cast<unsigned>(n);
  });
  if_present(doc, "plot_range", [&](const std::string&) {
    const json& r = doc.at("plot_range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw ConfigError("plot_range: expected [lo, hi]");
    const double lo = r[0].get<double>();
    const double hi = r[1].get<double>();
    if (!(lo < hi)) throw ConfigError("plot_range: lo must be below hi");
    cfg.plot_range = std::make_pair(lo, hi);
  });
  return cfg;
}

}  // namespace nlmod::cli
