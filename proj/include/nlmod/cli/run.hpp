#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "nlmod/biphoton.hpp"
#include "nlmod/cli/config.hpp"
#include "nlmod/modulator.hpp"

namespace nlmod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

BiphotonModel build_model(const RunConfig& cfg);
ModulatorSpec build_modulator(const ModulatorConfig& m, double tol);

/// Executes one scenario, writing result files under cfg.output. Returns the
/// process exit status; diagnostics go to `err`. Paths of written files are
/// appended to `written` when given.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err,
        std::vector<std::filesystem::path>* written = nullptr);

/// Full command-line entry point: argument parsing, config file merge and run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nlmod::cli
