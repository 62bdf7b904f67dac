#pragma once

#include <filesystem>
#include <iosfwd>

#include "attisim/simulation.hpp"

namespace attisim {

/// Full mining pass: parse the corpus, smooth the attitude curves, detect and
/// cluster variation events, segment, mine with GSP and score. The result is
/// written to `out_path` in the mined-pattern format and also returned.
MinedPatternFile run_mine(const std::filesystem::path& corpus_path,
                          const AppConfig& config,
                          const std::filesystem::path& out_path);

/// Scenario-driven simulation; writes the CSV trace when a path is given and
/// the readable trace to `trace_text`.
std::vector<TurnTrace> run_simulate(
    const std::filesystem::path& scenario_path,
    const std::filesystem::path& patterns_path, const AppConfig& config,
    const std::optional<std::filesystem::path>& trace_csv_path,
    std::ostream& trace_text, std::istream* interactive_input = nullptr,
    std::ostream* prompt = nullptr);

CompareReport run_compare(const std::filesystem::path& trace_csv_path,
                          const std::filesystem::path& reference_path,
                          std::ostream& report_out);

}  // namespace attisim
