#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "attisim/config.hpp"
#include "attisim/planner.hpp"

namespace attisim {

struct Turn {
  std::string question_id;
  AffectVector expected;
  AffectVector detected;
  bool interactive = false;  // detected affects come from the input stream
};

struct Scenario {
  Personality personality;
  AffectVector initial_moods;  // empty = neutral start
  std::vector<Turn> turns;
};

Scenario parse_scenario(const std::filesystem::path& path,
                        const IntervieweeLabelSet& labels);

struct TurnTrace {
  int turn_index = 0;
  std::string question_id;
  AffectVector emotions;
  AffectVector moods;
  AffectVector attitudes;
  AttitudePoint point;
  Pattern chosen_sequence;
};

struct SimulationOptions {
  AppConfig config;
  std::istream* interactive_input = nullptr;  // required for interactive turns
  std::ostream* prompt = nullptr;             // optional REPL prompt stream
};

/// Runs the scenario turn by turn, threading mood and planner state.
/// Module failures abort with the turn index attached.
std::vector<TurnTrace> run_simulation(const Scenario& scenario,
                                      const MinedPatternFile& patterns,
                                      const SimulationOptions& options = {});

void write_trace_csv(std::ostream& out, const std::vector<TurnTrace>& traces);
void write_trace_text(std::ostream& out, const std::vector<TurnTrace>& traces);

/// Reads back a trace CSV; only the fields compare_traces needs are restored.
std::vector<TurnTrace> read_trace_csv(const std::filesystem::path& path);

struct CompareEntry {
  int turn_index = 0;
  int trace_sign = 0;
  std::optional<int> reference_sign;  // nullopt = no reference coverage
};

struct CompareReport {
  std::vector<CompareEntry> entries;
  double agreement = 0.0;  // over covered turns
};

/// Sign-level agreement of the trace's friendliness against an annotated
/// reference curve sampled at the turn indices (supportive vs aggressive).
CompareReport compare_traces(const std::vector<TurnTrace>& traces,
                             const AttitudeCurve& reference);

void write_compare_report(std::ostream& out, const CompareReport& report);

}  // namespace attisim
