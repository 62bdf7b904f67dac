#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "attisim/circumplex.hpp"
#include "attisim/seqmine.hpp"

namespace attisim {

struct AttitudeDelta {
  double d_friendliness = 0.0;
  double d_dominance = 0.0;
};

enum class Posture { Neutral, LeanBack, LeanFront };

/// What the agent's body is currently doing; drives the feasibility filter.
struct AgentContext {
  Posture posture = Posture::Neutral;
  bool smiling = false;

  /// Folds a displayed sequence into the context (posture changes, smiling).
  void apply(const Pattern& pattern);
};

struct PlannerConfig {
  double dead_zone = 0.05;  // |delta| below this counts as no variation
  int decay_window = 5;     // W turns for the repetition penalty
};

/// Per-agent planner state. select_sequence mutates it; serialize access per
/// simulated agent.
struct PlannerState {
  AttitudePoint previous_point;
  AgentContext context;
  PlannerConfig config;
  int turn = 0;
  std::vector<std::pair<int, std::string>> history;  // (turn, pattern key)

  int uses_within_window(const std::string& key) const;
};

/// Componentwise difference between the current point and the previous turn's.
AttitudeDelta attitude_delta(const AttitudePoint& current,
                             const PlannerState& state);

using TargetClasses =
    std::pair<std::optional<VariationKind>, std::optional<VariationKind>>;

/// Nearest-centroid classification of each delta component; nullopt marks the
/// dead zone (no variation on that dimension).
TargetClasses classify_delta(const AttitudeDelta& delta,
                             const std::map<Dimension, std::vector<double>>& centroids,
                             double dead_zone = 0.05);

/// False iff the pattern demands a body change the context already holds.
/// Unknown labels are feasible, with a warning.
bool feasible(const Pattern& pattern, const AgentContext& context,
              std::vector<std::string>* warnings = nullptr);

struct SelectionResult {
  Pattern pattern;       // empty when nothing can be displayed
  double val = 0.0;
  std::string diagnostic;
};

/// Argmax of Val = Conf_F * Conf_D * Lift_F * Lift_D / lambda over feasible
/// patterns, with lambda = 2^(uses within the last W turns). A no-variation
/// dimension contributes neutral (1,1) factors; a pattern without stats for a
/// required class is excluded. Records the chosen pattern in the state.
SelectionResult select_sequence(const std::vector<PatternStats>& stats,
                                const TargetClasses& classes,
                                PlannerState& state);

}  // namespace attisim
