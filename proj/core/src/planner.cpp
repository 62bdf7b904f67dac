#include "attisim/planner.hpp"

#include <algorithm>
#include <cmath>

namespace attisim {

void AgentContext::apply(const Pattern& pattern) {
  for (const auto& label : pattern) {
    if (label == "PostureLeanBack") {
      posture = Posture::LeanBack;
    } else if (label == "PostureLeanFront") {
      posture = Posture::LeanFront;
    } else if (label == "PostureStraight") {
      posture = Posture::Neutral;
    } else if (label == "Smile") {
      smiling = true;
    }
  }
}

int PlannerState::uses_within_window(const std::string& key) const {
  int uses = 0;
  for (const auto& [use_turn, use_key] : history) {
    if (use_key == key && use_turn >= turn - config.decay_window) ++uses;
  }
  return uses;
}

AttitudeDelta attitude_delta(const AttitudePoint& current,
                             const PlannerState& state) {
  return {current.friendliness - state.previous_point.friendliness,
          current.dominance - state.previous_point.dominance};
}

namespace {

std::optional<VariationKind> classify_component(
    double delta, const std::vector<double>& centroids, double dead_zone) {
  if (std::abs(delta) < dead_zone) return std::nullopt;
  std::size_t best = 0;
  double best_dist = std::abs(delta - centroids[0]);
  for (std::size_t c = 1; c < centroids.size(); ++c) {
    const double dist = std::abs(delta - centroids[c]);
    if (dist < best_dist) {
      best_dist = dist;
      best = c;
    }
  }
  return static_cast<VariationKind>(best);
}

}  // namespace

TargetClasses classify_delta(const AttitudeDelta& delta,
                             const std::map<Dimension, std::vector<double>>& centroids,
                             double dead_zone) {
  for (const auto& [dimension, c] : centroids) {
    if (c.size() != 4) {
      throw ValidationError("expected 4 centroids per dimension, got " +
                            std::to_string(c.size()));
    }
  }
  TargetClasses out;
  if (auto it = centroids.find(Dimension::Friendliness); it != centroids.end()) {
    out.first = classify_component(delta.d_friendliness, it->second, dead_zone);
  }
  if (auto it = centroids.find(Dimension::Dominance); it != centroids.end()) {
    out.second = classify_component(delta.d_dominance, it->second, dead_zone);
  }
  return out;
}

bool feasible(const Pattern& pattern, const AgentContext& context,
              std::vector<std::string>* warnings) {
  for (const auto& label : pattern) {
    if (label == "PostureLeanBack" && context.posture == Posture::LeanBack)
      return false;
    if (label == "PostureLeanFront" && context.posture == Posture::LeanFront)
      return false;
    if (label == "Smile" && context.smiling) return false;
    if (!SignalVocabulary::defaults().find(label) && warnings) {
      warnings->push_back("no feasibility rule for unknown label '" + label +
                          "'; assumed feasible");
    }
  }
  return true;
}

SelectionResult select_sequence(const std::vector<PatternStats>& stats,
                                const TargetClasses& classes,
                                PlannerState& state) {
  if (!classes.first && !classes.second) {
    // No variation to convey on either dimension: display nothing.
    ++state.turn;
    SelectionResult result;
    result.diagnostic = "no attitude variation to convey";
    return result;
  }
  struct Factors {
    double conf_f = 1.0, lift_f = 1.0, conf_d = 1.0, lift_d = 1.0;
    bool has_f = false, has_d = false;
  };
  std::map<std::string, Factors> by_pattern;
  std::map<std::string, Pattern> patterns;
  for (const auto& r : stats) {
    const std::string key = pattern_key(r.pattern);
    patterns.emplace(key, r.pattern);
    auto& f = by_pattern[key];
    if (r.dimension == Dimension::Friendliness && classes.first &&
        r.kind == *classes.first) {
      f.conf_f = r.confidence;
      f.lift_f = r.lift;
      f.has_f = true;
    }
    if (r.dimension == Dimension::Dominance && classes.second &&
        r.kind == *classes.second) {
      f.conf_d = r.confidence;
      f.lift_d = r.lift;
      f.has_d = true;
    }
  }

  const std::string* best_key = nullptr;
  double best_val = 0.0;
  double best_lift = 0.0;
  for (const auto& [key, f] : by_pattern) {
    // A required class without stats means Conf = 0: excluded.
    if (classes.first && !f.has_f) continue;
    if (classes.second && !f.has_d) continue;
    if (!feasible(patterns.at(key), state.context)) continue;
    const double lambda = std::pow(2.0, state.uses_within_window(key));
    const double val = f.conf_f * f.conf_d * f.lift_f * f.lift_d / lambda;
    if (val <= 0.0) continue;
    const double lift_product = f.lift_f * f.lift_d;
    const bool better =
        !best_key || val > best_val ||
        (val == best_val &&
         (lift_product > best_lift ||
          (lift_product == best_lift && key < *best_key)));
    if (better) {
      best_key = &key;
      best_val = val;
      best_lift = lift_product;
    }
  }

  SelectionResult result;
  if (!best_key) {
    result.diagnostic = "no feasible candidate for the target variation";
  } else {
    result.pattern = patterns.at(*best_key);
    result.val = best_val;
    state.history.emplace_back(state.turn, *best_key);
  }
  ++state.turn;
  return result;
}

}  // namespace attisim
