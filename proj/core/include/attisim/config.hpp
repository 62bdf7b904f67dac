#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "attisim/affect.hpp"
#include "attisim/attitude_rules.hpp"
#include "attisim/circumplex.hpp"
#include "attisim/corpus.hpp"
#include "attisim/planner.hpp"
#include "attisim/seqmine.hpp"

namespace attisim {

/// Every tunable of the pipeline in one place. A JSON config file may
/// override any subset; unspecified keys keep their defaults.
struct AppConfig {
  RuleConfig rule;
  double mood_alpha = kMoodGain;
  std::map<std::string, double> placement_angles = default_placement_angles();
  VariationParams variation;
  MinerConfig miner;
  PlannerConfig planner;
  IntervieweeLabelSet interviewee = IntervieweeLabelSet::defaults();

  PlacementTable placements() const {
    return PlacementTable::from_angles(placement_angles);
  }
};

AppConfig load_config(const std::filesystem::path& path);

}  // namespace attisim
