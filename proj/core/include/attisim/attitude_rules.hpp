#pragma once

#include "attisim/affect.hpp"

namespace attisim {

struct RuleConfig {
  double threshold = 0.5;  // theta, strictly inside (0,1)

  void validate() const;
};

/// Threshold rules mapping (mood, personality) to the seven categorical
/// attitude intensities. Mood compensates personality and vice versa: each
/// attitude fires on a disjunction of the two, and takes the fuzzy max of its
/// sources. All comparisons against the threshold are strict; an untriggered
/// attitude is 0.
AffectVector compute_attitudes(const AffectVector& moods,
                               const Personality& personality,
                               const RuleConfig& cfg = {});

}  // namespace attisim
