#include "attisim/attitude_rules.hpp"

#include <algorithm>

namespace attisim {

void RuleConfig::validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ValidationError("rule threshold must lie strictly inside (0,1)");
  }
}

AffectVector compute_attitudes(const AffectVector& moods,
                               const Personality& personality,
                               const RuleConfig& cfg) {
  cfg.validate();
  personality.validate();
  for (const auto& [label, value] : moods.entries()) {
    if (!is_recruiter_mood(label)) {
      throw ValidationError("'" + label + "' is not a recruiter mood");
    }
  }

  const double theta = cfg.threshold;
  const double A = personality.agreeableness;
  const double C = personality.conscientiousness;
  const double E = personality.extraversion;
  const double N = personality.neuroticism;
  const double exuberant = moods.get("exuberant");
  const double hostile = moods.get("hostile");
  const double relaxed = moods.get("relaxed");
  const double disdainful = moods.get("disdainful");

  AffectVector out;
  for (const auto& info : recruiter_labels()) {
    if (info.kind == AffectKind::Attitude) out.set(info.name, 0.0);
  }

  if (A > theta || exuberant > theta)
    out.set("friendly", std::max(exuberant, A));
  if ((A < theta && N > theta) || hostile > theta)
    out.set("aggressive", std::max({hostile, N, 1.0 - A}));
  if ((E > theta && N > theta) || hostile > theta)
    out.set("dominant", std::max({hostile, N, E}));
  if ((E > theta && A > theta) || relaxed > theta)
    out.set("supportive", std::max({relaxed, A, E}));
  if (C < theta || disdainful > theta)
    out.set("inattentive", std::max(disdainful, 1.0 - C));
  if (C > theta || relaxed > theta)
    out.set("attentive", std::max(relaxed, C));
  if (E > theta || exuberant > theta)
    out.set("gossip", std::max(exuberant, E));

  return out;
}

}  // namespace attisim
