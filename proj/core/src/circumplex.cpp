#include "attisim/circumplex.hpp"

#include <cmath>
#include <numbers>

namespace attisim {

const std::map<std::string, double>& default_placement_angles() {
  // Quadrant semantics: aggressive = hostile-dominant, supportive =
  // friendly-dominant, inattentive = hostile-submissive, gossip =
  // friendly-submissive.
  static const std::map<std::string, double> angles = {
      {"friendly", 0.0},   {"attentive", 15.0},   {"supportive", 45.0},
      {"dominant", 90.0},  {"aggressive", 135.0}, {"inattentive", 225.0},
      {"gossip", 315.0},
  };
  return angles;
}

PlacementTable PlacementTable::defaults() {
  return from_angles(default_placement_angles());
}

PlacementTable PlacementTable::from_angles(
    const std::map<std::string, double>& degrees) {
  PlacementTable table;
  for (const auto& [label, angle] : degrees) {
    if (!is_recruiter_attitude(label)) {
      throw ValidationError("placement for unknown attitude '" + label + "'");
    }
    const double rad = angle * std::numbers::pi / 180.0;
    table.placements_[label] = {std::cos(rad), std::sin(rad)};
  }
  for (const auto& info : recruiter_labels()) {
    if (info.kind == AffectKind::Attitude &&
        !table.placements_.contains(info.name)) {
      throw ValidationError("missing placement for attitude '" + info.name + "'");
    }
  }
  return table;
}

std::array<double, 2> PlacementTable::placement(const std::string& label) const {
  auto it = placements_.find(label);
  if (it == placements_.end()) {
    throw ValidationError("no placement for attitude '" + label + "'");
  }
  return it->second;
}

AttitudePoint aggregate(const AffectVector& attitudes,
                        const PlacementTable& placements) {
  double sum_f = 0.0;
  double sum_d = 0.0;
  int active = 0;
  for (const auto& [label, value] : attitudes.entries()) {
    if (!is_recruiter_attitude(label)) {
      throw ValidationError("'" + label + "' is not a recruiter attitude");
    }
    if (value <= 0.0) continue;
    const auto vec = placements.placement(label);
    sum_f += value * vec[0];
    sum_d += value * vec[1];
    ++active;
  }
  if (active == 0) return {};
  return {sum_f / active, sum_d / active};
}

}  // namespace attisim
