#pragma once

#include <array>
#include <map>
#include <string>

#include "attisim/affect.hpp"

namespace attisim {

/// A point on the interpersonal circumplex.
struct AttitudePoint {
  double friendliness = 0.0;
  double dominance = 0.0;

  bool operator==(const AttitudePoint&) const = default;
};

/// Unit-vector placement of each categorical attitude in the
/// (friendliness, dominance) plane. Angles are measured from the positive
/// friendliness axis, counterclockwise toward positive dominance.
class PlacementTable {
 public:
  static PlacementTable defaults();

  /// Builds a table from label -> angle in degrees. Every attitude of the
  /// recruiter vocabulary must be present.
  static PlacementTable from_angles(const std::map<std::string, double>& degrees);

  std::array<double, 2> placement(const std::string& label) const;  // throws on unknown
  const std::map<std::string, std::array<double, 2>>& placements() const {
    return placements_;
  }

 private:
  std::map<std::string, std::array<double, 2>> placements_;
};

/// Angles of the default placement table; also the built-in config values.
const std::map<std::string, double>& default_placement_angles();

/// Intensity-weighted vector average over the active attitudes (intensity > 0).
/// Returns (0,0) when nothing is active.
AttitudePoint aggregate(const AffectVector& attitudes,
                        const PlacementTable& placements);

}  // namespace attisim
