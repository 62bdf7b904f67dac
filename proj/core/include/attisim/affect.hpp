#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "attisim/errors.hpp"

namespace attisim {

enum class AffectKind { Emotion, Mood, Attitude };
enum class Valence { Positive, Negative };

struct AffectLabelInfo {
  std::string name;
  AffectKind kind;
  Valence valence;
};

/// The fixed recruiter vocabulary: eight emotions, five moods, seven attitudes.
const std::vector<AffectLabelInfo>& recruiter_labels();
std::optional<AffectLabelInfo> recruiter_label(const std::string& name);
bool is_recruiter_emotion(const std::string& name);
bool is_recruiter_mood(const std::string& name);
bool is_recruiter_attitude(const std::string& name);

/// Sparse map from affect label to intensity in [0,1].
/// An absent label reads as intensity 0.
class AffectVector {
 public:
  AffectVector() = default;
  AffectVector(std::initializer_list<std::pair<const std::string, double>> init);

  double get(const std::string& label) const;
  void set(const std::string& label, double value);  // throws on value outside [0,1]
  void raise(const std::string& label, double value);  // set(max(current, value))

  const std::map<std::string, double>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const AffectVector&) const = default;

 private:
  std::map<std::string, double> entries_;
};

/// Interviewee-side affect vocabulary. The set is configuration, not code;
/// the default covers the labels the annotation scheme uses.
class IntervieweeLabelSet {
 public:
  static IntervieweeLabelSet defaults();

  void add(const std::string& name, AffectKind kind, Valence valence);
  std::optional<AffectLabelInfo> find(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Throws ValidationError if any label of v is not in the set.
  void validate(const AffectVector& v) const;

 private:
  std::map<std::string, AffectLabelInfo> labels_;
};

struct DetectedAffects {
  AffectVector emotions;
  AffectVector moods;
  AffectVector attitudes;
  int turn_index = 0;

  /// Looks a label up across the three sub-vectors.
  double value(const std::string& label) const;
  std::map<std::string, double> all_entries() const;
};

struct ExpectedAffects {
  AffectVector entries;
  int turn_index = 0;
};

struct RecruiterAffectState {
  AffectVector emotions;
  AffectVector moods;
  AffectVector attitudes;
  int turn_index = 0;
};

/// OCEAN five-factor personality, fixed for the lifetime of a simulation.
struct Personality {
  double openness = 0.5;
  double conscientiousness = 0.5;
  double extraversion = 0.5;
  double agreeableness = 0.5;
  double neuroticism = 0.5;

  void validate() const;  // throws if any trait leaves [0,1]
};

/// Mood inertia: new = old + alpha * (target - old). The default alpha makes a
/// sustained full-intensity emotion push its mood past 0.5 on the fifth cycle.
inline constexpr double kMoodGain = 0.13;

/// Emotions below this on every label count as an absence of emotion,
/// which drives the bored mood.
inline constexpr double kQuietEmotionLevel = 0.1;

/// Recruiter emotions for one turn, from the expected-vs-detected congruence
/// table. Labels of `expected` and `detected` must come from `labels`.
AffectVector update_emotions(const DetectedAffects& detected,
                             const ExpectedAffects& expected,
                             const IntervieweeLabelSet& labels);

/// One mood-inertia step. `previous_moods` must hold only recruiter mood
/// labels, `emotions` only recruiter emotion labels.
AffectVector update_mood(const AffectVector& previous_moods,
                         const AffectVector& emotions,
                         double alpha = kMoodGain);

}  // namespace attisim
