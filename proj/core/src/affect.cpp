#include "attisim/affect.hpp"

#include <algorithm>
#include <cmath>

namespace attisim {

namespace {

std::vector<AffectLabelInfo> make_recruiter_labels() {
  using K = AffectKind;
  using V = Valence;
  return {
      {"joy", K::Emotion, V::Positive},
      {"relief", K::Emotion, V::Positive},
      {"admiration", K::Emotion, V::Positive},
      {"hope", K::Emotion, V::Positive},
      {"distress", K::Emotion, V::Negative},
      {"disappointment", K::Emotion, V::Negative},
      {"anger", K::Emotion, V::Negative},
      {"fear", K::Emotion, V::Negative},

      {"relaxed", K::Mood, V::Positive},
      {"exuberant", K::Mood, V::Positive},
      {"hostile", K::Mood, V::Negative},
      {"bored", K::Mood, V::Negative},
      {"disdainful", K::Mood, V::Negative},

      {"friendly", K::Attitude, V::Positive},
      {"supportive", K::Attitude, V::Positive},
      {"attentive", K::Attitude, V::Positive},
      {"aggressive", K::Attitude, V::Negative},
      {"dominant", K::Attitude, V::Negative},
      {"inattentive", K::Attitude, V::Negative},
      {"gossip", K::Attitude, V::Negative},
  };
}

void check_intensity(const std::string& label, double value) {
  if (!(value >= 0.0 && value <= 1.0) || std::isnan(value)) {
    throw ValidationError("intensity for '" + label + "' out of [0,1]: " +
                          std::to_string(value));
  }
}

}  // namespace

const std::vector<AffectLabelInfo>& recruiter_labels() {
  static const std::vector<AffectLabelInfo> table = make_recruiter_labels();
  return table;
}

std::optional<AffectLabelInfo> recruiter_label(const std::string& name) {
  for (const auto& info : recruiter_labels()) {
    if (info.name == name) return info;
  }
  return std::nullopt;
}

bool is_recruiter_emotion(const std::string& name) {
  auto info = recruiter_label(name);
  return info && info->kind == AffectKind::Emotion;
}

bool is_recruiter_mood(const std::string& name) {
  auto info = recruiter_label(name);
  return info && info->kind == AffectKind::Mood;
}

bool is_recruiter_attitude(const std::string& name) {
  auto info = recruiter_label(name);
  return info && info->kind == AffectKind::Attitude;
}

AffectVector::AffectVector(
    std::initializer_list<std::pair<const std::string, double>> init) {
  for (const auto& [label, value] : init) set(label, value);
}

double AffectVector::get(const std::string& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? 0.0 : it->second;
}

void AffectVector::set(const std::string& label, double value) {
  check_intensity(label, value);
  entries_[label] = value;
}

void AffectVector::raise(const std::string& label, double value) {
  set(label, std::max(get(label), value));
}

IntervieweeLabelSet IntervieweeLabelSet::defaults() {
  using K = AffectKind;
  using V = Valence;
  IntervieweeLabelSet set;
  set.add("joy", K::Emotion, V::Positive);
  set.add("relief", K::Emotion, V::Positive);
  set.add("distress", K::Emotion, V::Negative);
  set.add("anxious", K::Emotion, V::Negative);
  set.add("embarrassed", K::Emotion, V::Negative);
  set.add("bored", K::Mood, V::Negative);
  return set;
}

void IntervieweeLabelSet::add(const std::string& name, AffectKind kind,
                              Valence valence) {
  labels_[name] = AffectLabelInfo{name, kind, valence};
}

std::optional<AffectLabelInfo> IntervieweeLabelSet::find(
    const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> IntervieweeLabelSet::names() const {
  std::vector<std::string> out;
  for (const auto& [name, info] : labels_) out.push_back(name);
  return out;
}

void IntervieweeLabelSet::validate(const AffectVector& v) const {
  for (const auto& [label, value] : v.entries()) {
    if (!find(label)) {
      throw ValidationError("unknown interviewee affect label '" + label + "'");
    }
  }
}

double DetectedAffects::value(const std::string& label) const {
  if (auto it = emotions.entries().find(label); it != emotions.entries().end())
    return it->second;
  if (auto it = moods.entries().find(label); it != moods.entries().end())
    return it->second;
  if (auto it = attitudes.entries().find(label); it != attitudes.entries().end())
    return it->second;
  return 0.0;
}

std::map<std::string, double> DetectedAffects::all_entries() const {
  std::map<std::string, double> out = emotions.entries();
  out.insert(moods.entries().begin(), moods.entries().end());
  out.insert(attitudes.entries().begin(), attitudes.entries().end());
  return out;
}

void Personality::validate() const {
  for (double trait : {openness, conscientiousness, extraversion, agreeableness,
                       neuroticism}) {
    if (!(trait >= 0.0 && trait <= 1.0)) {
      throw ValidationError("personality trait out of [0,1]: " +
                            std::to_string(trait));
    }
  }
}

AffectVector update_emotions(const DetectedAffects& detected,
                             const ExpectedAffects& expected,
                             const IntervieweeLabelSet& labels) {
  if (detected.turn_index != expected.turn_index) {
    throw ContractError("detected/expected turn_index mismatch: " +
                        std::to_string(detected.turn_index) + " vs " +
                        std::to_string(expected.turn_index));
  }
  labels.validate(expected.entries);
  labels.validate(detected.emotions);
  labels.validate(detected.moods);
  labels.validate(detected.attitudes);

  AffectVector out;
  for (const auto& [label, v_e] : expected.entries.entries()) {
    const double v_d = detected.value(label);
    const Valence valence = labels.find(label)->valence;
    if (valence == Valence::Positive) {
      if (v_d >= v_e) {
        out.raise("joy", v_d);
      } else {
        out.raise("disappointment", v_e - v_d);
      }
    } else {
      if (v_d >= v_e) {
        out.raise("distress", v_d);
      } else {
        out.raise("relief", v_e - v_d);
      }
    }
  }
  // A strongly expressed negative affect angers the recruiter no matter what
  // was expected.
  for (const auto& [label, v_d] : detected.all_entries()) {
    if (labels.find(label)->valence == Valence::Negative && v_d > 0.8) {
      out.raise("anger", v_d - 0.5);
    }
  }
  return out;
}

AffectVector update_mood(const AffectVector& previous_moods,
                         const AffectVector& emotions, double alpha) {
  for (const auto& [label, value] : previous_moods.entries()) {
    if (!is_recruiter_mood(label)) {
      throw ValidationError("'" + label + "' is not a recruiter mood");
    }
  }
  for (const auto& [label, value] : emotions.entries()) {
    if (!is_recruiter_emotion(label)) {
      throw ValidationError("'" + label + "' is not a recruiter emotion");
    }
  }

  // Emotion -> mood drive, ALMA style. Each mood tracks the strongest of its
  // mapped emotions.
  static const std::map<std::string, std::vector<std::string>> drives = {
      {"hostile", {"anger", "fear"}},
      {"exuberant", {"joy", "admiration"}},
      {"relaxed", {"relief", "hope"}},
      {"disdainful", {"disappointment"}},
  };

  bool all_quiet = true;
  for (const auto& [label, value] : emotions.entries()) {
    if (value >= kQuietEmotionLevel) all_quiet = false;
  }

  AffectVector out;
  for (const auto& info : recruiter_labels()) {
    if (info.kind != AffectKind::Mood) continue;
    double target = 0.0;
    if (info.name == "bored") {
      target = all_quiet ? 1.0 : 0.0;
    } else {
      for (const auto& emotion : drives.at(info.name)) {
        target = std::max(target, emotions.get(emotion));
      }
    }
    const double old = previous_moods.get(info.name);
    out.set(info.name, old + alpha * (target - old));
  }
  return out;
}

}  // namespace attisim
