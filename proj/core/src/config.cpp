#include "attisim/config.hpp"

#include <fstream>

#include <json.hpp>

namespace attisim {

namespace {

AffectKind kind_from_string(const std::string& s) {
  if (s == "emotion") return AffectKind::Emotion;
  if (s == "mood") return AffectKind::Mood;
  if (s == "attitude") return AffectKind::Attitude;
  throw ValidationError("unknown affect kind '" + s + "' in config");
}

Valence valence_from_string(const std::string& s) {
  if (s == "positive") return Valence::Positive;
  if (s == "negative") return Valence::Negative;
  throw ValidationError("unknown valence '" + s + "' in config");
}

}  // namespace

AppConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config " + path.string() + ": " + e.what());
  }

  AppConfig cfg;
  if (doc.contains("rule")) {
    cfg.rule.threshold = doc["rule"].value("threshold", cfg.rule.threshold);
    cfg.rule.validate();
  }
  if (doc.contains("mood")) {
    cfg.mood_alpha = doc["mood"].value("alpha", cfg.mood_alpha);
    if (!(cfg.mood_alpha > 0.0 && cfg.mood_alpha <= 1.0)) {
      throw ValidationError("mood alpha must lie in (0,1]");
    }
  }
  if (doc.contains("placements")) {
    for (const auto& [label, angle] : doc["placements"].items()) {
      cfg.placement_angles[label] = angle.get<double>();
    }
    cfg.placements();  // validates coverage
  }
  if (doc.contains("variation")) {
    const auto& v = doc["variation"];
    cfg.variation.min_delta = v.value("min_delta", cfg.variation.min_delta);
    cfg.variation.stability = v.value("stability", cfg.variation.stability);
    cfg.variation.smoothing_window =
        v.value("smoothing_window", cfg.variation.smoothing_window);
    cfg.variation.max_lookback = v.value("max_lookback", cfg.variation.max_lookback);
  }
  if (doc.contains("miner")) {
    const auto& m = doc["miner"];
    cfg.miner.min_support = m.value("min_support", cfg.miner.min_support);
    cfg.miner.max_pattern_length =
        m.value("max_pattern_length", cfg.miner.max_pattern_length);
    cfg.miner.validate();
  }
  if (doc.contains("planner")) {
    const auto& p = doc["planner"];
    cfg.planner.dead_zone = p.value("dead_zone", cfg.planner.dead_zone);
    cfg.planner.decay_window = p.value("decay_window", cfg.planner.decay_window);
  }
  if (doc.contains("interviewee_labels")) {
    IntervieweeLabelSet set;
    for (const auto& entry : doc["interviewee_labels"]) {
      set.add(entry.at("name").get<std::string>(),
              kind_from_string(entry.at("kind").get<std::string>()),
              valence_from_string(entry.at("valence").get<std::string>()));
    }
    cfg.interviewee = std::move(set);
  }
  return cfg;
}

}  // namespace attisim
