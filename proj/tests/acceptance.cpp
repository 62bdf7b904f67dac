// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses independent oracles
// where the checked value is computable by a second route.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "attisim/attitude_rules.hpp"
#include "attisim/circumplex.hpp"
#include "attisim/pipeline.hpp"
#include "attisim/simulation.hpp"

using namespace attisim;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

// ---------------------------------------------------------------------------
// Shared random-dataset generator for criteria 1 and 2.

std::vector<SignalSequence> random_segments(std::mt19937& rng) {
  std::uniform_int_distribution<int> seg_count(1, 8);
  std::uniform_int_distribution<int> seg_len(0, 5);
  std::uniform_int_distribution<int> letter(0, 5);
  std::vector<SignalSequence> segments(seg_count(rng));
  for (auto& segment : segments) {
    const int len = seg_len(rng);
    for (int i = 0; i < len; ++i) {
      segment.push_back(std::string(1, static_cast<char>('a' + letter(rng))));
    }
  }
  return segments;
}

std::map<Pattern, double> brute_force_mine(
    const std::vector<SignalSequence>& segments, double min_support,
    std::size_t max_length) {
  std::set<Pattern> candidates;
  for (const auto& segment : segments) {
    const std::size_t n = segment.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      Pattern p;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) p.push_back(segment[i]);
      }
      if (p.size() <= max_length) candidates.insert(std::move(p));
    }
  }
  std::map<Pattern, double> out;
  for (const auto& p : candidates) {
    std::size_t hits = 0;
    for (const auto& segment : segments) {
      if (contains_subsequence(segment, p)) ++hits;
    }
    const double support = static_cast<double>(hits) / segments.size();
    if (support >= min_support) out[p] = support;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1: mining oracle equivalence on >= 1000 random datasets, < 60 s.

Check criterion_mining_oracle() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20250823);
  const double supports[] = {0.25, 0.5, 0.75};
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const auto segments = random_segments(rng);
    const double min_support = supports[trial % 3];
    const auto oracle = brute_force_mine(segments, min_support, 5);
    std::map<Pattern, double> mined;
    for (const auto& fp : gsp_mine(segments, {min_support, 5})) {
      mined[fp.pattern] = fp.support;
    }
    c.require(mined == oracle,
              "trial " + std::to_string(trial) + ": mined set diverges");
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  c.require(elapsed < 60.0,
            "runtime " + std::to_string(elapsed) + " s exceeds 60 s");
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 2: confidence/lift vs counting oracle within 1e-12;
// sum_c n(p,c) == n(p) always.

Check criterion_quality_measures() {
  Check c;
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> klass(0, 3);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const auto all = random_segments(rng);
    std::map<VariationKind, std::vector<SignalSequence>> by_class;
    for (const auto& segment : all) {
      by_class[static_cast<VariationKind>(klass(rng))].push_back(segment);
    }

    const auto mined = gsp_mine(all, {0.25, 5});
    std::vector<Pattern> patterns;
    for (const auto& fp : mined) patterns.push_back(fp.pattern);
    const auto stats =
        score_patterns(patterns, Dimension::Friendliness, by_class);

    std::map<std::string, std::size_t> class_hits_sum;
    for (const auto& r : stats) {
      std::size_t n_pc = 0;
      for (const auto& segment : by_class.at(r.kind)) {
        if (contains_subsequence(segment, r.pattern)) ++n_pc;
      }
      std::size_t n_p = 0;
      for (const auto& segment : all) {
        if (contains_subsequence(segment, r.pattern)) ++n_p;
      }
      const double prior =
          static_cast<double>(by_class.at(r.kind).size()) / all.size();
      const double conf = static_cast<double>(n_pc) / n_p;
      const double lift = conf / prior;
      const std::string key = pattern_key(r.pattern);
      c.require(std::abs(r.confidence - conf) <= 1e-12,
                "confidence mismatch for " + key);
      c.require(std::abs(r.lift - lift) <= 1e-12, "lift mismatch for " + key);
      c.require(std::abs(r.support -
                         static_cast<double>(n_pc) / all.size()) <= 1e-12,
                "support mismatch for " + key);
      class_hits_sum[key] += n_pc;
    }
    for (const auto& fp : mined) {
      std::size_t n_p = 0;
      for (const auto& segment : all) {
        if (contains_subsequence(segment, fp.pattern)) ++n_p;
      }
      c.require(class_hits_sum[pattern_key(fp.pattern)] == n_p,
                "class counts do not sum to the overall count for " +
                    pattern_key(fp.pattern));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 3: attitude-rule fidelity.

Check criterion_rule_fidelity() {
  Check c;

  // Worked example 1: agreeable personality alone drives friendly.
  {
    Personality p;
    p.agreeableness = 0.8;
    const auto out = compute_attitudes({}, p);
    c.require(std::abs(out.get("friendly") - 0.8) < 1e-12,
              "friendly example: expected 0.8");
  }
  // Worked example 2: hostile mood with low agreeableness drives aggression.
  {
    Personality p;
    p.agreeableness = 0.3;
    const auto out = compute_attitudes(AffectVector{{"hostile", 0.7}}, p);
    c.require(std::abs(out.get("aggressive") - 0.7) < 1e-12,
              "aggressive example: expected 0.7");
  }
  // Worked example 3: everything exactly at theta triggers nothing.
  {
    Personality p{0.5, 0.5, 0.5, 0.5, 0.5};
    AffectVector moods;
    for (const auto& info : recruiter_labels()) {
      if (info.kind == AffectKind::Mood) moods.set(info.name, 0.5);
    }
    const auto out = compute_attitudes(moods, p);
    for (const auto& [label, value] : out.entries()) {
      c.require(value == 0.0, "boundary: " + label + " fired at theta");
    }
  }

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10000 && c.ok; ++trial) {
    Personality p{unit(rng), unit(rng), unit(rng), unit(rng), unit(rng)};
    AffectVector moods;
    for (const auto& info : recruiter_labels()) {
      if (info.kind == AffectKind::Mood) moods.set(info.name, unit(rng));
    }
    const auto out = compute_attitudes(moods, p);
    for (const auto& [label, value] : out.entries()) {
      c.require(value >= 0.0 && value <= 1.0, label + " outside [0,1]");
    }
    if (p.agreeableness > 0.5) {
      c.require(out.get("friendly") > 0.0,
                "compensation: A > theta but friendly == 0");
    }
    if (moods.get("exuberant") > 0.5) {
      c.require(out.get("friendly") > 0.0,
                "compensation: exuberant > theta but friendly == 0");
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 4: sustained anger pushes hostile past 0.5 first at cycle 5.

Check criterion_mood_calibration() {
  Check c;
  AffectVector moods;
  const AffectVector emotions{{"anger", 1.0}};
  int crossing = 0;
  for (int cycle = 1; cycle <= 10; ++cycle) {
    moods = update_mood(moods, emotions);
    if (crossing == 0 && moods.get("hostile") >= 0.5) crossing = cycle;
  }
  c.require(crossing == 5,
            "hostile crossed 0.5 at cycle " + std::to_string(crossing));
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 5: circumplex homogeneity, cancellation, worked example.

Check criterion_circumplex() {
  Check c;
  const auto table = PlacementTable::defaults();

  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    AffectVector attitudes;
    for (const auto& info : recruiter_labels()) {
      if (info.kind == AffectKind::Attitude) attitudes.set(info.name, unit(rng));
    }
    const auto base = aggregate(attitudes, table);
    const double scale = unit(rng);
    AffectVector scaled;
    for (const auto& [label, value] : attitudes.entries()) {
      scaled.set(label, scale * value);
    }
    const auto out = aggregate(scaled, table);
    c.require(std::abs(out.friendliness - scale * base.friendliness) <= 1e-12 &&
                  std::abs(out.dominance - scale * base.dominance) <= 1e-12,
              "homogeneity violated");
  }

  const auto cancel = aggregate(
      AffectVector{{"supportive", 0.7}, {"inattentive", 0.7}}, table);
  c.require(std::abs(cancel.friendliness) <= 1e-12 &&
                std::abs(cancel.dominance) <= 1e-12,
            "opposite placements did not cancel");

  const auto worked = aggregate(
      AffectVector{{"friendly", 0.6}, {"aggressive", 0.6}}, table);
  c.require(std::abs(worked.friendliness - 0.0879) < 1e-4 &&
                std::abs(worked.dominance - 0.2121) < 1e-4,
            "worked example outside 1e-4");
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 6: 8-turn interview scenario sign/ordinal reproduction, < 1 s.

MinedPatternFile stock_patterns() {
  MinedPatternFile data;
  data.centroids[Dimension::Friendliness] = {-0.8, -0.2, 0.2, 0.8};
  data.centroids[Dimension::Dominance] = {-0.8, -0.2, 0.2, 0.8};
  const std::pair<Pattern, VariationKind> entries[] = {
      {{"EyesAt", "Smile"}, VariationKind::LargeIncrease},
      {{"HeadNod"}, VariationKind::SmallIncrease},
      {{"EyesAway"}, VariationKind::SmallDecrease},
      {{"EyesAway", "HeadShake"}, VariationKind::LargeDecrease},
  };
  for (const auto& [pattern, kind] : entries) {
    for (Dimension dim : {Dimension::Friendliness, Dimension::Dominance}) {
      PatternStats r;
      r.pattern = pattern;
      r.dimension = dim;
      r.kind = kind;
      r.support = 0.1;
      r.confidence = 0.5;
      r.lift = 1.5;
      data.records.push_back(r);
    }
  }
  return data;
}

Check criterion_interview_scenario() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  Scenario scenario;
  scenario.personality = {0.5, 0.5, 0.5, 0.49, 0.8};
  scenario.initial_moods.set("exuberant", 0.9);
  for (int i = 1; i <= 4; ++i) {
    scenario.turns.push_back({"q" + std::to_string(i),
                              AffectVector{{"joy", 0.6}},
                              AffectVector{{"joy", 0.8}}, false});
  }
  for (int i = 5; i <= 6; ++i) {
    scenario.turns.push_back({"q" + std::to_string(i),
                              AffectVector{{"joy", 0.6}},
                              AffectVector{{"distress", 0.9}}, false});
  }
  for (int i = 7; i <= 8; ++i) {
    scenario.turns.push_back({"q" + std::to_string(i),
                              AffectVector{{"distress", 0.7}},
                              AffectVector{{"distress", 0.9}}, false});
  }

  const auto traces = run_simulation(scenario, stock_patterns());
  c.require(traces.size() == 8, "expected 8 turn traces");
  if (c.ok) {
    for (int i = 0; i < 4; ++i) {
      c.require(traces[i].point.friendliness > 0.0,
                "turn " + std::to_string(i + 1) + " friendliness not positive");
    }
    for (int i = 4; i < 7; ++i) {
      c.require(traces[i + 1].point.friendliness <
                    traces[i].point.friendliness,
                "friendliness not strictly decreasing at turn " +
                    std::to_string(i + 2));
    }
    c.require(traces[7].point.friendliness < 0.0,
              "turn 8 friendliness not negative");
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  c.require(elapsed < 1.0, "scenario run exceeded 1 s");
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 7: planner Val arithmetic, repetition, feasibility.

Check criterion_planner() {
  Check c;
  auto stat = [](Pattern p, VariationKind kind, double conf, double lift) {
    PatternStats r;
    r.pattern = std::move(p);
    r.dimension = Dimension::Friendliness;
    r.kind = kind;
    r.confidence = conf;
    r.lift = lift;
    return r;
  };

  {
    const std::vector<PatternStats> stats = {
        stat({"p1"}, VariationKind::LargeDecrease, 0.727, 2.72),
        stat({"p2"}, VariationKind::LargeDecrease, 0.6, 5.38),
    };
    PlannerState state;
    const auto result = select_sequence(
        stats, {VariationKind::LargeDecrease, std::nullopt}, state);
    c.require(result.pattern == Pattern{"p2"}, "Val argmax picked the loser");
    c.require(std::abs(result.val - 3.228) < 1e-9,
              "Val 3.228 not reproduced");
  }
  {
    const std::vector<PatternStats> stats = {
        stat({"p1"}, VariationKind::SmallIncrease, 0.5, 2.0),
        stat({"p2"}, VariationKind::SmallIncrease, 0.5, 2.0),
    };
    PlannerState state;
    const TargetClasses target = {VariationKind::SmallIncrease, std::nullopt};
    const auto first = select_sequence(stats, target, state);
    const auto second = select_sequence(stats, target, state);
    c.require(first.pattern != second.pattern,
              "repetition penalty did not rotate equal-Val patterns");
  }
  {
    const std::vector<PatternStats> stats = {
        stat({"PostureLeanBack"}, VariationKind::LargeIncrease, 0.99, 9.0),
        stat({"HeadAt"}, VariationKind::LargeIncrease, 0.1, 1.0),
    };
    PlannerState state;
    state.context.posture = Posture::LeanBack;
    for (int turn = 0; turn < 20 && c.ok; ++turn) {
      const auto result = select_sequence(
          stats, {VariationKind::LargeIncrease, std::nullopt}, state);
      for (const auto& label : result.pattern) {
        c.require(label != "PostureLeanBack",
                  "lean-back selected while leaning back");
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 8: mine + simulate reruns are byte-identical.

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_synthetic_corpus(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  // Step curves sampled 2.5 s apart: the 2 s smoothing window leaves them
  // untouched, and each step is one detectable variation event.
  out << R"(interaction alpha 30
signal gaze EyesAt 1 1.5
signal mouth Smile 2 2.5
signal head HeadNod 3 3.5
signal gaze EyesAway 6 6.5
signal eyebrow EyebrowDown 7 7.5
signal mouth Smile 11 11.5
signal head HeadNod 12 12.5
signal gaze EyesAway 16 16.5
signal mouth MouthTight 17 17.5
signal head HeadShake 18 18.5
attitude friendliness 0 0
attitude friendliness 2.5 0
attitude friendliness 5 0.8
attitude friendliness 7.5 0.8
attitude friendliness 10 0.5
attitude friendliness 12.5 0.5
attitude friendliness 15 0.8
attitude friendliness 17.5 0.8
attitude friendliness 20 0
attitude friendliness 22.5 0
attitude dominance 0 0
attitude dominance 2.5 0
attitude dominance 5 -0.8
attitude dominance 7.5 -0.8
attitude dominance 10 -0.5
attitude dominance 12.5 -0.5
attitude dominance 15 -0.8
attitude dominance 17.5 -0.8
attitude dominance 20 0
attitude dominance 22.5 0
interaction beta 30
signal mouth Smile 1 1.5
signal gaze EyesAt 2 2.5
signal head HeadNod 3 3.5
signal gaze EyesAway 6 6.5
signal head HeadShake 7 7.5
signal gaze EyesAt 11 11.5
signal mouth Smile 12 12.5
signal gaze EyesAway 16 16.5
signal eyebrow EyebrowDown 17 17.5
signal head HeadShake 18 18.5
attitude friendliness 0 0
attitude friendliness 2.5 0
attitude friendliness 5 0.75
attitude friendliness 7.5 0.75
attitude friendliness 10 0.4
attitude friendliness 12.5 0.4
attitude friendliness 15 0.75
attitude friendliness 17.5 0.75
attitude friendliness 20 0
attitude friendliness 22.5 0
attitude dominance 0 0
attitude dominance 2.5 0
attitude dominance 5 -0.75
attitude dominance 7.5 -0.75
attitude dominance 10 -0.4
attitude dominance 12.5 -0.4
attitude dominance 15 -0.75
attitude dominance 17.5 -0.75
attitude dominance 20 0
attitude dominance 22.5 0
)";
}

void write_synthetic_scenario(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  out << R"(personality 0.5 0.5 0.5 0.49 0.8
moods exuberant=0.9
turn q1
expected joy=0.6
detected joy=0.8
turn q2
expected joy=0.6
detected joy=0.8
turn q3
expected joy=0.6
detected distress=0.9
turn q4
expected distress=0.7
detected distress=0.9
)";
}

Check criterion_pipeline_determinism() {
  Check c;
  const auto dir =
      std::filesystem::temp_directory_path() / "attisim_acceptance";
  std::filesystem::create_directories(dir);
  const auto corpus_path = dir / "corpus.txt";
  const auto scenario_path = dir / "scenario.txt";
  write_synthetic_corpus(corpus_path);
  write_synthetic_scenario(scenario_path);

  AppConfig config;
  std::string first_patterns, first_trace;
  for (int run = 0; run < 2; ++run) {
    const auto patterns_path =
        dir / ("patterns_" + std::to_string(run) + ".txt");
    const auto trace_path = dir / ("trace_" + std::to_string(run) + ".csv");
    run_mine(corpus_path, config, patterns_path);
    std::ostringstream sink;
    run_simulate(scenario_path, patterns_path, config, trace_path, sink);
    if (run == 0) {
      first_patterns = slurp(patterns_path);
      first_trace = slurp(trace_path);
      c.require(!first_patterns.empty(), "mined pattern file is empty");
      c.require(!first_trace.empty(), "trace file is empty");
    } else {
      c.require(slurp(patterns_path) == first_patterns,
                "pattern files differ between runs");
      c.require(slurp(trace_path) == first_trace,
                "trace files differ between runs");
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 9: four-mode clustering purity.

Check criterion_clustering_purity() {
  Check c;
  std::mt19937 rng(31337);
  const double means[] = {-0.8, -0.2, 0.2, 0.8};
  std::vector<VariationEvent> events;
  std::vector<int> mode_of;
  for (int mode = 0; mode < 4; ++mode) {
    std::normal_distribution<double> noise(means[mode], 0.02);
    for (int i = 0; i < 50; ++i) {
      VariationEvent ev;
      ev.timestamp = static_cast<double>(events.size());
      ev.dimension = Dimension::Friendliness;
      ev.delta = noise(rng);
      events.push_back(ev);
      mode_of.push_back(mode);
    }
  }
  cluster_variations(events, 4);
  for (std::size_t i = 0; i < events.size() && c.ok; ++i) {
    c.require(events[i].cluster.has_value(), "event left unlabelled");
    if (events[i].cluster) {
      c.require(static_cast<int>(*events[i].cluster) == mode_of[i],
                "impure cluster assignment at event " + std::to_string(i));
    }
  }
  return c;
}

}  // namespace

int main() {
  const std::pair<std::string, std::function<Check()>> criteria[] = {
      {"1 mining oracle equivalence (1000 random datasets)",
       criterion_mining_oracle},
      {"2 confidence/lift vs counting oracle", criterion_quality_measures},
      {"3 attitude-rule fidelity (examples + 10000 draws)",
       criterion_rule_fidelity},
      {"4 mood calibration: hostile crosses 0.5 at cycle 5",
       criterion_mood_calibration},
      {"5 circumplex homogeneity / cancellation / worked example",
       criterion_circumplex},
      {"6 interview scenario sign pattern over 8 turns",
       criterion_interview_scenario},
      {"7 planner Val / repetition / feasibility", criterion_planner},
      {"8 mine + simulate byte-identical reruns",
       criterion_pipeline_determinism},
      {"9 four-mode clustering purity", criterion_clustering_purity},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check result;
    try {
      result = fn();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (result.ok) {
      std::cout << "[PASS] criterion " << name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] criterion " << name << " — " << result.detail
                << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
