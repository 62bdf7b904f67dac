#include "attisim/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace attisim {

MinedPatternFile run_mine(const std::filesystem::path& corpus_path,
                          const AppConfig& config,
                          const std::filesystem::path& out_path) {
  const auto interactions = parse_corpus(corpus_path);
  if (interactions.empty()) {
    throw ValidationError("corpus " + corpus_path.string() + " holds no interactions");
  }

  // Detect variation events per interaction and dimension.
  struct TaggedEvents {
    std::size_t interaction;
    Dimension dimension;
    std::vector<std::size_t> event_indices;  // into the global event list
  };
  std::vector<VariationEvent> events;
  std::vector<TaggedEvents> tags;
  for (std::size_t i = 0; i < interactions.size(); ++i) {
    for (Dimension dim : {Dimension::Friendliness, Dimension::Dominance}) {
      const AttitudeCurve smoothed =
          smooth_curve(interactions[i].curve(dim), config.variation.smoothing_window);
      auto detected = detect_variation_events(smoothed, config.variation.min_delta,
                                              config.variation.stability);
      TaggedEvents tag{i, dim, {}};
      for (auto& event : detected) {
        tag.event_indices.push_back(events.size());
        events.push_back(event);
      }
      tags.push_back(std::move(tag));
    }
  }

  MinedPatternFile result;
  result.centroids = cluster_variations(events, 4);

  // Segment each interaction against its own events, pooled per class.
  std::map<Dimension, std::map<VariationKind, std::vector<SignalSequence>>> pooled;
  for (const auto& tag : tags) {
    std::vector<VariationEvent> local;
    for (std::size_t idx : tag.event_indices) local.push_back(events[idx]);
    std::sort(local.begin(), local.end(),
              [](const VariationEvent& a, const VariationEvent& b) {
                return a.timestamp < b.timestamp;
              });
    const auto segments = segment_interaction(interactions[tag.interaction], local,
                                              config.variation.max_lookback);
    for (const auto& segment : segments) {
      if (!segment.terminating_event.cluster) continue;
      pooled[tag.dimension][*segment.terminating_event.cluster].push_back(
          segment.sequence);
    }
  }

  for (const auto& [dimension, by_class] : pooled) {
    std::vector<SignalSequence> all;
    for (const auto& [kind, segments] : by_class) {
      all.insert(all.end(), segments.begin(), segments.end());
    }
    if (all.empty()) continue;
    const auto frequent = gsp_mine(all, config.miner);
    std::vector<Pattern> patterns;
    for (const auto& fp : frequent) patterns.push_back(fp.pattern);
    const auto scored = score_patterns(patterns, dimension, by_class);
    result.records.insert(result.records.end(), scored.begin(), scored.end());
  }

  write_pattern_file(out_path, result);
  return result;
}

std::vector<TurnTrace> run_simulate(
    const std::filesystem::path& scenario_path,
    const std::filesystem::path& patterns_path, const AppConfig& config,
    const std::optional<std::filesystem::path>& trace_csv_path,
    std::ostream& trace_text, std::istream* interactive_input,
    std::ostream* prompt) {
  const Scenario scenario = parse_scenario(scenario_path, config.interviewee);
  const MinedPatternFile patterns = read_pattern_file(patterns_path);

  SimulationOptions options;
  options.config = config;
  options.interactive_input = interactive_input;
  options.prompt = prompt;
  const auto traces = run_simulation(scenario, patterns, options);

  write_trace_text(trace_text, traces);
  if (trace_csv_path) {
    std::ofstream csv(*trace_csv_path, std::ios::binary);
    if (!csv) {
      throw ValidationError("cannot write trace file " + trace_csv_path->string());
    }
    write_trace_csv(csv, traces);
  }
  return traces;
}

namespace {

AttitudeCurve parse_reference_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  const std::string file = path.string();
  if (!in) throw ParseError(file, 0, "cannot open reference file");

  AttitudeCurve curve;
  curve.dimension = Dimension::Friendliness;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    if (keyword == "interaction") continue;  // corpus files work as references
    if (keyword != "attitude") {
      throw ParseError(file, line_no, "unknown record '" + keyword + "'");
    }
    std::string dim_token;
    CurveSample sample;
    if (!(tokens >> dim_token >> sample.time >> sample.value)) {
      throw ParseError(file, line_no, "expected: attitude <dimension> <t> <value>");
    }
    if (dim_token != "friendliness") continue;
    if (!curve.samples.empty() && sample.time <= curve.samples.back().time) {
      throw ParseError(file, line_no, "timestamps must be strictly increasing");
    }
    curve.samples.push_back(sample);
  }
  if (curve.samples.empty()) {
    throw ParseError(file, 0, "reference holds no friendliness samples");
  }
  return curve;
}

}  // namespace

CompareReport run_compare(const std::filesystem::path& trace_csv_path,
                          const std::filesystem::path& reference_path,
                          std::ostream& report_out) {
  const auto traces = read_trace_csv(trace_csv_path);
  const auto reference = parse_reference_curve(reference_path);
  const auto report = compare_traces(traces, reference);
  write_compare_report(report_out, report);
  return report;
}

}  // namespace attisim
