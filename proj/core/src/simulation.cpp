#include "attisim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "attisim/attitude_rules.hpp"
#include "number_format.hpp"

namespace attisim {

namespace {

std::pair<std::string, double> parse_assignment(const std::string& token,
                                                const std::string& file,
                                                int line_no) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size()) {
    throw ParseError(file, line_no, "expected label=value, got '" + token + "'");
  }
  try {
    std::size_t pos = 0;
    const double value = std::stod(token.substr(eq + 1), &pos);
    if (pos != token.size() - eq - 1) throw std::invalid_argument(token);
    return {token.substr(0, eq), value};
  } catch (const std::exception&) {
    throw ParseError(file, line_no, "bad value in '" + token + "'");
  }
}

const std::vector<std::string>& trace_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> out = {"turn", "question"};
    for (const auto& info : recruiter_labels()) out.push_back(info.name);
    out.push_back("friendliness");
    out.push_back("dominance");
    out.push_back("sequence");
    return out;
  }();
  return columns;
}

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::vector<double> default_centroids() { return {-0.8, -0.2, 0.2, 0.8}; }

}  // namespace

Scenario parse_scenario(const std::filesystem::path& path,
                        const IntervieweeLabelSet& labels) {
  std::ifstream in(path);
  const std::string file = path.string();
  if (!in) throw ParseError(file, 0, "cannot open scenario file");

  Scenario scenario;
  bool have_personality = false;
  Turn* current = nullptr;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;

    if (keyword == "personality") {
      Personality& p = scenario.personality;
      if (!(tokens >> p.openness >> p.conscientiousness >> p.extraversion >>
            p.agreeableness >> p.neuroticism)) {
        throw ParseError(file, line_no, "expected: personality <O> <C> <E> <A> <N>");
      }
      p.validate();
      have_personality = true;
    } else if (keyword == "moods") {
      for (std::string token; tokens >> token;) {
        auto [label, value] = parse_assignment(token, file, line_no);
        if (!is_recruiter_mood(label)) {
          throw ParseError(file, line_no, "'" + label + "' is not a recruiter mood");
        }
        scenario.initial_moods.set(label, value);
      }
    } else if (keyword == "turn") {
      Turn turn;
      if (!(tokens >> turn.question_id)) {
        throw ParseError(file, line_no, "expected: turn <question_id>");
      }
      scenario.turns.push_back(std::move(turn));
      current = &scenario.turns.back();
    } else if (keyword == "expected" || keyword == "detected") {
      if (!current) throw ParseError(file, line_no, keyword + " before any turn");
      std::vector<std::string> tokens_list;
      for (std::string token; tokens >> token;) tokens_list.push_back(token);
      if (keyword == "detected" && tokens_list.size() == 1 &&
          tokens_list[0] == "interactive") {
        current->interactive = true;
        continue;
      }
      AffectVector& target =
          keyword == "expected" ? current->expected : current->detected;
      for (const auto& token : tokens_list) {
        auto [label, value] = parse_assignment(token, file, line_no);
        if (!labels.find(label)) {
          throw ParseError(file, line_no, "unknown interviewee label '" + label + "'");
        }
        target.set(label, value);
      }
    } else {
      throw ParseError(file, line_no, "unknown record '" + keyword + "'");
    }
  }
  if (!have_personality) throw ParseError(file, 0, "scenario lacks a personality line");
  if (scenario.turns.empty()) throw ParseError(file, 0, "scenario has no turns");
  return scenario;
}

namespace {

AffectVector read_interactive_affects(const Turn& turn, int index,
                                      const SimulationOptions& options) {
  if (!options.interactive_input) {
    throw ValidationError("turn " + std::to_string(index) +
                          " is interactive but no input stream is attached");
  }
  if (options.prompt) {
    *options.prompt << "turn " << index << " (" << turn.question_id
                    << "): enter detected affects as label=value, blank line to finish\n"
                    << "labels:";
    for (const auto& name : options.config.interviewee.names()) {
      *options.prompt << " " << name;
    }
    *options.prompt << "\n> " << std::flush;
  }
  AffectVector detected;
  std::string line;
  while (std::getline(*options.interactive_input, line)) {
    std::istringstream tokens(line);
    std::string token;
    bool any = false;
    while (tokens >> token) {
      any = true;
      auto [label, value] = parse_assignment(token, "<stdin>", index);
      if (!options.config.interviewee.find(label)) {
        throw ValidationError("unknown interviewee label '" + label + "'");
      }
      detected.set(label, value);
    }
    if (!any) break;  // blank line ends the turn
    if (options.prompt) *options.prompt << "> " << std::flush;
  }
  return detected;
}

DetectedAffects split_by_kind(const AffectVector& flat,
                              const IntervieweeLabelSet& labels, int index) {
  DetectedAffects out;
  out.turn_index = index;
  for (const auto& [label, value] : flat.entries()) {
    const auto info = labels.find(label);
    if (!info) throw ValidationError("unknown interviewee label '" + label + "'");
    switch (info->kind) {
      case AffectKind::Emotion: out.emotions.set(label, value); break;
      case AffectKind::Mood: out.moods.set(label, value); break;
      case AffectKind::Attitude: out.attitudes.set(label, value); break;
    }
  }
  return out;
}

}  // namespace

std::vector<TurnTrace> run_simulation(const Scenario& scenario,
                                      const MinedPatternFile& patterns,
                                      const SimulationOptions& options) {
  const AppConfig& cfg = options.config;
  scenario.personality.validate();
  const PlacementTable placements = cfg.placements();

  std::map<Dimension, std::vector<double>> centroids = patterns.centroids;
  for (Dimension dim : {Dimension::Friendliness, Dimension::Dominance}) {
    if (!centroids.contains(dim)) centroids[dim] = default_centroids();
  }

  AffectVector moods = scenario.initial_moods;
  PlannerState planner_state;
  planner_state.config = cfg.planner;

  std::vector<TurnTrace> traces;
  for (std::size_t i = 0; i < scenario.turns.size(); ++i) {
    const Turn& turn = scenario.turns[i];
    const int index = static_cast<int>(i);
    try {
      const AffectVector detected_flat =
          turn.interactive ? read_interactive_affects(turn, index, options)
                           : turn.detected;
      const DetectedAffects detected =
          split_by_kind(detected_flat, cfg.interviewee, index);
      const ExpectedAffects expected{turn.expected, index};

      TurnTrace trace;
      trace.turn_index = index;
      trace.question_id = turn.question_id;
      trace.emotions = update_emotions(detected, expected, cfg.interviewee);
      moods = update_mood(moods, trace.emotions, cfg.mood_alpha);
      trace.moods = moods;
      trace.attitudes =
          compute_attitudes(moods, scenario.personality, cfg.rule);
      trace.point = aggregate(trace.attitudes, placements);

      const AttitudeDelta delta = attitude_delta(trace.point, planner_state);
      const TargetClasses classes =
          classify_delta(delta, centroids, cfg.planner.dead_zone);
      const SelectionResult selection =
          select_sequence(patterns.records, classes, planner_state);
      trace.chosen_sequence = selection.pattern;

      planner_state.previous_point = trace.point;
      planner_state.context.apply(selection.pattern);
      traces.push_back(std::move(trace));
    } catch (const ContractError&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError("turn " + std::to_string(index) + ": " + e.what());
    }
  }
  return traces;
}

void write_trace_csv(std::ostream& out, const std::vector<TurnTrace>& traces) {
  const auto& columns = trace_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << "\n";
  for (const auto& trace : traces) {
    out << trace.turn_index << "," << trace.question_id;
    for (const auto& info : recruiter_labels()) {
      double value = 0.0;
      switch (info.kind) {
        case AffectKind::Emotion: value = trace.emotions.get(info.name); break;
        case AffectKind::Mood: value = trace.moods.get(info.name); break;
        case AffectKind::Attitude: value = trace.attitudes.get(info.name); break;
      }
      out << "," << format_double(value);
    }
    out << "," << format_double(trace.point.friendliness) << ","
        << format_double(trace.point.dominance) << ","
        << pattern_key(trace.chosen_sequence) << "\n";
  }
}

void write_trace_text(std::ostream& out, const std::vector<TurnTrace>& traces) {
  for (const auto& trace : traces) {
    out << "turn " << trace.turn_index << " " << trace.question_id << "\n";
    auto dump = [&](const char* tag, const AffectVector& v) {
      out << "  " << tag << ":";
      for (const auto& [label, value] : v.entries()) {
        if (value > 0.0) out << " " << label << "=" << format_double(value);
      }
      out << "\n";
    };
    dump("emotions", trace.emotions);
    dump("moods", trace.moods);
    dump("attitudes", trace.attitudes);
    out << "  point: friendliness=" << format_double(trace.point.friendliness)
        << " dominance=" << format_double(trace.point.dominance) << "\n"
        << "  sequence: "
        << (trace.chosen_sequence.empty() ? "(none)"
                                          : pattern_key(trace.chosen_sequence))
        << "\n";
  }
}

std::vector<TurnTrace> read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  const std::string file = path.string();
  if (!in) throw ParseError(file, 0, "cannot open trace file");

  std::string line;
  if (!std::getline(in, line)) throw ParseError(file, 0, "empty trace file");
  std::vector<std::string> header;
  {
    std::istringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) header.push_back(cell);
  }
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError(file, 1, "missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t turn_col = column("turn");
  const std::size_t friendliness_col = column("friendliness");
  const std::size_t dominance_col = column("dominance");

  std::vector<TurnTrace> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() < header.size() - 1) {
      throw ParseError(file, line_no, "short row");
    }
    TurnTrace trace;
    try {
      trace.turn_index = std::stoi(cells.at(turn_col));
      trace.point.friendliness = std::stod(cells.at(friendliness_col));
      trace.point.dominance = std::stod(cells.at(dominance_col));
    } catch (const std::exception&) {
      throw ParseError(file, line_no, "bad numeric cell");
    }
    out.push_back(std::move(trace));
  }
  return out;
}

CompareReport compare_traces(const std::vector<TurnTrace>& traces,
                             const AttitudeCurve& reference) {
  if (traces.empty()) throw ValidationError("empty trace");

  auto reference_at = [&](double t) -> std::optional<double> {
    const auto& s = reference.samples;
    if (s.empty() || t < s.front().time || t > s.back().time) return std::nullopt;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (t <= s[i].time) {
        const double span = s[i].time - s[i - 1].time;
        const double frac = span > 0 ? (t - s[i - 1].time) / span : 0.0;
        return s[i - 1].value + frac * (s[i].value - s[i - 1].value);
      }
    }
    return s.back().value;
  };

  CompareReport report;
  int covered = 0;
  int agreed = 0;
  for (const auto& trace : traces) {
    CompareEntry entry;
    entry.turn_index = trace.turn_index;
    entry.trace_sign = sign_of(trace.point.friendliness);
    if (auto value = reference_at(static_cast<double>(trace.turn_index))) {
      entry.reference_sign = sign_of(*value);
      ++covered;
      if (entry.trace_sign == *entry.reference_sign) ++agreed;
    }
    report.entries.push_back(entry);
  }
  report.agreement = covered > 0 ? static_cast<double>(agreed) / covered : 0.0;
  return report;
}

void write_compare_report(std::ostream& out, const CompareReport& report) {
  auto show = [](int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); };
  for (const auto& entry : report.entries) {
    out << "turn " << entry.turn_index << ": trace " << show(entry.trace_sign);
    if (entry.reference_sign) {
      out << " reference " << show(*entry.reference_sign) << " "
          << (entry.trace_sign == *entry.reference_sign ? "agree" : "disagree");
    } else {
      out << " no reference";
    }
    out << "\n";
  }
  out << "agreement " << format_double(report.agreement) << "\n";
}

}  // namespace attisim
