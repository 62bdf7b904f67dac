#include "attisim/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace attisim {

std::string to_string(Modality m) {
  switch (m) {
    case Modality::Gaze: return "gaze";
    case Modality::Head: return "head";
    case Modality::Eyebrow: return "eyebrow";
    case Modality::Mouth: return "mouth";
    case Modality::Gesture: return "gesture";
    case Modality::Posture: return "posture";
  }
  return "?";
}

std::optional<Modality> modality_from_string(const std::string& s) {
  if (s == "gaze") return Modality::Gaze;
  if (s == "head") return Modality::Head;
  if (s == "eyebrow") return Modality::Eyebrow;
  if (s == "mouth") return Modality::Mouth;
  if (s == "gesture") return Modality::Gesture;
  if (s == "posture") return Modality::Posture;
  return std::nullopt;
}

int modality_priority(Modality m) { return static_cast<int>(m); }

std::string to_string(Dimension d) {
  return d == Dimension::Friendliness ? "friendliness" : "dominance";
}

std::optional<Dimension> dimension_from_string(const std::string& s) {
  if (s == "friendliness") return Dimension::Friendliness;
  if (s == "dominance") return Dimension::Dominance;
  return std::nullopt;
}

std::string to_string(VariationKind k) {
  switch (k) {
    case VariationKind::LargeDecrease: return "large-decrease";
    case VariationKind::SmallDecrease: return "small-decrease";
    case VariationKind::SmallIncrease: return "small-increase";
    case VariationKind::LargeIncrease: return "large-increase";
  }
  return "?";
}

std::optional<VariationKind> variation_kind_from_string(const std::string& s) {
  if (s == "large-decrease") return VariationKind::LargeDecrease;
  if (s == "small-decrease") return VariationKind::SmallDecrease;
  if (s == "small-increase") return VariationKind::SmallIncrease;
  if (s == "large-increase") return VariationKind::LargeIncrease;
  return std::nullopt;
}

const SignalVocabulary& SignalVocabulary::defaults() {
  static const SignalVocabulary vocab = [] {
    SignalVocabulary v;
    v.add("EyesAt", Modality::Gaze);
    v.add("EyesAway", Modality::Gaze);
    v.add("HeadAt", Modality::Head);
    v.add("HeadAway", Modality::Head);
    v.add("HeadShake", Modality::Head);
    v.add("HeadNod", Modality::Head);
    v.add("EyebrowUp", Modality::Eyebrow);
    v.add("EyebrowDown", Modality::Eyebrow);
    v.add("Smile", Modality::Mouth);
    v.add("MouthTight", Modality::Mouth);
    v.add("GestComm", Modality::Gesture);
    v.add("GestAdaptor", Modality::Gesture);
    v.add("PostureLeanBack", Modality::Posture);
    v.add("PostureLeanFront", Modality::Posture);
    v.add("PostureStraight", Modality::Posture);
    return v;
  }();
  return vocab;
}

void SignalVocabulary::add(const std::string& label, Modality modality) {
  labels_[label] = modality;
}

std::optional<Modality> SignalVocabulary::find(const std::string& label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

namespace {

void finalize_interaction(InteractionAnnotation& ann, const std::string& file) {
  // Same-modality events must not overlap.
  std::vector<const SignalEvent*> by_modality[6];
  for (const auto& ev : ann.signals) {
    by_modality[static_cast<int>(ev.modality)].push_back(&ev);
  }
  std::ostringstream offenders;
  for (auto& events : by_modality) {
    std::sort(events.begin(), events.end(),
              [](const SignalEvent* a, const SignalEvent* b) {
                return a->start < b->start;
              });
    for (std::size_t i = 1; i < events.size(); ++i) {
      if (events[i]->start < events[i - 1]->end) {
        offenders << " [" << events[i - 1]->label << " " << events[i - 1]->start
                  << "-" << events[i - 1]->end << " vs " << events[i]->label
                  << " " << events[i]->start << "-" << events[i]->end << "]";
      }
    }
  }
  if (!offenders.str().empty()) {
    throw ValidationError("interaction '" + ann.id +
                          "' has overlapping same-modality events:" +
                          offenders.str());
  }
}

double parse_number(const std::string& token, const std::string& file, int line,
                    const std::string& what) {
  try {
    std::size_t pos = 0;
    double value = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(file, line, "bad " + what + " '" + token + "'");
  }
}

}  // namespace

std::vector<InteractionAnnotation> parse_corpus(
    const std::filesystem::path& path, const SignalVocabulary& vocabulary) {
  std::ifstream in(path);
  const std::string file = path.string();
  if (!in) throw ParseError(file, 0, "cannot open file");

  std::vector<InteractionAnnotation> out;
  InteractionAnnotation* current = nullptr;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;

    std::vector<std::string> args;
    for (std::string t; tokens >> t;) args.push_back(t);

    if (keyword == "interaction") {
      if (args.size() != 2) {
        throw ParseError(file, line_no, "expected: interaction <id> <duration>");
      }
      if (current) finalize_interaction(*current, file);
      InteractionAnnotation ann;
      ann.id = args[0];
      ann.duration = parse_number(args[1], file, line_no, "duration");
      if (ann.duration <= 0) throw ParseError(file, line_no, "duration must be positive");
      ann.friendliness.dimension = Dimension::Friendliness;
      ann.dominance.dimension = Dimension::Dominance;
      out.push_back(std::move(ann));
      current = &out.back();
    } else if (keyword == "signal") {
      if (!current) throw ParseError(file, line_no, "signal before any interaction header");
      if (args.size() != 4) {
        throw ParseError(file, line_no,
                         "expected: signal <modality> <label> <start> <end>");
      }
      auto modality = modality_from_string(args[0]);
      if (!modality) throw ParseError(file, line_no, "unknown modality '" + args[0] + "'");
      auto expected = vocabulary.find(args[1]);
      if (!expected) throw ParseError(file, line_no, "unknown signal label '" + args[1] + "'");
      if (*expected != *modality) {
        throw ParseError(file, line_no, "label '" + args[1] + "' belongs to modality " +
                                            to_string(*expected));
      }
      SignalEvent ev;
      ev.modality = *modality;
      ev.label = args[1];
      ev.start = parse_number(args[2], file, line_no, "start time");
      ev.end = parse_number(args[3], file, line_no, "end time");
      if (!(ev.start < ev.end)) throw ParseError(file, line_no, "event start must precede end");
      if (ev.start < 0 || ev.end > current->duration) {
        throw ParseError(file, line_no, "event outside [0, duration]");
      }
      current->signals.push_back(std::move(ev));
    } else if (keyword == "attitude") {
      if (!current) throw ParseError(file, line_no, "attitude before any interaction header");
      if (args.size() != 3) {
        throw ParseError(file, line_no,
                         "expected: attitude <dimension> <timestamp> <value>");
      }
      auto dimension = dimension_from_string(args[0]);
      if (!dimension) throw ParseError(file, line_no, "unknown dimension '" + args[0] + "'");
      CurveSample sample;
      sample.time = parse_number(args[1], file, line_no, "timestamp");
      sample.value = parse_number(args[2], file, line_no, "value");
      if (sample.time < 0 || sample.time > current->duration) {
        throw ParseError(file, line_no, "timestamp outside [0, duration]");
      }
      if (sample.value < -1.0 || sample.value > 1.0) {
        throw ParseError(file, line_no, "attitude value outside [-1,1]");
      }
      auto& curve = *dimension == Dimension::Friendliness ? current->friendliness
                                                          : current->dominance;
      if (!curve.samples.empty() && sample.time <= curve.samples.back().time) {
        throw ParseError(file, line_no, "attitude timestamps must be strictly increasing");
      }
      curve.samples.push_back(sample);
    } else {
      throw ParseError(file, line_no, "unknown record '" + keyword + "'");
    }
  }
  if (current) finalize_interaction(*current, file);
  return out;
}

AttitudeCurve smooth_curve(const AttitudeCurve& curve, double window) {
  if (window <= 0) throw ValidationError("smoothing window must be positive");
  AttitudeCurve out;
  out.dimension = curve.dimension;
  const auto& samples = curve.samples;
  const double half = window / 2.0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = samples[i].time;
    while (lo < samples.size() && samples[lo].time < t - half) ++lo;
    while (hi < samples.size() && samples[hi].time <= t + half) ++hi;
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) sum += samples[j].value;
    out.samples.push_back({t, sum / static_cast<double>(hi - lo)});
  }
  return out;
}

std::vector<VariationEvent> detect_variation_events(const AttitudeCurve& curve,
                                                    double min_delta,
                                                    double stability) {
  if (min_delta <= 0) throw ValidationError("min_delta must be positive");
  std::vector<VariationEvent> out;
  const auto& s = curve.samples;
  if (s.size() < 2) return out;

  std::size_t i = 0;
  while (i + 1 < s.size()) {
    const double first_diff = s[i + 1].value - s[i].value;
    if (first_diff == 0.0) {
      ++i;
      continue;
    }
    // Extend the maximal same-direction run starting at sample i.
    const bool rising = first_diff > 0.0;
    std::size_t j = i + 1;
    while (j + 1 < s.size()) {
      const double d = s[j + 1].value - s[j].value;
      if ((rising && d > 0.0) || (!rising && d < 0.0)) {
        ++j;
      } else {
        break;
      }
    }
    const double delta = s[j].value - s[i].value;
    if (std::abs(delta) >= min_delta) {
      // Stability: the curve stayed near the run-start value beforehand.
      bool stable = true;
      const double v0 = s[i].value;
      for (std::size_t k = i; k-- > 0;) {
        if (s[k].time < s[i].time - stability) break;
        if (std::abs(s[k].value - v0) > min_delta) {
          stable = false;
          break;
        }
      }
      if (stable) {
        VariationEvent ev;
        ev.timestamp = s[i + 1].time;  // where the value first departs
        ev.dimension = curve.dimension;
        ev.delta = delta;
        out.push_back(ev);
      }
    }
    i = j;
  }
  return out;
}

VariationClustering cluster_deltas(const std::vector<double>& deltas, int k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  const int n = static_cast<int>(deltas.size());
  if (n < k) {
    throw ValidationError(
        "fewer variation events (" + std::to_string(n) + ") than clusters (" +
        std::to_string(k) + "); merge more corpora before clustering");
  }

  std::vector<double> sorted = deltas;
  std::sort(sorted.begin(), sorted.end());

  // Quantile seeding keeps the run reproducible.
  std::vector<double> centroids(k);
  for (int c = 0; c < k; ++c) {
    const double q = (c + 0.5) / k;
    const double pos = q * (n - 1);
    const int lo = static_cast<int>(std::floor(pos));
    const int hi = std::min(lo + 1, n - 1);
    const double frac = pos - lo;
    centroids[c] = sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
  }

  std::vector<int> assignment(deltas.size(), 0);
  for (int iter = 0; iter < 10000; ++iter) {
    for (std::size_t p = 0; p < deltas.size(); ++p) {
      int best = 0;
      double best_dist = std::abs(deltas[p] - centroids[0]);
      for (int c = 1; c < k; ++c) {
        const double dist = std::abs(deltas[p] - centroids[c]);
        if (dist < best_dist) {
          best_dist = dist;
          best = c;
        }
      }
      assignment[p] = best;
    }
    std::vector<double> sums(k, 0.0);
    std::vector<int> counts(k, 0);
    for (std::size_t p = 0; p < deltas.size(); ++p) {
      sums[assignment[p]] += deltas[p];
      ++counts[assignment[p]];
    }
    double movement = 0.0;
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;  // empty cluster keeps its centroid
      const double updated = sums[c] / counts[c];
      movement = std::max(movement, std::abs(updated - centroids[c]));
      centroids[c] = updated;
    }
    if (movement < 1e-9) break;
  }

  if (k > 1) {
    double mean = 0.0;
    for (double c : centroids) mean += c;
    mean /= k;
    double between = 0.0;
    for (double c : centroids) between += (c - mean) * (c - mean);
    if (between == 0.0) {
      throw ValidationError("indistinct clusters: zero between-cluster variance");
    }
  }

  // Relabel clusters in ascending centroid order.
  std::vector<int> order(k);
  for (int c = 0; c < k; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return centroids[a] < centroids[b]; });
  std::vector<int> rank(k);
  for (int pos = 0; pos < k; ++pos) rank[order[pos]] = pos;

  VariationClustering result;
  result.centroids.resize(k);
  for (int c = 0; c < k; ++c) result.centroids[rank[c]] = centroids[c];
  result.assignment.resize(deltas.size());
  for (std::size_t p = 0; p < deltas.size(); ++p) {
    result.assignment[p] = rank[assignment[p]];
  }
  return result;
}

std::map<Dimension, std::vector<double>> cluster_variations(
    std::vector<VariationEvent>& events, int k) {
  std::map<Dimension, std::vector<double>> centroids;
  for (Dimension dim : {Dimension::Friendliness, Dimension::Dominance}) {
    std::vector<std::size_t> indices;
    std::vector<double> deltas;
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (events[i].dimension == dim) {
        indices.push_back(i);
        deltas.push_back(events[i].delta);
      }
    }
    if (deltas.empty()) continue;
    auto clustering = cluster_deltas(deltas, k);
    if (k == 4) {
      for (std::size_t i = 0; i < indices.size(); ++i) {
        events[indices[i]].cluster =
            static_cast<VariationKind>(clustering.assignment[i]);
      }
    }
    centroids[dim] = clustering.centroids;
  }
  return centroids;
}

std::vector<Segment> segment_interaction(const InteractionAnnotation& annotation,
                                         const std::vector<VariationEvent>& events,
                                         double max_lookback) {
  std::vector<const SignalEvent*> signals;
  for (const auto& ev : annotation.signals) signals.push_back(&ev);
  std::sort(signals.begin(), signals.end(),
            [](const SignalEvent* a, const SignalEvent* b) {
              if (a->start != b->start) return a->start < b->start;
              return modality_priority(a->modality) < modality_priority(b->modality);
            });

  std::vector<Segment> out;
  double previous_time = -std::numeric_limits<double>::infinity();
  for (const auto& event : events) {
    const double window_start =
        std::max(previous_time, event.timestamp - max_lookback);
    Segment segment;
    segment.terminating_event = event;
    for (const auto* signal : signals) {
      if (signal->start >= window_start && signal->start < event.timestamp) {
        segment.sequence.push_back(signal->label);
      }
    }
    out.push_back(std::move(segment));
    previous_time = event.timestamp;
  }
  return out;
}

}  // namespace attisim
