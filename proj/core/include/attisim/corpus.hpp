#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "attisim/errors.hpp"

namespace attisim {

enum class Modality { Gaze, Head, Eyebrow, Mouth, Gesture, Posture };

std::string to_string(Modality m);
std::optional<Modality> modality_from_string(const std::string& s);

/// Tie-break order for signals starting at the same instant.
int modality_priority(Modality m);

enum class Dimension { Friendliness, Dominance };

std::string to_string(Dimension d);
std::optional<Dimension> dimension_from_string(const std::string& s);

/// One annotated non-verbal signal.
struct SignalEvent {
  std::string label;
  Modality modality = Modality::Gaze;
  double start = 0.0;
  double end = 0.0;
};

struct CurveSample {
  double time = 0.0;
  double value = 0.0;
};

/// Time-ordered perceived-attitude annotation for one dimension.
struct AttitudeCurve {
  Dimension dimension = Dimension::Friendliness;
  std::vector<CurveSample> samples;
};

struct InteractionAnnotation {
  std::string id;
  double duration = 0.0;
  std::vector<SignalEvent> signals;
  AttitudeCurve friendliness;
  AttitudeCurve dominance;

  const AttitudeCurve& curve(Dimension d) const {
    return d == Dimension::Friendliness ? friendliness : dominance;
  }
};

/// Maps signal labels to their modality; parsing validates against it.
class SignalVocabulary {
 public:
  static const SignalVocabulary& defaults();

  void add(const std::string& label, Modality modality);
  std::optional<Modality> find(const std::string& label) const;

 private:
  std::map<std::string, Modality> labels_;
};

enum class VariationKind { LargeDecrease, SmallDecrease, SmallIncrease, LargeIncrease };

std::string to_string(VariationKind k);
std::optional<VariationKind> variation_kind_from_string(const std::string& s);

struct VariationEvent {
  double timestamp = 0.0;
  Dimension dimension = Dimension::Friendliness;
  double delta = 0.0;  // signed total change of the monotone run
  std::optional<VariationKind> cluster;
};

/// An ordered run of signal labels preceding one attitude variation.
struct Segment {
  std::vector<std::string> sequence;
  VariationEvent terminating_event;
};

/// Loads the canonical whitespace-delimited corpus format. A file may hold
/// several `interaction` blocks. Errors carry line numbers.
std::vector<InteractionAnnotation> parse_corpus(
    const std::filesystem::path& path,
    const SignalVocabulary& vocabulary = SignalVocabulary::defaults());

/// Centered moving average over samples within +-window/2; truncated at the
/// curve ends. Timestamps are preserved.
AttitudeCurve smooth_curve(const AttitudeCurve& curve, double window);

/// Finds the timestamps where the curve, stable for `stability` seconds
/// (within +-min_delta of the run-start value), begins a monotone change of
/// total magnitude >= min_delta. The event carries the signed total change.
std::vector<VariationEvent> detect_variation_events(const AttitudeCurve& curve,
                                                    double min_delta,
                                                    double stability);

struct VariationClustering {
  std::vector<double> centroids;   // ascending
  std::vector<int> assignment;     // index into centroids, per input value
};

/// Deterministic 1-D K-means: quantile-seeded centroids, Lloyd iterations to
/// convergence. Throws if there are fewer than k values, or if the clusters
/// are indistinct (zero between-cluster variance) for k > 1.
VariationClustering cluster_deltas(const std::vector<double>& deltas, int k);

/// Clusters each dimension's variation deltas (k = 4) and labels the events
/// large-decrease < small-decrease < small-increase < large-increase by
/// centroid order. Returns the per-dimension centroids.
std::map<Dimension, std::vector<double>> cluster_variations(
    std::vector<VariationEvent>& events, int k = 4);

/// Cuts one segment per event: signals starting in
/// [max(previous event time, t - max_lookback), t), ordered by start time with
/// modality-priority tie-breaking. Empty segments are kept.
std::vector<Segment> segment_interaction(const InteractionAnnotation& annotation,
                                         const std::vector<VariationEvent>& events,
                                         double max_lookback);

/// Detector and smoothing defaults; all of it is configuration.
struct VariationParams {
  double min_delta = 0.15;
  double stability = 2.0;
  double smoothing_window = 2.0;
  double max_lookback = 30.0;
};

}  // namespace attisim
