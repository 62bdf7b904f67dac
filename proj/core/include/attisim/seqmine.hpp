#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "attisim/corpus.hpp"

namespace attisim {

/// Ordered signal labels; occurrence in a segment is by (not necessarily
/// contiguous) subsequence matching.
using Pattern = std::vector<std::string>;
using SignalSequence = std::vector<std::string>;

std::string pattern_key(const Pattern& p);            // "a->b->c"
Pattern pattern_from_key(const std::string& key);

bool contains_subsequence(const SignalSequence& sequence, const Pattern& pattern);

struct MinerConfig {
  double min_support = 0.1;          // fraction of segments, in (0,1]
  std::size_t max_pattern_length = 8;

  void validate() const;
};

struct FrequentPattern {
  Pattern pattern;
  double support = 0.0;  // fraction of segments containing the pattern
};

/// Levelwise GSP: join k-frequent patterns sharing a (k-1)-overlap, prune
/// candidates with an infrequent one-item-deleted subpattern, count by
/// subsequence containment. Returns every pattern with support >= min_support
/// up to max_pattern_length, sorted by (length, labels).
std::vector<FrequentPattern> gsp_mine(const std::vector<SignalSequence>& segments,
                                      const MinerConfig& cfg);

struct PatternStats {
  Pattern pattern;
  Dimension dimension = Dimension::Friendliness;
  VariationKind kind = VariationKind::LargeDecrease;
  double support = 0.0;     // n(p,c) / |D|
  double confidence = 0.0;  // n(p,c) / n(p)
  double lift = 0.0;        // confidence / prior(c)
};

/// Scores each (pattern, class) pair against the union of the dimension's
/// classes. Patterns never occurring in the union are dropped; classes with
/// zero segments are skipped with a warning.
std::vector<PatternStats> score_patterns(
    const std::vector<Pattern>& patterns, Dimension dimension,
    const std::map<VariationKind, std::vector<SignalSequence>>& segments_by_class,
    std::vector<std::string>* warnings = nullptr);

/// Mined-pattern file: per-dimension centroid lines followed by one record per
/// PatternStats, sorted by (dimension, class, -lift).
struct MinedPatternFile {
  std::map<Dimension, std::vector<double>> centroids;
  std::vector<PatternStats> records;
};

void write_pattern_file(std::ostream& out, const MinedPatternFile& data);
void write_pattern_file(const std::filesystem::path& path,
                        const MinedPatternFile& data);
MinedPatternFile read_pattern_file(const std::filesystem::path& path);

}  // namespace attisim
