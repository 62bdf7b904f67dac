#include "attisim/seqmine.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "number_format.hpp"

namespace attisim {

std::string pattern_key(const Pattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "->";
    out += p[i];
  }
  return out;
}

Pattern pattern_from_key(const std::string& key) {
  Pattern out;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t next = key.find("->", pos);
    if (next == std::string::npos) {
      if (pos < key.size()) out.push_back(key.substr(pos));
      break;
    }
    out.push_back(key.substr(pos, next - pos));
    pos = next + 2;
  }
  return out;
}

bool contains_subsequence(const SignalSequence& sequence, const Pattern& pattern) {
  std::size_t matched = 0;
  for (const auto& item : sequence) {
    if (matched < pattern.size() && item == pattern[matched]) ++matched;
  }
  return matched == pattern.size();
}

void MinerConfig::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw ValidationError("min_support must lie in (0,1]");
  }
  if (max_pattern_length < 1) {
    throw ValidationError("max_pattern_length must be at least 1");
  }
}

namespace {

double count_support(const std::vector<SignalSequence>& segments,
                     const Pattern& pattern) {
  std::size_t hits = 0;
  for (const auto& segment : segments) {
    if (contains_subsequence(segment, pattern)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(segments.size());
}

}  // namespace

std::vector<FrequentPattern> gsp_mine(const std::vector<SignalSequence>& segments,
                                      const MinerConfig& cfg) {
  cfg.validate();
  if (segments.empty()) throw ValidationError("cannot mine an empty segment list");

  std::vector<FrequentPattern> result;

  // Level 1: every distinct label.
  std::set<std::string> alphabet;
  for (const auto& segment : segments) {
    alphabet.insert(segment.begin(), segment.end());
  }
  std::map<Pattern, double> frequent;  // current level, with supports
  for (const auto& label : alphabet) {
    const Pattern p = {label};
    const double support = count_support(segments, p);
    if (support >= cfg.min_support) frequent[p] = support;
  }

  for (std::size_t length = 1; !frequent.empty(); ++length) {
    for (const auto& [pattern, support] : frequent) {
      result.push_back({pattern, support});
    }
    if (length >= cfg.max_pattern_length) break;

    // Join: p and q with p[1:] == q[:-1] extend to p + q.back().
    std::map<Pattern, double> next;
    for (const auto& [p, p_support] : frequent) {
      for (const auto& [q, q_support] : frequent) {
        if (!std::equal(p.begin() + 1, p.end(), q.begin(), q.end() - 1)) continue;
        Pattern candidate = p;
        candidate.push_back(q.back());

        // Prune: every one-item-deleted subpattern must be frequent. Track
        // the tightest parent support for the anti-monotonicity check.
        bool pruned = false;
        double parent_bound = 1.0;
        for (std::size_t skip = 0; skip < candidate.size(); ++skip) {
          Pattern sub;
          for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != skip) sub.push_back(candidate[i]);
          }
          auto it = frequent.find(sub);
          if (it == frequent.end()) {
            pruned = true;
            break;
          }
          parent_bound = std::min(parent_bound, it->second);
        }
        if (pruned) continue;

        const double support = count_support(segments, candidate);
        if (support > parent_bound + 1e-12) {
          throw std::logic_error("support anti-monotonicity violated for " +
                                 pattern_key(candidate));
        }
        if (support >= cfg.min_support) next[std::move(candidate)] = support;
      }
    }
    frequent = std::move(next);
  }

  std::sort(result.begin(), result.end(),
            [](const FrequentPattern& a, const FrequentPattern& b) {
              if (a.pattern.size() != b.pattern.size())
                return a.pattern.size() < b.pattern.size();
              return a.pattern < b.pattern;
            });
  return result;
}

std::vector<PatternStats> score_patterns(
    const std::vector<Pattern>& patterns, Dimension dimension,
    const std::map<VariationKind, std::vector<SignalSequence>>& segments_by_class,
    std::vector<std::string>* warnings) {
  std::size_t total = 0;
  for (const auto& [kind, segments] : segments_by_class) total += segments.size();
  if (total == 0) throw ValidationError("no segments to score against");

  std::vector<PatternStats> out;
  for (const auto& pattern : patterns) {
    std::map<VariationKind, std::size_t> per_class;
    std::size_t overall = 0;
    for (const auto& [kind, segments] : segments_by_class) {
      std::size_t hits = 0;
      for (const auto& segment : segments) {
        if (contains_subsequence(segment, pattern)) ++hits;
      }
      per_class[kind] = hits;
      overall += hits;
    }
    if (overall == 0) continue;  // pattern never occurs in this dimension

    for (const auto& [kind, segments] : segments_by_class) {
      if (segments.empty()) {
        if (warnings) {
          warnings->push_back("class " + to_string(kind) + " (" +
                              to_string(dimension) +
                              ") has no segments; skipped");
        }
        continue;
      }
      PatternStats stats;
      stats.pattern = pattern;
      stats.dimension = dimension;
      stats.kind = kind;
      const double n_pc = static_cast<double>(per_class[kind]);
      stats.support = n_pc / static_cast<double>(total);
      stats.confidence = n_pc / static_cast<double>(overall);
      const double prior =
          static_cast<double>(segments.size()) / static_cast<double>(total);
      stats.lift = stats.confidence / prior;
      out.push_back(std::move(stats));
    }
  }
  return out;
}

namespace {

bool record_order(const PatternStats& a, const PatternStats& b) {
  if (a.dimension != b.dimension) return to_string(a.dimension) < to_string(b.dimension);
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.lift != b.lift) return a.lift > b.lift;
  return pattern_key(a.pattern) < pattern_key(b.pattern);
}

}  // namespace

void write_pattern_file(std::ostream& out, const MinedPatternFile& data) {
  for (const auto& [dimension, centroids] : data.centroids) {
    out << "centroids " << to_string(dimension);
    for (double c : centroids) out << " " << format_double(c);
    out << "\n";
  }
  std::vector<PatternStats> records = data.records;
  std::sort(records.begin(), records.end(), record_order);
  for (const auto& r : records) {
    out << "pattern " << to_string(r.dimension) << " " << to_string(r.kind)
        << " " << format_double(r.support) << " " << format_double(r.confidence)
        << " " << format_double(r.lift) << " " << pattern_key(r.pattern) << "\n";
  }
}

void write_pattern_file(const std::filesystem::path& path,
                        const MinedPatternFile& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write pattern file " + path.string());
  write_pattern_file(out, data);
}

MinedPatternFile read_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  const std::string file = path.string();
  if (!in) throw ParseError(file, 0, "cannot open pattern file");

  MinedPatternFile data;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    if (keyword == "centroids") {
      std::string dim_token;
      if (!(tokens >> dim_token)) throw ParseError(file, line_no, "missing dimension");
      auto dimension = dimension_from_string(dim_token);
      if (!dimension) throw ParseError(file, line_no, "unknown dimension '" + dim_token + "'");
      std::vector<double> centroids;
      for (double c; tokens >> c;) centroids.push_back(c);
      if (centroids.empty()) throw ParseError(file, line_no, "empty centroid list");
      data.centroids[*dimension] = std::move(centroids);
    } else if (keyword == "pattern") {
      std::string dim_token, class_token, key;
      PatternStats r;
      if (!(tokens >> dim_token >> class_token >> r.support >> r.confidence >>
            r.lift >> key)) {
        throw ParseError(file, line_no,
                         "expected: pattern <dim> <class> <sup> <conf> <lift> <seq>");
      }
      auto dimension = dimension_from_string(dim_token);
      if (!dimension) throw ParseError(file, line_no, "unknown dimension '" + dim_token + "'");
      auto kind = variation_kind_from_string(class_token);
      if (!kind) throw ParseError(file, line_no, "unknown variation class '" + class_token + "'");
      r.dimension = *dimension;
      r.kind = *kind;
      r.pattern = pattern_from_key(key);
      if (r.pattern.empty()) throw ParseError(file, line_no, "empty pattern");
      data.records.push_back(std::move(r));
    } else {
      throw ParseError(file, line_no, "unknown record '" + keyword + "'");
    }
  }
  return data;
}

}  // namespace attisim
