// Corpus/dictionary consistency audit.
//
// Each corpus token (form, lemma, tag) is compared with the dictionary's
// analyses of its form and assigned the first matching class of an ordered
// list of ten. Classes 2-4 and 6-8 count the analyses satisfying the class
// predicate; the "rest" classes 5 and 9 count all analyses of the form.
#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pdtc/corpus.hpp"
#include "pdtc/dictionary.hpp"

namespace pdtc {

enum class InconsistencyClass : int {
  full_match = 0,
  unique_lemma_comment_change,
  unique_lemma_sense_change,
  unique_lemma_tag_change,
  unique_rest,
  multiple_lemma_comment_change,
  multiple_lemma_sense_change,
  multiple_lemma_tag_change,
  multiple_rest,
  no_analysis,
};

inline constexpr std::size_t k_class_count = 10;

inline constexpr std::array<InconsistencyClass, k_class_count> k_all_classes{
    InconsistencyClass::full_match,
    InconsistencyClass::unique_lemma_comment_change,
    InconsistencyClass::unique_lemma_sense_change,
    InconsistencyClass::unique_lemma_tag_change,
    InconsistencyClass::unique_rest,
    InconsistencyClass::multiple_lemma_comment_change,
    InconsistencyClass::multiple_lemma_sense_change,
    InconsistencyClass::multiple_lemma_tag_change,
    InconsistencyClass::multiple_rest,
    InconsistencyClass::no_analysis,
};

/// Stable camelCase key used in JSON reports, e.g. "uniqueLemmaSenseChange".
std::string_view json_key(InconsistencyClass cls);
/// Row label used in human-readable reports, e.g. "Unique lemma, sense change".
std::string_view label(InconsistencyClass cls);

InconsistencyClass classify(const TokenAnalysis& token, const Dictionary& dict);

/// The evidence behind a classification: for each of the four analysis
/// predicates, the dictionary analyses satisfying it.
struct Explanation {
  InconsistencyClass result;
  std::size_t analysis_count;
  std::vector<Analysis> full_match;      // same full lemma, same tag
  std::vector<Analysis> comment_change;  // same tag, same lemma proper, other suffix
  std::vector<Analysis> sense_change;    // same tag, same base, other number
  std::vector<Analysis> tag_change;      // same full lemma, other tag
};

Explanation explain(const TokenAnalysis& token, const Dictionary& dict);

/// Percentage of `count` in `total` in hundredths, rounded half up.
std::int64_t percent_hundredths(std::uint64_t count, std::uint64_t total);
/// "12.34"
std::string format_percent(std::int64_t hundredths);

class AuditReport {
 public:
  explicit AuditReport(std::size_t sample_cap = 20) : sample_cap_(sample_cap) {}

  void add(InconsistencyClass cls, const TokenLocation& location);
  /// Folds in the report of the tokens that follow this report's tokens in
  /// the stream. Associative, so partitions of one stream can be audited
  /// separately and merged left to right with the same result as a single
  /// pass.
  void merge(const AuditReport& other);

  std::uint64_t total() const { return total_; }
  std::uint64_t count(InconsistencyClass cls) const { return counts_[index(cls)]; }
  std::int64_t percent_hundredths(InconsistencyClass cls) const {
    return pdtc::percent_hundredths(count(cls), total_);
  }
  const std::vector<TokenLocation>& samples(InconsistencyClass cls) const {
    return samples_[index(cls)];
  }
  std::size_t sample_cap() const { return sample_cap_; }

 private:
  static std::size_t index(InconsistencyClass cls) { return static_cast<std::size_t>(cls); }

  std::size_t sample_cap_;
  std::uint64_t total_ = 0;
  std::array<std::uint64_t, k_class_count> counts_{};
  std::array<std::vector<TokenLocation>, k_class_count> samples_;
};

/// Streams the corpus through classify(); the corpus is never held in
/// memory. Throws CorpusError on malformed input.
AuditReport audit_corpus(std::istream& corpus, const Dictionary& dict, std::size_t sample_cap = 20);

}  // namespace pdtc
