#include "pdtc/audit.hpp"

#include <algorithm>

namespace pdtc {

std::string_view json_key(InconsistencyClass cls) {
  switch (cls) {
    case InconsistencyClass::full_match: return "fullMatch";
    case InconsistencyClass::unique_lemma_comment_change: return "uniqueLemmaCommentChange";
    case InconsistencyClass::unique_lemma_sense_change: return "uniqueLemmaSenseChange";
    case InconsistencyClass::unique_lemma_tag_change: return "uniqueLemmaTagChange";
    case InconsistencyClass::unique_rest: return "uniqueRest";
    case InconsistencyClass::multiple_lemma_comment_change: return "multipleLemmaCommentChange";
    case InconsistencyClass::multiple_lemma_sense_change: return "multipleLemmaSenseChange";
    case InconsistencyClass::multiple_lemma_tag_change: return "multipleLemmaTagChange";
    case InconsistencyClass::multiple_rest: return "multipleRest";
    case InconsistencyClass::no_analysis: return "noAnalysis";
  }
  return "?";
}

std::string_view label(InconsistencyClass cls) {
  switch (cls) {
    case InconsistencyClass::full_match: return "Full matches";
    case InconsistencyClass::unique_lemma_comment_change: return "Unique lemma, comment change";
    case InconsistencyClass::unique_lemma_sense_change: return "Unique lemma, sense change";
    case InconsistencyClass::unique_lemma_tag_change: return "Unique, tag change";
    case InconsistencyClass::unique_rest: return "Unique rest";
    case InconsistencyClass::multiple_lemma_comment_change: return "Multiple lemma, comment change";
    case InconsistencyClass::multiple_lemma_sense_change: return "Multiple lemma, sense change";
    case InconsistencyClass::multiple_lemma_tag_change: return "Multiple, tag change";
    case InconsistencyClass::multiple_rest: return "Multiple rest";
    case InconsistencyClass::no_analysis: return "No analysis";
  }
  return "?";
}

namespace {

struct TokenKey {
  std::string full;
  std::string suffix;
  const std::string& base;
  const std::optional<unsigned>& index;

  explicit TokenKey(const Lemma& lemma)
      : full(lemma.serialize()),
        suffix(lemma.technical_suffix()),
        base(lemma.base()),
        index(lemma.index()) {}
};

enum Predicate : unsigned {
  k_full_match = 1u << 0,
  k_comment_change = 1u << 1,
  k_sense_change = 1u << 2,
  k_tag_change = 1u << 3,
};

unsigned predicates(const TokenKey& token, const PosTag& token_tag, const Analysis& analysis) {
  const Paradigm& p = *analysis.paradigm;
  bool same_tag = analysis.tag == token_tag;
  bool same_full = p.lemma_text == token.full;
  bool same_base = p.lemma.base() == token.base;
  bool same_index = p.lemma.index() == token.index;

  unsigned bits = 0;
  if (same_full && same_tag) bits |= k_full_match;
  if (same_tag && same_base && same_index && p.technical_suffix != token.suffix)
    bits |= k_comment_change;
  if (same_tag && same_base && !same_index) bits |= k_sense_change;
  if (same_full && !same_tag) bits |= k_tag_change;
  return bits;
}

struct PredicateCounts {
  std::size_t full_match = 0, comment_change = 0, sense_change = 0, tag_change = 0;
};

InconsistencyClass decide(const PredicateCounts& c, std::size_t analyses) {
  using C = InconsistencyClass;
  if (analyses == 0) return C::no_analysis;
  if (c.full_match > 0) return C::full_match;
  if (c.comment_change == 1) return C::unique_lemma_comment_change;
  if (c.sense_change == 1) return C::unique_lemma_sense_change;
  if (c.tag_change == 1) return C::unique_lemma_tag_change;
  if (analyses == 1) return C::unique_rest;
  if (c.comment_change >= 2) return C::multiple_lemma_comment_change;
  if (c.sense_change >= 2) return C::multiple_lemma_sense_change;
  if (c.tag_change >= 2) return C::multiple_lemma_tag_change;
  return C::multiple_rest;
}

}  // namespace

InconsistencyClass classify(const TokenAnalysis& token, const Dictionary& dict) {
  auto analyses = dict.analyses(token.form);
  if (analyses.empty()) return InconsistencyClass::no_analysis;

  TokenKey key(token.lemma);
  PredicateCounts counts;
  for (const auto& analysis : analyses) {
    unsigned bits = predicates(key, token.tag, analysis);
    if (bits & k_full_match) return InconsistencyClass::full_match;
    counts.comment_change += (bits & k_comment_change) ? 1 : 0;
    counts.sense_change += (bits & k_sense_change) ? 1 : 0;
    counts.tag_change += (bits & k_tag_change) ? 1 : 0;
  }
  return decide(counts, analyses.size());
}

Explanation explain(const TokenAnalysis& token, const Dictionary& dict) {
  auto analyses = dict.analyses(token.form);
  Explanation out{InconsistencyClass::no_analysis, analyses.size(), {}, {}, {}, {}};

  TokenKey key(token.lemma);
  for (const auto& analysis : analyses) {
    unsigned bits = predicates(key, token.tag, analysis);
    if (bits & k_full_match) out.full_match.push_back(analysis);
    if (bits & k_comment_change) out.comment_change.push_back(analysis);
    if (bits & k_sense_change) out.sense_change.push_back(analysis);
    if (bits & k_tag_change) out.tag_change.push_back(analysis);
  }
  PredicateCounts counts{out.full_match.size(), out.comment_change.size(),
                         out.sense_change.size(), out.tag_change.size()};
  out.result = decide(counts, analyses.size());
  return out;
}

std::int64_t percent_hundredths(std::uint64_t count, std::uint64_t total) {
  if (total == 0) return 0;
  // round(count * 10000 / total), halves rounded up
  return static_cast<std::int64_t>((count * 20000 + total) / (2 * total));
}

std::string format_percent(std::int64_t hundredths) {
  auto frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(hundredths / 100) + "." + frac;
}

void AuditReport::add(InconsistencyClass cls, const TokenLocation& location) {
  ++total_;
  ++counts_[index(cls)];
  auto& samples = samples_[index(cls)];
  if (samples.size() < sample_cap_) samples.push_back(location);
}

void AuditReport::merge(const AuditReport& other) {
  total_ += other.total_;
  for (std::size_t i = 0; i < k_class_count; ++i) {
    counts_[i] += other.counts_[i];
    auto& mine = samples_[i];
    for (const auto& location : other.samples_[i]) {
      if (mine.size() >= sample_cap_) break;
      mine.push_back(location);
    }
  }
}

AuditReport audit_corpus(std::istream& corpus, const Dictionary& dict, std::size_t sample_cap) {
  AuditReport report(sample_cap);
  CorpusReader reader(corpus);
  while (auto token = reader.next()) report.add(classify(*token, dict), token->location);
  return report;
}

}  // namespace pdtc
