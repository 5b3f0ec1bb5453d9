// Brute-force reference for the audit classifier. It recomputes the
// analyses of a form by scanning every paradigm (no form index) and
// evaluates the class predicates with lemma comparison facts, then walks
// the ordered class list literally.
#pragma once

#include <vector>

#include "pdtc/audit.hpp"

namespace pdtc::oracle {

struct Evidence {
  std::size_t analyses = 0;
  std::size_t full_match = 0;
  std::size_t comment_change = 0;
  std::size_t sense_change = 0;
  std::size_t tag_change = 0;
};

inline Evidence evidence(const TokenAnalysis& token, const Dictionary& dict) {
  Evidence ev;
  const auto token_text = token.lemma.serialize();
  for (const auto& [key, paradigm] : dict.paradigms()) {
    for (const auto& entry : paradigm.entries) {
      if (entry.form != token.form) continue;
      ++ev.analyses;
      auto facts = compare(paradigm.lemma, token.lemma);
      bool same_tag = entry.tag.encode() == token.tag.encode();
      bool same_complete = key == token_text;
      if (same_complete && same_tag) ++ev.full_match;
      if (same_tag && facts.same_proper && !facts.same_technical_suffix) ++ev.comment_change;
      if (same_tag && facts.same_base && !facts.same_index) ++ev.sense_change;
      if (same_complete && !same_tag) ++ev.tag_change;
    }
  }
  return ev;
}

inline InconsistencyClass classify(const Evidence& ev) {
  using C = InconsistencyClass;
  // (class, does it hold) in list order; the first that holds wins
  const std::pair<C, bool> order[] = {
      {C::full_match, ev.full_match > 0},
      {C::unique_lemma_comment_change, ev.comment_change == 1},
      {C::unique_lemma_sense_change, ev.sense_change == 1},
      {C::unique_lemma_tag_change, ev.tag_change == 1},
      {C::unique_rest, ev.analyses == 1},
      {C::multiple_lemma_comment_change, ev.comment_change >= 2},
      {C::multiple_lemma_sense_change, ev.sense_change >= 2},
      {C::multiple_lemma_tag_change, ev.tag_change >= 2},
      {C::multiple_rest, ev.analyses >= 2},
      {C::no_analysis, ev.analyses == 0},
  };
  for (const auto& [cls, holds] : order)
    if (holds) return cls;
  return C::no_analysis;
}

/// Whether the predicate of `cls` holds for the explanation's lists.
inline bool holds(InconsistencyClass cls, const Explanation& e) {
  using C = InconsistencyClass;
  switch (cls) {
    case C::full_match: return !e.full_match.empty();
    case C::unique_lemma_comment_change: return e.comment_change.size() == 1;
    case C::unique_lemma_sense_change: return e.sense_change.size() == 1;
    case C::unique_lemma_tag_change: return e.tag_change.size() == 1;
    case C::unique_rest: return e.analysis_count == 1;
    case C::multiple_lemma_comment_change: return e.comment_change.size() >= 2;
    case C::multiple_lemma_sense_change: return e.sense_change.size() >= 2;
    case C::multiple_lemma_tag_change: return e.tag_change.size() >= 2;
    case C::multiple_rest: return e.analysis_count >= 2;
    case C::no_analysis: return e.analysis_count == 0;
  }
  return false;
}

/// Classes earlier in the order than `result` whose predicate also holds;
/// empty when the ordered decision is sound.
inline std::vector<InconsistencyClass> earlier_holding(const Explanation& e) {
  std::vector<InconsistencyClass> out;
  for (auto cls : k_all_classes) {
    if (cls == e.result) break;
    if (holds(cls, e)) out.push_back(cls);
  }
  return out;
}

}  // namespace pdtc::oracle
