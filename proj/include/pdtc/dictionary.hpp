// Morphological dictionary of lemma-tag-form triples grouped into
// paradigms, one paradigm per full lemma.
#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdtc/lemma.hpp"
#include "pdtc/tag.hpp"

namespace pdtc {

class DictionaryError : public std::runtime_error {
 public:
  enum class Kind { malformed_line, tag_decode, lemma_parse };

  DictionaryError(Kind kind, std::size_t line, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

struct ParadigmEntry {
  std::string form;
  PosTag tag;

  friend bool operator==(const ParadigmEntry&, const ParadigmEntry&) = default;
  friend auto operator<=>(const ParadigmEntry&, const ParadigmEntry&) = default;
};

struct Paradigm {
  Lemma lemma;
  std::string lemma_text;         // full serialized lemma, the paradigm key
  std::string technical_suffix;   // cached lemma.technical_suffix()
  std::set<ParadigmEntry> entries;
};

/// One analysis of a form: the paradigm it belongs to and its tag.
struct Analysis {
  const Paradigm* paradigm;
  PosTag tag;

  const Lemma& lemma() const { return paradigm->lemma; }
};

class Dictionary {
 public:
  Dictionary() = default;
  Dictionary(const Dictionary& other);
  Dictionary& operator=(const Dictionary& other);
  Dictionary(Dictionary&&) noexcept = default;
  Dictionary& operator=(Dictionary&&) noexcept = default;

  /// Parses `lemma TAB tag TAB form` lines. Blank lines and lines starting
  /// with '#' are skipped; exact duplicate triples are counted and dropped.
  static Dictionary load(std::istream& in);
  void save(std::ostream& out) const;

  /// Returns false if the triple was already present.
  bool insert(const Lemma& lemma, const PosTag& tag, std::string_view form);

  std::span<const Analysis> analyses(std::string_view form) const;

  const std::map<std::string, Paradigm, std::less<>>& paradigms() const { return paradigms_; }
  std::size_t form_count() const { return form_index_.size(); }
  std::size_t triple_count() const { return triples_; }
  std::size_t duplicates_dropped() const { return duplicates_; }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };

  std::map<std::string, Paradigm, std::less<>> paradigms_;
  std::unordered_map<std::string, std::vector<Analysis>, StringHash, std::equal_to<>> form_index_;
  std::size_t triples_ = 0;
  std::size_t duplicates_ = 0;
};

// ---------------------------------------------------------------------------
// check

struct DuplicateTagForm {
  std::string lemma;
  std::string tag;
  std::vector<std::string> forms;  // sorted, at least two
};

/// Homonym lemmas (same base, different numbers) that carry the same
/// POS / gender / aspect profile, so the number does not mark a formal
/// morphological difference.
struct NumberingAdvisory {
  std::string base;
  std::vector<std::string> lemmas;  // lemma-proper texts, sorted
};

struct CheckReport {
  std::vector<DuplicateTagForm> duplicate_tag_forms;
  std::vector<NumberingAdvisory> numbering_advisories;
};

CheckReport check(const Dictionary& dict, bool numbering_policy);

// ---------------------------------------------------------------------------
// diff

struct DictDiff {
  std::size_t old_paradigms = 0;
  std::size_t new_paradigms = 0;
  std::vector<std::string> removed;  // lemma-proper texts, sorted
  std::vector<std::string> added;
  std::vector<std::string> changed;
};

/// Paradigms are aligned by lemma proper, so a lemma whose comment changed
/// is reported as changed rather than removed and added.
DictDiff diff(const Dictionary& old_dict, const Dictionary& new_dict);

struct DictStats {
  std::size_t paradigms = 0;
  std::size_t forms = 0;
  std::size_t triples = 0;
};

DictStats stats(const Dictionary& dict);

}  // namespace pdtc
