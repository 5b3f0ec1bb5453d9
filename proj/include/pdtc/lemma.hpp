// Structured lemmas: a headword with an optional homonym number, followed
// by a technical suffix of style flags and comments.
//
//   these_,a_^(^DD**teze)
//   ^^^^^ ^^^ ^^^^^^^^^^^
//   base  flag comment (variant reference to the basic-variant lemma "teze")
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdtc {

class LemmaError : public std::runtime_error {
 public:
  enum class Kind { empty_lemma, unterminated_comment, whitespace, bad_index };

  LemmaError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Headword plus homonym number, e.g. "stát-2".
struct LemmaProper {
  std::string base;
  std::optional<unsigned> index;

  static LemmaProper parse(std::string_view text);
  std::string text() const;

  friend bool operator==(const LemmaProper&, const LemmaProper&) = default;
  friend auto operator<=>(const LemmaProper&, const LemmaProper&) = default;
};

/// One `_`-introduced group that is not a comment. The body is everything
/// up to the next `_`; conventionally a marker character and a code
/// character (`_,a`), but any body is kept verbatim.
struct LemmaFlag {
  std::string body;

  char marker() const { return body.empty() ? '\0' : body.front(); }
  std::string_view code() const {
    return body.empty() ? std::string_view{} : std::string_view(body).substr(1);
  }

  friend bool operator==(const LemmaFlag&, const LemmaFlag&) = default;
};

struct VariantRef {
  std::string code;    // two characters, e.g. "DD"
  std::string target;  // lemma proper of the basic variant

  friend bool operator==(const VariantRef&, const VariantRef&) = default;
};

struct LemmaComment {
  std::string raw;  // text between `_^(` and the closing `)`
  std::optional<VariantRef> variant_ref;

  explicit LemmaComment(std::string raw_text);

  friend bool operator==(const LemmaComment&, const LemmaComment&) = default;
};

/// A suffix group is either a flag or a comment; order is significant.
struct SuffixGroup {
  enum class Type { flag, comment } type;
  std::size_t slot;  // index into Lemma::flags or Lemma::comments
};

class Lemma {
 public:
  static Lemma parse(std::string_view text);

  std::string serialize() const;

  const std::string& base() const { return base_; }
  const std::optional<unsigned>& index() const { return index_; }
  const std::vector<LemmaFlag>& flags() const { return flags_; }
  const std::vector<LemmaComment>& comments() const { return comments_; }

  LemmaProper proper() const { return {base_, index_}; }
  /// Flags and comments in their original order and spelling, including
  /// the leading `_`; empty when the lemma has none.
  std::string technical_suffix() const;

  friend bool operator==(const Lemma& a, const Lemma& b) {
    return a.serialize() == b.serialize();
  }

 private:
  std::string base_;
  std::optional<unsigned> index_;
  std::vector<LemmaFlag> flags_;
  std::vector<LemmaComment> comments_;
  std::vector<SuffixGroup> order_;
};

struct LemmaComparison {
  bool same_base;
  bool same_index;
  bool same_proper;
  bool same_technical_suffix;

  friend bool operator==(const LemmaComparison&, const LemmaComparison&) = default;
};

LemmaComparison compare(const Lemma& a, const Lemma& b);

}  // namespace pdtc
