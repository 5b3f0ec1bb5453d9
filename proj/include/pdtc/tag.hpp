// Positional morphological tags: 15 single-character positions, each
// encoding one morphological category.
#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdtc {

inline constexpr std::size_t k_tag_length = 15;

/// Named positions of the tag, 1-based as in the tagset documentation.
enum class TagPosition : int {
  pos = 1,
  subpos = 2,
  gender = 3,
  number = 4,
  grammatical_case = 5,
  possessor_gender = 6,
  possessor_number = 7,
  person = 8,
  tense = 9,
  grade = 10,
  negation = 11,
  voice = 12,
  aspect = 13,
  aggregate = 14,
  variant = 15,
};

class TagError : public std::runtime_error {
 public:
  enum class Kind { wrong_length, illegal_character };

  TagError(Kind kind, std::size_t index, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind), index_(index) {}

  Kind kind() const { return kind_; }
  // For wrong_length: the declared length in characters. For
  // illegal_character: the 1-based position of the offending character.
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

/// A structurally valid tag. Construction goes through decode(), so an
/// existing PosTag always holds exactly 15 printable ASCII characters.
class PosTag {
 public:
  static PosTag decode(std::string_view text);

  std::string encode() const { return std::string(raw_.data(), raw_.size()); }
  std::string_view raw() const { return {raw_.data(), raw_.size()}; }

  // 1-based access; throws std::out_of_range outside 1..15.
  char at(int position) const;
  char at(TagPosition position) const { return at(static_cast<int>(position)); }

  friend bool operator==(const PosTag&, const PosTag&) = default;
  friend auto operator<=>(const PosTag&, const PosTag&) = default;

 private:
  PosTag() = default;
  std::array<char, k_tag_length> raw_{};
};

enum class VariantClass { none, standard, substandard, abbreviation, other };

/// Per-position value alphabets plus the lookup tables used by classify().
class TagsetSchema {
 public:
  // The schema shipped in data/tagset.json.
  static const TagsetSchema& default_schema();

  static TagsetSchema from_json(std::string_view json_text);
  static TagsetSchema load(std::istream& in);

  const std::string& allowed(int position) const;
  bool allows(int position, char value) const;

  const std::string& segment_prefix_codes() const { return segment_prefix_; }
  // Position 14 values other than '-'.
  std::string aggregate_codes() const;
  VariantClass variant_class(char value) const;

 private:
  std::array<std::string, k_tag_length> allowed_;
  std::string segment_prefix_;
  std::array<VariantClass, 128> variant_classes_{};
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TagViolation {
  int position;
  char value;

  friend bool operator==(const TagViolation&, const TagViolation&) = default;
};

/// Every position whose value falls outside the schema alphabet; empty
/// means schema-valid.
std::vector<TagViolation> validate(const PosTag& tag, const TagsetSchema& schema);

enum class TagKind { regular, foreign, segment_prefixal, segment_suffixal };
enum class Aspect { none, perfective, imperfective, biaspectual };

struct TagQueryResult {
  TagKind kind;
  Aspect aspect;
  std::optional<char> aggregate;
  VariantClass variant;

  friend bool operator==(const TagQueryResult&, const TagQueryResult&) = default;
};

TagQueryResult classify(const PosTag& tag,
                        const TagsetSchema& schema = TagsetSchema::default_schema());

std::string_view to_string(TagKind kind);
std::string_view to_string(Aspect aspect);
std::string_view to_string(VariantClass variant);

}  // namespace pdtc
