#include "pdtc/tag.hpp"

#include <algorithm>

namespace pdtc {

namespace {

bool is_utf8_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Tag values are single ASCII symbols; anything outside '!'..'~' is either
// whitespace, a control character or a multi-byte character.
bool is_tag_symbol(unsigned char c) { return c >= 0x21 && c <= 0x7E; }

}  // namespace

PosTag PosTag::decode(std::string_view text) {
  // A continuation byte extends the previous character only when that
  // character is non-ASCII; a stray one counts as a character of its own.
  auto starts_char = [&text](std::size_t i) {
    return i == 0 || !is_utf8_continuation(static_cast<unsigned char>(text[i])) ||
           static_cast<unsigned char>(text[i - 1]) < 0x80;
  };
  std::size_t chars = 0;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (starts_char(i)) ++chars;
  if (chars != k_tag_length)
    throw TagError(TagError::Kind::wrong_length, chars,
                   "tag '" + std::string(text) + "' has " + std::to_string(chars) +
                       " characters, expected 15");

  PosTag tag;
  std::size_t position = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (!starts_char(i)) continue;
    ++position;
    if (!is_tag_symbol(c))
      throw TagError(TagError::Kind::illegal_character, position,
                     "tag '" + std::string(text) + "' has an illegal character at position " +
                         std::to_string(position));
    tag.raw_[position - 1] = static_cast<char>(c);
  }
  return tag;
}

char PosTag::at(int position) const {
  if (position < 1 || position > static_cast<int>(k_tag_length))
    throw std::out_of_range("tag position " + std::to_string(position) + " outside 1..15");
  return raw_[position - 1];
}

std::vector<TagViolation> validate(const PosTag& tag, const TagsetSchema& schema) {
  std::vector<TagViolation> violations;
  for (int i = 1; i <= static_cast<int>(k_tag_length); ++i)
    if (!schema.allows(i, tag.at(i))) violations.push_back({i, tag.at(i)});
  return violations;
}

TagQueryResult classify(const PosTag& tag, const TagsetSchema& schema) {
  TagQueryResult result{TagKind::regular, Aspect::none, std::nullopt, VariantClass::none};

  char pos = tag.at(TagPosition::pos);
  char subpos = tag.at(TagPosition::subpos);
  if (pos == 'F' && subpos == '%') {
    result.kind = TagKind::foreign;
  } else if (pos == 'S') {
    const auto& prefixal = schema.segment_prefix_codes();
    result.kind = prefixal.find(subpos) != std::string::npos ? TagKind::segment_prefixal
                                                              : TagKind::segment_suffixal;
  }

  switch (tag.at(TagPosition::aspect)) {
    case 'P': result.aspect = Aspect::perfective; break;
    case 'I': result.aspect = Aspect::imperfective; break;
    case 'B': result.aspect = Aspect::biaspectual; break;
    default: break;
  }

  if (char aggregate = tag.at(TagPosition::aggregate); aggregate != '-')
    result.aggregate = aggregate;

  result.variant = schema.variant_class(tag.at(TagPosition::variant));
  return result;
}

std::string_view to_string(TagKind kind) {
  switch (kind) {
    case TagKind::regular: return "regular";
    case TagKind::foreign: return "foreign";
    case TagKind::segment_prefixal: return "segment-prefixal";
    case TagKind::segment_suffixal: return "segment-suffixal";
  }
  return "?";
}

std::string_view to_string(Aspect aspect) {
  switch (aspect) {
    case Aspect::none: return "none";
    case Aspect::perfective: return "perfective";
    case Aspect::imperfective: return "imperfective";
    case Aspect::biaspectual: return "biaspectual";
  }
  return "?";
}

std::string_view to_string(VariantClass variant) {
  switch (variant) {
    case VariantClass::none: return "none";
    case VariantClass::standard: return "standard";
    case VariantClass::substandard: return "substandard";
    case VariantClass::abbreviation: return "abbreviation";
    case VariantClass::other: return "other";
  }
  return "?";
}

}  // namespace pdtc
