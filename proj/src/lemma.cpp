#include "pdtc/lemma.hpp"

#include <algorithm>
#include <charconv>

namespace pdtc {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::size_t utf8_length(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

// Splits "base-12" into ("base", 12). A hyphen at the very start belongs to
// the base ("-" and "-1" are headwords, not numbered lemmas).
LemmaProper split_index(std::string_view text) {
  auto hyphen = text.rfind('-');
  if (hyphen == std::string_view::npos || hyphen == 0 || hyphen + 1 == text.size())
    return {std::string(text), std::nullopt};
  auto digits = text.substr(hyphen + 1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return {std::string(text), std::nullopt};

  unsigned value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.front() == '0' || ec != std::errc() || end != digits.data() + digits.size())
    throw LemmaError(LemmaError::Kind::bad_index,
                     "lemma '" + std::string(text) + "' has an invalid homonym number");
  return {std::string(text.substr(0, hyphen)), value};
}

}  // namespace

LemmaProper LemmaProper::parse(std::string_view text) {
  if (text.empty()) throw LemmaError(LemmaError::Kind::empty_lemma, "empty lemma");
  return split_index(text);
}

std::string LemmaProper::text() const {
  return index ? base + "-" + std::to_string(*index) : base;
}

LemmaComment::LemmaComment(std::string raw_text) : raw(std::move(raw_text)) {
  // ^XY**target
  std::string_view s = raw;
  if (s.size() < 2 || s.front() != '^') return;
  auto stars = s.find("**", 1);
  if (stars == std::string_view::npos) return;
  auto code = s.substr(1, stars - 1);
  auto target = s.substr(stars + 2);
  if (utf8_length(code) != 2 || target.empty()) return;
  variant_ref = VariantRef{std::string(code), std::string(target)};
}

Lemma Lemma::parse(std::string_view text) {
  if (text.empty()) throw LemmaError(LemmaError::Kind::empty_lemma, "empty lemma");
  if (std::any_of(text.begin(), text.end(), is_space))
    throw LemmaError(LemmaError::Kind::whitespace,
                     "lemma '" + std::string(text) + "' contains whitespace");

  auto underscore = text.find('_');
  auto proper_part = text.substr(0, underscore);
  if (proper_part.empty())
    throw LemmaError(LemmaError::Kind::empty_lemma,
                     "lemma '" + std::string(text) + "' has an empty base");

  Lemma lemma;
  auto proper = split_index(proper_part);
  lemma.base_ = std::move(proper.base);
  lemma.index_ = proper.index;

  std::size_t pos = underscore;
  while (pos < text.size()) {
    // text[pos] == '_'
    if (text.substr(pos, 3) == "_^(") {
      // The comment closes at a ')' that balances the opening one and is
      // followed by '_' or the end of the lemma. Unbalanced or embedded
      // ')' characters stay inside the comment.
      std::size_t close = std::string_view::npos;
      int depth = 0;
      for (std::size_t i = pos + 3; i < text.size(); ++i) {
        if (text[i] == '(') {
          ++depth;
        } else if (text[i] == ')') {
          if (depth > 0) {
            --depth;
          } else if (i + 1 == text.size() || text[i + 1] == '_') {
            close = i;
            break;
          }
        }
      }
      if (close == std::string_view::npos)
        throw LemmaError(LemmaError::Kind::unterminated_comment,
                         "lemma '" + std::string(text) + "' has an unterminated comment");
      lemma.order_.push_back({SuffixGroup::Type::comment, lemma.comments_.size()});
      lemma.comments_.emplace_back(std::string(text.substr(pos + 3, close - pos - 3)));
      pos = close + 1;
    } else {
      auto next = text.find('_', pos + 1);
      if (next == std::string_view::npos) next = text.size();
      lemma.order_.push_back({SuffixGroup::Type::flag, lemma.flags_.size()});
      lemma.flags_.push_back({std::string(text.substr(pos + 1, next - pos - 1))});
      pos = next;
    }
  }
  return lemma;
}

std::string Lemma::technical_suffix() const {
  std::string out;
  for (const auto& group : order_) {
    if (group.type == SuffixGroup::Type::flag) {
      out += '_';
      out += flags_[group.slot].body;
    } else {
      out += "_^(";
      out += comments_[group.slot].raw;
      out += ')';
    }
  }
  return out;
}

std::string Lemma::serialize() const { return proper().text() + technical_suffix(); }

LemmaComparison compare(const Lemma& a, const Lemma& b) {
  LemmaComparison c{};
  c.same_base = a.base() == b.base();
  c.same_index = a.index() == b.index();
  c.same_proper = c.same_base && c.same_index;
  c.same_technical_suffix = a.technical_suffix() == b.technical_suffix();
  return c;
}

}  // namespace pdtc
