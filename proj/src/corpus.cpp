#include "pdtc/corpus.hpp"

#include <string_view>

namespace pdtc {

std::string TokenLocation::to_string() const {
  return "doc " + doc + ", sent " + sent + ", token " + std::to_string(token);
}

namespace {

// "#doc id=abc" -> "abc" when the line opens a scope of the given kind.
std::optional<std::string> scope_id(std::string_view line, std::string_view kind) {
  if (line.size() < kind.size() + 1 || line.substr(1, kind.size()) != kind) return std::nullopt;
  auto rest = line.substr(kind.size() + 1);
  if (!rest.empty() && rest.front() != ' ' && rest.front() != '\t') return std::nullopt;
  auto id = rest.find("id=");
  if (id == std::string_view::npos) return std::string{};
  auto value = rest.substr(id + 3);
  auto end = value.find_first_of(" \t");
  return std::string(value.substr(0, end));
}

}  // namespace

std::optional<TokenAnalysis> CorpusReader::next() {
  while (std::getline(in_, line_)) {
    ++line_no_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();

    if (line_.empty()) {
      in_sentence_ = false;
      continue;
    }
    if (line_.front() == '#') {
      if (auto id = scope_id(line_, "doc")) {
        doc_ = id->empty() ? "-" : *id;
        sentences_in_doc_ = 0;
        in_sentence_ = false;
      } else if (auto sid = scope_id(line_, "sent")) {
        ++sentences_in_doc_;
        sent_ = sid->empty() ? std::to_string(sentences_in_doc_) : *sid;
        token_in_sent_ = 0;
        in_sentence_ = true;
      }
      continue;
    }

    if (!in_sentence_) {
      ++sentences_in_doc_;
      sent_ = std::to_string(sentences_in_doc_);
      token_in_sent_ = 0;
      in_sentence_ = true;
    }
    ++token_in_sent_;
    TokenLocation location{doc_, sent_, token_in_sent_};

    std::string_view rest = line_;
    auto t1 = rest.find('\t');
    auto t2 = t1 == std::string_view::npos ? t1 : rest.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || rest.find('\t', t2 + 1) != std::string_view::npos)
      throw CorpusError(line_no_, location, "expected 3 tab-separated fields (form, lemma, tag)");
    auto form = rest.substr(0, t1);
    if (form.empty()) throw CorpusError(line_no_, location, "empty form");

    try {
      return TokenAnalysis{std::string(form), Lemma::parse(rest.substr(t1 + 1, t2 - t1 - 1)),
                           PosTag::decode(rest.substr(t2 + 1)), std::move(location)};
    } catch (const LemmaError& e) {
      throw CorpusError(line_no_, location, e.what());
    } catch (const TagError& e) {
      throw CorpusError(line_no_, location, e.what());
    }
  }
  return std::nullopt;
}

}  // namespace pdtc
