// Streaming reader for the vertical corpus format:
//
//   #doc id=<text>
//   #sent id=<text>
//   form TAB lemma TAB tag
//   ...
//   <blank line closes the sentence>
#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "pdtc/lemma.hpp"
#include "pdtc/tag.hpp"

namespace pdtc {

struct TokenLocation {
  std::string doc;
  std::string sent;
  std::size_t token = 0;  // 1-based within the sentence

  std::string to_string() const;

  friend bool operator==(const TokenLocation&, const TokenLocation&) = default;
  friend auto operator<=>(const TokenLocation&, const TokenLocation&) = default;
};

struct TokenAnalysis {
  std::string form;
  Lemma lemma;
  PosTag tag;
  TokenLocation location;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, TokenLocation location, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + " (" + location.to_string() +
                           "): " + message),
        line_(line),
        location_(std::move(location)) {}

  std::size_t line() const { return line_; }
  const TokenLocation& location() const { return location_; }

 private:
  std::size_t line_;
  TokenLocation location_;
};

class CorpusReader {
 public:
  explicit CorpusReader(std::istream& in) : in_(in) {}

  /// Next token, or nullopt at end of input. Throws CorpusError on a
  /// malformed token line.
  std::optional<TokenAnalysis> next();

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t line_no_ = 0;
  std::string doc_ = "-";
  std::string sent_;
  std::size_t sentences_in_doc_ = 0;
  std::size_t token_in_sent_ = 0;
  bool in_sentence_ = false;
};

}  // namespace pdtc
