#include "pdtc/text_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdtc {

namespace {

// Display width in code points; good enough for the Latin-script labels
// and lemmas that end up in reports.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

void TextTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) throw std::invalid_argument("table row has wrong arity");
  rows_.push_back(std::move(cells));
}

void TextTable::print(std::ostream& out) const {
  std::vector<std::size_t> widths;
  for (const auto& c : columns_) widths.push_back(width(c.title));
  for (const auto& row : rows_)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));

  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) text += " | ";
      std::string pad(widths[i] - width(cells[i]), ' ');
      bool last = i + 1 == cells.size();
      if (columns_[i].align == Align::right) text += pad + cells[i];
      else text += last ? cells[i] : cells[i] + pad;
    }
    out << text << '\n';
  };

  std::vector<std::string> titles;
  for (const auto& c : columns_) titles.push_back(c.title);
  line(titles);

  std::string rule;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (i > 0) rule += "-|-";
    rule += std::string(widths[i], '-');
  }
  out << rule << '\n';
  for (const auto& row : rows_) line(row);
}

std::string group_thousands(unsigned long long value) {
  auto digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace pdtc
