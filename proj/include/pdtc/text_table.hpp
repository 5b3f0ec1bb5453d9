// Fixed-width plain-text tables for the human-readable reports.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdtc {

class TextTable {
 public:
  enum class Align { left, right };

  struct Column {
    std::string title;
    Align align = Align::left;
  };

  explicit TextTable(std::vector<Column> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells);
  void print(std::ostream& out) const;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// 1473162 -> "1,473,162"
std::string group_thousands(unsigned long long value);

}  // namespace pdtc
