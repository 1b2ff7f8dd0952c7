#ifndef GUP_TOOLS_TABLE_HPP
#define GUP_TOOLS_TABLE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gup::cli {

// One table cell: a number (formatted to 12 significant digits), a string, or
// empty. Numeric formatting is fixed so identical configs produce byte-equal
// files.
struct Cell {
  enum class Kind { Number, Text, Empty } kind = Kind::Empty;
  double number = 0.0;
  std::string text;

  Cell() = default;
  Cell(double v) : kind(Kind::Number), number(v) {}
  Cell(const char* s) : kind(Kind::Text), text(s) {}
  Cell(std::string s) : kind(Kind::Text), text(std::move(s)) {}
};

std::string format_number(double v);  // %.12g
std::uint64_t fnv1a64(std::string_view data);

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_metadata(const std::string& key, const std::string& value) {
    metadata_.emplace_back(key, value);
  }
  void add_row(std::vector<Cell> row);

  std::size_t row_count() const { return rows_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }

  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

}  // namespace gup::cli

#endif  // GUP_TOOLS_TABLE_HPP
