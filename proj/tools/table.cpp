#include "table.hpp"

#include <cstdio>
#include <stdexcept>

namespace gup::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("Table::add_row: cell count does not match columns");
  rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  for (const auto& [key, value] : metadata_) {
    out += "# " + key + ": " + value + "\n";
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += columns_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      switch (row[c].kind) {
        case Cell::Kind::Number: out += format_number(row[c].number); break;
        case Cell::Kind::Text: out += row[c].text; break;
        case Cell::Kind::Empty: break;
      }
    }
    out += '\n';
  }
  return out;
}

nlohmann::json Table::to_json() const {
  nlohmann::json j;
  for (const auto& [key, value] : metadata_) j["metadata"][key] = value;
  j["columns"] = columns_;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& cell : row) {
      switch (cell.kind) {
        case Cell::Kind::Number: jr.push_back(cell.number); break;
        case Cell::Kind::Text: jr.push_back(cell.text); break;
        case Cell::Kind::Empty: jr.push_back(nullptr); break;
      }
    }
    j["rows"].push_back(std::move(jr));
  }
  return j;
}

}  // namespace gup::cli
