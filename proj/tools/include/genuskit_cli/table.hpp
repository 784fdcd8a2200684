#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace genuskit::cli {

enum class Format { json, csv, pretty };

/// Rows of scalar cells (strings, integers, booleans or arrays of integers).
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_column(std::string name) { columns_.push_back(std::move(name)); }
  void add_row(std::vector<nlohmann::ordered_json> cells);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<nlohmann::ordered_json>>& rows() const { return rows_; }

  /// json: one object per line; csv: header plus rows; pretty: aligned columns.
  void render(std::ostream& out, Format format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

}  // namespace genuskit::cli
