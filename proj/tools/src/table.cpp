#include "genuskit_cli/table.hpp"

#include <algorithm>

#include "genuskit/errors.hpp"

namespace genuskit::cli {

namespace {

std::string plain(const nlohmann::ordered_json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

void Table::add_row(std::vector<nlohmann::ordered_json> cells) {
  if (cells.size() != columns_.size()) throw InternalConsistencyError("table row has the wrong number of cells");
  rows_.push_back(std::move(cells));
}

void Table::render(std::ostream& out, Format format) const {
  switch (format) {
    case Format::json:
      for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
        out << obj.dump() << '\n';
      }
      break;
    case Format::csv:
      for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << csv_escape(columns_[i]);
      out << '\n';
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(plain(row[i]));
        out << '\n';
      }
      break;
    case Format::pretty: {
      std::vector<std::size_t> width(columns_.size());
      for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
      for (const auto& row : rows_)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], plain(row[i]).size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << s << '\n';
      };
      line(columns_);
      for (const auto& row : rows_) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(plain(c));
        line(cells);
      }
      break;
    }
  }
}

}  // namespace genuskit::cli
