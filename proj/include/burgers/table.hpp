#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "burgers/errors.hpp"
#include "burgers/version.hpp"

namespace burgers {

struct TableMetadata {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string version = kVersion;

  friend bool operator==(const TableMetadata&, const TableMetadata&) = default;
};

/// Named columns of pre-rendered numeric strings.
class OutputTable {
 public:
  OutputTable() = default;
  explicit OutputTable(std::vector<std::string> names) : names_(std::move(names)), columns_(names_.size()) {}

  TableMetadata metadata;

  void add_row(std::vector<std::string> row) {
    if (row.size() != names_.size()) throw DomainError("row width does not match the column count");
    for (std::size_t i = 0; i < row.size(); ++i) columns_[i].push_back(std::move(row[i]));
  }

  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::size_t rows() const noexcept { return columns_.empty() ? 0 : columns_.front().size(); }

  [[nodiscard]] const std::vector<std::string>& column(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return columns_[i];
    }
    throw DomainError("no column named '" + name + "'");
  }

  [[nodiscard]] bool has_column(const std::string& name) const {
    for (const auto& n : names_) {
      if (n == name) return true;
    }
    return false;
  }

  /// Comma-separated, header row, LF endings.
  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
    out << '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << columns_[i][r];
      out << '\n';
    }
  }

  [[nodiscard]] std::string csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
  }

  static OutputTable read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty CSV input");
    OutputTable t(split(line));
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      t.add_row(split(line));
    }
    return t;
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["metadata"] = {{"command", metadata.command}, {"parameters", metadata.parameters}, {"version", metadata.version}};
    nlohmann::ordered_json cols = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < names_.size(); ++i) cols[names_[i]] = columns_[i];
    j["columns"] = cols;
    return j;
  }

  static OutputTable from_json(const nlohmann::ordered_json& j) {
    std::vector<std::string> names;
    for (const auto& [name, _] : j.at("columns").items()) names.push_back(name);
    OutputTable t(names);
    for (std::size_t i = 0; i < names.size(); ++i) {
      t.columns_[i] = j.at("columns").at(names[i]).get<std::vector<std::string>>();
      if (t.columns_[i].size() != t.columns_[0].size()) throw DomainError("column lengths differ");
    }
    const auto& m = j.at("metadata");
    t.metadata.command = m.at("command").get<std::string>();
    t.metadata.parameters = m.at("parameters").get<std::map<std::string, std::string>>();
    t.metadata.version = m.at("version").get<std::string>();
    return t;
  }

  friend bool operator==(const OutputTable&, const OutputTable&) = default;

 private:
  static std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> columns_;
};

}  // namespace burgers
