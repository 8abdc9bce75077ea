#include "perco/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "perco/error.hpp"

namespace perco {

void RunConfig::set(const std::string& key, std::string value) {
  for (auto& [k, v] : params)
    if (k == key) {
      v = std::move(value);
      return;
    }
  params.emplace_back(key, std::move(value));
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Report::Report(const RunConfig& config) {
  add("command", config.command);
  if (!config.spec_path.empty()) add("spec", config.spec_path);
  add("seed", config.seed);
  for (const auto& [k, v] : config.params) add(k, v);
  if (!config.out_dir.empty()) add("out", config.out_dir);
}

void Report::add(const std::string& key, std::string value) { lines_.emplace_back(key, std::move(value)); }

void Report::write(std::ostream& os) const {
  for (const auto& [k, v] : lines_) os << k << ": " << v << '\n';
}

std::string Report::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw Error(Error::Kind::Internal, "csv row width differs from header");
  rows_.push_back(std::move(row));
}

namespace {

void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    const auto& cell = row[i];
    if (cell.find_first_of(",\"\n") == std::string::npos) {
      os << cell;
      continue;
    }
    os << '"';
    for (char c : cell) {
      if (c == '"') os << '"';
      os << c;
    }
    os << '"';
  }
  os << '\n';
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
  write_row(os, header_);
  for (const auto& r : rows_) write_row(os, r);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Error::Kind::Input, "cannot create output directory " + dir + ": " + ec.message());
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Error::Kind::Input, "cannot write " + path.string());
  out << text;
}

}  // namespace perco
