#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace perco {

/// Everything a run was asked to do; echoed at the top of every report.
struct RunConfig {
  std::string command;
  std::string spec_path;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;  // in the order given
  std::string out_dir;

  void set(const std::string& key, std::string value);
};

/// Fixed-precision, locale-free formatting so reports are byte-stable.
std::string format_double(double x, int digits = 10);

/// "key: value" lines, in insertion order.
class Report {
 public:
  explicit Report(const RunConfig& config);

  void add(const std::string& key, std::string value);
  void add(const std::string& key, double value) { add(key, format_double(value)); }
  void add(const std::string& key, std::int64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }

  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  /// Throws Error(Internal) if the row width differs from the header.
  void add_row(std::vector<std::string> row);
  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes text to dir/name, creating dir. Throws Error(Input) on failure.
void write_file(const std::string& dir, const std::string& name, const std::string& text);

}  // namespace perco
