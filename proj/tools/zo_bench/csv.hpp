#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zo::cli {

/// Comma-separated output. The first column of every line is the schema tag,
/// so a file is self-describing; missing values are written as empty fields.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::string schema, std::vector<std::string> columns);

  class Row {
   public:
    Row& add(const std::string& value);
    Row& add(double value);
    Row& add(std::int64_t value);
    Row& add(std::uint64_t value);
    Row& add(int value) { return add(static_cast<std::int64_t>(value)); }
    Row& add(long long value) { return add(static_cast<std::int64_t>(value)); }
    Row& add(const std::optional<double>& value);
    Row& empty() { return add(std::string()); }

   private:
    friend class CsvWriter;
    std::vector<std::string> fields_;
  };

  Row row() const { return Row(); }
  void write(const Row& row);

  const std::string& schema() const { return schema_; }

 private:
  std::ostream& out_;
  std::string schema_;
  std::size_t width_;
};

/// Shortest form that round-trips: %.17g. Non-finite values become empty.
std::string format_double(double value);

}  // namespace zo::cli
