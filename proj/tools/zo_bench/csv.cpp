#include "zo_bench/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zo::cli {

std::string format_double(double value) {
  if (!std::isfinite(value)) return {};
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CsvWriter::CsvWriter(std::ostream& out, std::string schema, std::vector<std::string> columns)
    : out_(out), schema_(std::move(schema)), width_(columns.size()) {
  out_ << "schema";
  for (const auto& c : columns) out_ << ',' << quote(c);
  out_ << '\n';
}

CsvWriter::Row& CsvWriter::Row::add(const std::string& value) {
  fields_.push_back(value);
  return *this;
}

CsvWriter::Row& CsvWriter::Row::add(double value) { return add(format_double(value)); }

CsvWriter::Row& CsvWriter::Row::add(std::int64_t value) { return add(std::to_string(value)); }

CsvWriter::Row& CsvWriter::Row::add(std::uint64_t value) { return add(std::to_string(value)); }

CsvWriter::Row& CsvWriter::Row::add(const std::optional<double>& value) {
  return value ? add(*value) : empty();
}

void CsvWriter::write(const Row& row) {
  if (row.fields_.size() != width_)
    throw std::logic_error("csv row has " + std::to_string(row.fields_.size()) +
                           " fields, schema " + schema_ + " expects " + std::to_string(width_));
  out_ << schema_;
  for (const auto& f : row.fields_) out_ << ',' << quote(f);
  out_ << '\n';
}

}  // namespace zo::cli
