#include "lshc/dataset_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lshc {
namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& msg) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_real(const std::string& token, const std::string& name, std::size_t line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    fail(name, line, "expected a real number, got '" + token + "'");
  return value;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RawCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // includes every column
  std::vector<std::size_t> line_numbers;
};

RawCsv read_raw(std::istream& in, const std::string& name) {
  RawCsv csv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (csv.header.empty()) {
      csv.header = fields;
      continue;
    }
    if (fields.size() != csv.header.size())
      fail(name, line_no,
           "expected " + std::to_string(csv.header.size()) + " columns, got " +
               std::to_string(fields.size()));
    std::vector<double> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
      row[i] = parse_real(fields[i], name, line_no);
    csv.rows.push_back(std::move(row));
    csv.line_numbers.push_back(line_no);
  }
  if (csv.header.empty()) fail(name, 1, "missing header row");
  return csv;
}

}  // namespace

void write_labeled_csv(std::ostream& out, std::span<const LabeledExample> data) {
  const std::size_t d = data.empty() ? 0 : data[0].point.size();
  for (std::size_t j = 0; j < d; ++j) out << 'x' << (j + 1) << ',';
  out << "label\n";
  for (const auto& ex : data) {
    for (double v : ex.point) out << format_real(v) << ',';
    out << ex.label << '\n';
  }
}

void write_labeled_csv(const std::string& path, std::span<const LabeledExample> data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_labeled_csv(out, data);
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

std::vector<LabeledExample> read_labeled_csv(std::istream& in, const std::string& name) {
  const RawCsv csv = read_raw(in, name);
  if (csv.header.size() < 2)
    fail(name, 1, "need at least one feature column and a label column");
  std::vector<LabeledExample> data;
  data.reserve(csv.rows.size());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    LabeledExample ex;
    ex.point.assign(row.begin(), row.end() - 1);
    const double raw_label = row.back();
    if (raw_label != 0.0 && raw_label != 1.0)
      fail(name, csv.line_numbers[r], "label must be 0 or 1");
    ex.label = static_cast<int>(raw_label);
    data.push_back(std::move(ex));
  }
  if (data.empty()) fail(name, 1, "no data rows");
  return data;
}

std::vector<LabeledExample> read_labeled_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_labeled_csv(in, path);
}

std::vector<std::vector<double>> read_points_csv(std::istream& in, const std::string& name) {
  const RawCsv csv = read_raw(in, name);
  const bool has_label = !csv.header.empty() && csv.header.back() == "label";
  const std::size_t d = csv.header.size() - (has_label ? 1 : 0);
  if (d == 0) fail(name, 1, "no feature columns");
  std::vector<std::vector<double>> points;
  points.reserve(csv.rows.size());
  for (const auto& row : csv.rows)
    points.emplace_back(row.begin(), row.begin() + d);
  return points;
}

std::vector<std::vector<double>> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_points_csv(in, path);
}

}  // namespace lshc
