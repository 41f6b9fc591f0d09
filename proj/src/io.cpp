#include "somq/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "somq/errors.hpp"

namespace somq::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  return in;
}

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

}  // namespace

Matrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  Matrix m;
  std::vector<double> row;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (skippable(line)) continue;
    row.clear();
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view field =
          trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      double value = 0.0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
        throw InputError(location(path, line_no) + ": cannot parse '" + std::string(field) + "' as a number");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!m.empty() && row.size() != m.cols()) {
      throw InputError(location(path, line_no) + ": expected " + std::to_string(m.cols()) + " columns, found " +
                       std::to_string(row.size()));
    }
    m.push_row(row);
  }
  if (m.empty()) throw InputError(path.string() + ": no data rows");
  return m;
}

std::vector<int> read_labels(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<int> labels;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (skippable(line)) continue;
    int value = 0;
    const auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || end != line.data() + line.size() || value < 0) {
      throw InputError(location(path, line_no) + ": cannot parse '" + std::string(line) +
                       "' as a nonnegative class id");
    }
    labels.push_back(value);
  }
  if (labels.empty()) throw InputError(path.string() + ": no labels");
  return labels;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out << text;
  if (!out.flush()) throw IoError(path.string() + ": write failed");
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  std::string text;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) text += ',';
      text += format_number(m(r, c));
    }
    text += '\n';
  }
  write_text(path, text);
}

std::string file_fingerprint(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::uint64_t hash = 14695981039346656037ull;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 1099511628211ull;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace somq::io
