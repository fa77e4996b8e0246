#include "mjmcmc/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string_view>

#include "mjmcmc/error.hpp"

namespace mjmcmc::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

LoadedMatrix load_matrix_csv(const std::filesystem::path& path, MatrixKind kind) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  LoadedMatrix out;
  std::vector<double> values;
  std::size_t cols = 0, rows = 0, line_no = 0;
  bool first = true;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (first) {
      first = false;
      bool any_numeric = false;
      for (auto c : cells) any_numeric = any_numeric || parse_number(c).has_value();
      cols = cells.size();
      if (!any_numeric) {
        for (auto c : cells) out.header.emplace_back(c);
        continue;
      }
    }
    if (cells.size() != cols)
      throw ParseError(path.string(), line_no, std::min(cells.size(), cols) + 1,
                       "expected " + std::to_string(cols) + " columns, found " + std::to_string(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = parse_number(cells[c]);
      if (!v) throw ParseError(path.string(), line_no, c + 1, "non-numeric cell '" + std::string(cells[c]) + "'");
      if (!std::isfinite(*v)) throw ParseError(path.string(), line_no, c + 1, "non-finite value");
      if (kind == MatrixKind::Binary && *v != 0.0 && *v != 1.0)
        throw ParseError(path.string(), line_no, c + 1, "binary data must be 0 or 1, found '" + std::string(cells[c]) + "'");
      values.push_back(*v);
    }
    ++rows;
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  if (rows == 0) throw ParseError(path.string(), line_no + 1, 1, "no data rows");

  out.values = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      values.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  out.column_means = out.values.colwise().mean().transpose();
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, ptr);
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& values,
                      const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  if (!header.empty()) {
    if (header.size() != static_cast<std::size_t>(values.cols()))
      throw Error("header has " + std::to_string(header.size()) + " names for " +
                  std::to_string(values.cols()) + " columns");
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
  }
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) out << (c ? "," : "") << format_double(values(r, c));
    out << '\n';
  }
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace mjmcmc::io
