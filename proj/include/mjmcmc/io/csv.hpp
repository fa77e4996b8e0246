#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <string>
#include <vector>

namespace mjmcmc::io {

enum class MatrixKind { Real, Binary };

struct LoadedMatrix {
  Eigen::MatrixXd values;
  /// Column names when the file had a header row, else empty.
  std::vector<std::string> header;
  Eigen::VectorXd column_means;

  std::size_t rows() const noexcept { return static_cast<std::size_t>(values.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(values.cols()); }
};

/// Comma-separated numeric matrix. The first row is a header when none of its
/// cells parses as a number. Blank lines are skipped. Errors carry 1-based
/// line and column numbers (ParseError); missing files raise IoError.
LoadedMatrix load_matrix_csv(const std::filesystem::path& path, MatrixKind kind);

/// Writes values with shortest round-trip formatting, so reading back is exact.
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& values,
                      const std::vector<std::string>& header = {});

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace mjmcmc::io
