#include "somq/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "somq/errors.hpp"

namespace somq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::shape: return "shape";
    case ErrorKind::degenerate_grid: return "degenerate_grid";
    case ErrorKind::degenerate_codebook: return "degenerate_codebook";
    case ErrorKind::degenerate_data: return "degenerate_data";
    case ErrorKind::input: return "input";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  for (const auto& r : rows) {
    push_row(std::span<const double>(r.begin(), r.size()));
  }
}

void Matrix::push_row(std::span<const double> row) {
  if (rows_ == 0 && values_.empty()) {
    cols_ = row.size();
  } else if (row.size() != cols_) {
    throw ShapeError("row of length " + std::to_string(row.size()) +
                     " does not match matrix width " + std::to_string(cols_));
  }
  values_.insert(values_.end(), row.begin(), row.end());
  ++rows_;
}

bool Matrix::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace somq
