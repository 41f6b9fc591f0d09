#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "somq/matrix.hpp"

namespace somq::io {

/// Reads comma-separated numeric rows. Blank lines and lines starting with
/// '#' are skipped. Throws InputError naming the file and line on failure.
Matrix read_matrix_csv(const std::filesystem::path& path);

/// One integer class id per line.
std::vector<int> read_labels(const std::filesystem::path& path);

/// Writes rows with 17 significant digits, enough for a bit-identical re-read.
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);
std::string format_number(double value);

/// Writes text to a file, throwing IoError when the file cannot be created.
void write_text(const std::filesystem::path& path, const std::string& text);

/// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits.
std::string file_fingerprint(const std::filesystem::path& path);

}  // namespace somq::io
