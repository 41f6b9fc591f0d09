#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace somq {

enum class ErrorKind {
  domain,
  shape,
  degenerate_grid,
  degenerate_codebook,
  degenerate_data,
  input,
  config,
  io,
};

/// Stable machine-readable name ("domain", "shape", "degenerate_grid", ...).
std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind drives CLI exit
/// codes and the "error" field of report entries.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(ErrorKind::shape, what) {}
};

struct DegenerateGridError : Error {
  explicit DegenerateGridError(const std::string& what) : Error(ErrorKind::degenerate_grid, what) {}
};

struct DegenerateCodebookError : Error {
  explicit DegenerateCodebookError(const std::string& what)
      : Error(ErrorKind::degenerate_codebook, what) {}
};

struct DegenerateDataError : Error {
  explicit DegenerateDataError(const std::string& what) : Error(ErrorKind::degenerate_data, what) {}
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace somq
