#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simgrace {

// Every error raised by the library derives from Error and carries a short
// machine-readable kind ("ingestion", "numeric", ...) used by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  std::string_view kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SIMGRACE_DEFINE_ERROR(Name, kind_str)                       \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message) : Error(kind_str, message) {} \
  }

SIMGRACE_DEFINE_ERROR(IngestionError, "ingestion");
SIMGRACE_DEFINE_ERROR(MalformedDatasetError, "malformed-dataset");
SIMGRACE_DEFINE_ERROR(ConfigError, "config");
SIMGRACE_DEFINE_ERROR(ShapeError, "shape");
SIMGRACE_DEFINE_ERROR(DegenerateEmbeddingError, "degenerate-embedding");
SIMGRACE_DEFINE_ERROR(CheckpointError, "checkpoint");
SIMGRACE_DEFINE_ERROR(IoError, "io");

#undef SIMGRACE_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error("parse", file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Raised when a forward or backward pass produces NaN/inf. `where` names the
// first offending layer or tensor.
class NumericError : public Error {
 public:
  NumericError(std::string where, const std::string& what)
      : Error("numeric", where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace simgrace
