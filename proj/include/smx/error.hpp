#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace smx {

enum class ErrorKind {
  CutOutOfRange,
  DuplicateCut,
  UnsortedCuts,
  ZeroDimension,
  DimensionMismatch,
  PartitionMismatch,
  BlockIndexOutOfRange,
  EmptyUnion,
  ArityMismatch,
  InvalidRational,
  ParseError,
  RaggedRows,
  InconsistentCuts,
  EmptyInput,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `component()` is the 1-based index of
// the offending union component when the failure came from a lifted operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> component = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> component() const noexcept { return component_; }

  // Same error, tagged with a union component index.
  Error at_component(std::size_t index) const;

 private:
  ErrorKind kind_;
  std::optional<std::size_t> component_;
  std::string detail_;
};

// Text-format failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace smx
