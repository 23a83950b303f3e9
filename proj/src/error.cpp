#include "smx/error.hpp"

namespace smx {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CutOutOfRange: return "CutOutOfRange";
    case ErrorKind::DuplicateCut: return "DuplicateCut";
    case ErrorKind::UnsortedCuts: return "UnsortedCuts";
    case ErrorKind::ZeroDimension: return "ZeroDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::BlockIndexOutOfRange: return "BlockIndexOutOfRange";
    case ErrorKind::EmptyUnion: return "EmptyUnion";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidRational: return "InvalidRational";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::InconsistentCuts: return "InconsistentCuts";
    case ErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message,
                    std::optional<std::size_t> component) {
  std::string text = to_string(kind);
  if (component) {
    text += " (component " + std::to_string(*component) + ")";
  }
  if (!message.empty()) {
    text += ": " + message;
  }
  return text;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> component)
    : std::runtime_error(compose(kind, message, component)),
      kind_(kind),
      component_(component),
      detail_(message) {}

Error Error::at_component(std::size_t index) const {
  return Error(kind_, detail_, index);
}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace smx
