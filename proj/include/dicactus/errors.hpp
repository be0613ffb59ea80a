#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dicactus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kMissingHeader,
  kMalformedLine,
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kEdgeCountMismatch,
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMissingHeader: return "missing header";
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kVertexOutOfRange: return "vertex out of range";
    case ParseErrorKind::kEdgeCountMismatch: return "edge count mismatch";
  }
  return "unknown";
}

/// Edge-list syntax or content error. `line` is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + to_string(kind) + ": " +
              detail),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Invalid vertex ids, self-loops or duplicate edges at construction time.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// The graph lacks a structural property an operation needs. When the failure
/// is an unreachable ordered pair, `unreachable()` names it (1-based).
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(what) {}
  StructuralError(std::size_t from, std::size_t to)
      : Error("vertex " + std::to_string(to) + " is unreachable from vertex " +
              std::to_string(from)),
        unreachable_{from, to} {}

  std::pair<std::size_t, std::size_t> unreachable() const noexcept {
    return unreachable_;
  }

 private:
  std::pair<std::size_t, std::size_t> unreachable_{0, 0};
};

/// An operation was called outside its mathematical domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Size limit exceeded; enumerations and dense exact kernels refuse rather
/// than truncate.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace dicactus
