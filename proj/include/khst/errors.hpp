#pragma once

#include <stdexcept>
#include <string>

namespace khst {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedSyntax : Error {
  explicit MalformedSyntax(const std::string& msg) : Error("malformed syntax: " + msg) {}
};

struct InconsistentArcs : Error {
  explicit InconsistentArcs(const std::string& msg) : Error("inconsistent arcs: " + msg) {}
};

struct OrientationConflict : Error {
  explicit OrientationConflict(const std::string& msg) : Error("orientation conflict: " + msg) {}
};

struct NotRealizable : Error {
  explicit NotRealizable(const std::string& msg) : Error("not realizable: " + msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

struct RecordError : Error {
  int line;
  RecordError(int line_, const std::string& cause)
      : Error("record error at line " + std::to_string(line_) + ": " + cause), line(line_) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& msg) : Error("length mismatch: " + msg) {}
};

struct NotAnEdge : Error {
  explicit NotAnEdge(const std::string& msg) : Error("not a cube edge: " + msg) {}
};

struct NotAFace : Error {
  explicit NotAFace(const std::string& msg) : Error("not a cube face: " + msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error("too large: " + msg) {}
};

struct NotACocycle : Error {
  explicit NotACocycle(const std::string& msg) : Error("not a cocycle: " + msg) {}
};

struct NegativeComponent : Error {
  explicit NegativeComponent(const std::string& msg) : Error("negative St component: " + msg) {}
};

struct EmptyGroup : Error {
  explicit EmptyGroup(const std::string& msg) : Error("empty group: " + msg) {}
};

}  // namespace khst
