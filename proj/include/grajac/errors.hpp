#pragma once

#include <stdexcept>
#include <string>

namespace grajac {

enum class Errc {
  LoopArc,
  VertexOutOfRange,
  ZeroMultiplicity,
  LastVertex,
  NotSquare,
  SingularMatrix,
  MinorEnumerationTooLarge,
  DivisorBelowTwo,
  CycleShapeRequired,
  NotUndirected,
  Disconnected,
  NotATree,
  NotASinkVertex,
  DegreeMismatch,
  InfeasibleParameters,
  WheelTooSmall,
  EmptyLayer,
  WordTooShort,
  LengthMismatch,
  UnknownFamily,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace grajac
