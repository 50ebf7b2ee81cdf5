#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcover {

// Base class for every failure raised by the library. Subclasses carry the
// witness data needed to reproduce the failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: non-square table, index out of range, empty carrier.
struct ShapeError : Error {
  using Error::Error;
};

// Column y of a rack table is not a permutation.
struct NotBijectiveColumn : Error {
  int column;
  explicit NotBijectiveColumn(int y)
      : Error("column " + std::to_string(y) + " is not a permutation"), column(y) {}
};

// First self-distributivity violation (x <| y) <| z != (x <| z) <| (y <| z).
struct SelfDistributivityFail : Error {
  int x, y, z;
  SelfDistributivityFail(int x_, int y_, int z_)
      : Error("self-distributivity fails at (" + std::to_string(x_) + "," +
              std::to_string(y_) + "," + std::to_string(z_) + ")"),
        x(x_), y(y_), z(z_) {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& witness) : Error("not a group table: " + witness) {}
};

struct NotAHomomorphism : Error {
  int x, y;
  NotAHomomorphism(int x_, int y_)
      : Error("map does not preserve <| at (" + std::to_string(x_) + "," +
              std::to_string(y_) + ")"),
        x(x_), y(y_) {}
};

struct IncompatiblePartition : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct ClosureCapExceeded : Error {
  std::size_t cap;
  explicit ClosureCapExceeded(std::size_t c)
      : Error("permutation closure exceeded cap " + std::to_string(c)), cap(c) {}
};

struct NotSurjective : Error {
  using Error::Error;
};

struct OverflowGuard : Error {
  using Error::Error;
};

struct CharacteristicNonZero : Error {
  using Error::Error;
};

struct InvalidHorn : Error {
  int step;
  explicit InvalidHorn(int i)
      : Error("horn step " + std::to_string(i) + " is not a kernel pair"), step(i) {}
};

struct BadPointing : Error {
  using Error::Error;
};

struct EmptyRack : Error {
  using Error::Error;
};

// Two routes that are provably equivalent disagreed. Always a bug, never a
// recoverable condition; the CLI maps it to exit code 3.
struct MethodDisagreement : Error {
  using Error::Error;
};

}  // namespace qcover
