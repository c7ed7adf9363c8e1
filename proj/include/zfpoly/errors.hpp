#pragma once

#include <stdexcept>
#include <string>

namespace zfp {

/// Malformed textual input (edge lists, graph6, binary strings, family specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph exceeds the bitset width or an enumeration cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its admissible domain
/// (e.g. cycle(2), a chord between cycle neighbours, a non-canonical threshold string).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form was requested for a graph it does not describe.
class MethodMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zfp
