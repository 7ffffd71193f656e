#pragma once

#include <stdexcept>
#include <string>

namespace planarize {

// Base for every error this library throws. Callers that only care about
// "bad input vs. internal failure" can catch the two intermediate classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input supplied by a caller.
class InputError : public Error {
 public:
  using Error::Error;
};

// A machine-checked guarantee failed. Always a bug, never bad input.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public InputError {
 public:
  using InputError::InputError;
};
class NoSuchEdge : public InputError {
 public:
  using InputError::InputError;
};
class LoopInInput : public InputError {
 public:
  using InputError::InputError;
};
class ParseError : public InputError {
 public:
  using InputError::InputError;
};
class InvalidSpec : public InputError {
 public:
  using InputError::InputError;
};
class TooLarge : public InputError {
 public:
  using InputError::InputError;
};
class StaleDescriptor : public InputError {
 public:
  using InputError::InputError;
};
class TraceMismatch : public InputError {
 public:
  using InputError::InputError;
};
class InfeasibleParams : public InputError {
 public:
  using InputError::InputError;
};
class MissingVariable : public InputError {
 public:
  using InputError::InputError;
};
class Infeasible : public InputError {
 public:
  using InputError::InputError;
};
class Unbounded : public InputError {
 public:
  using InputError::InputError;
};
class InsufficientGirth : public InputError {
 public:
  using InputError::InputError;
};
class Disconnected : public InputError {
 public:
  using InputError::InputError;
};

class CaseAnalysisIncomplete : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};
class NegativeCharge : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};
class BoundViolation : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

#define PLANARIZE_CHECK(cond, msg)                                          \
  do {                                                                      \
    if (!(cond))                                                            \
      throw ::planarize::AssertionFailure(std::string(__FILE__) + ":" +     \
                                          std::to_string(__LINE__) + ": " + \
                                          (msg));                           \
  } while (0)

}  // namespace planarize
