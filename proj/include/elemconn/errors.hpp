#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace elemconn {

class ColoredMultigraph;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller bug: unknown ids, wrong colors, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

// A terminal group is disconnected, so not even one subgraph exists.
class NoPacking : public Error {
 public:
  using Error::Error;
};

// Raised when the heavy-pair search finds too few parallel edges. On a
// planar input with the claimed connectivity this cannot happen, so it points
// at a non-planar input or an overstated k.
class ThresholdViolation : public Error {
 public:
  ThresholdViolation(const std::string& what, std::shared_ptr<const ColoredMultigraph> instance)
      : Error(what), instance_(std::move(instance)) {}
  const ColoredMultigraph* instance() const { return instance_.get(); }

 private:
  std::shared_ptr<const ColoredMultigraph> instance_;
};

// An internal invariant that a theorem guarantees was observed false.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace elemconn
