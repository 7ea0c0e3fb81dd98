#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmw {

// Base class of every error raised by the library. Each subclass maps to one
// failure mode so callers (and the CLI exit-code table) can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class JointPrecedenceCycle : public Error {
 public:
  using Error::Error;
};

class EmptyPlan : public Error {
 public:
  using Error::Error;
};

class CyclicPrecedence : public Error {
 public:
  using Error::Error;
};

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

class InfeasibleTask : public Error {
 public:
  InfeasibleTask(std::size_t task_id, const std::string& what)
      : Error(what), task_id_(task_id) {}

  // 1-based id of the task that fits nowhere.
  [[nodiscard]] std::size_t task_id() const noexcept { return task_id_; }

 private:
  std::size_t task_id_;
};

class InfeasibleWorkload : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class GenError : public Error {
 public:
  using Error::Error;
};

class PoolError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmw
