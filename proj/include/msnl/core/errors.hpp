#ifndef MSNL_CORE_ERRORS_HPP_
#define MSNL_CORE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msnl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input text. `line()` is 1-based, 0 when
/// the problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Factor shapes disagree with the dataset they are used against.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A non-finite value appeared in a trainable matrix.
class DivergenceError : public Error {
 public:
  DivergenceError(int iteration, std::string block)
      : Error("non-finite value in " + block + " at iteration " +
              std::to_string(iteration)),
        iteration_(iteration),
        block_(std::move(block)) {}
  int iteration() const noexcept { return iteration_; }
  const std::string& block() const noexcept { return block_; }

 private:
  int iteration_;
  std::string block_;
};

}  // namespace msnl

#endif  // MSNL_CORE_ERRORS_HPP_
