#ifndef RHT_ERRORS_HPP
#define RHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rht {

/* Base class for everything thrown on purpose. */
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed input: unknown names, degree mismatches, bad syntax. */
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

/* A computation was asked past the degree range it can certify. */
class RangeError : public Error {
public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

/* Text-format diagnostics carry a position. */
class ParseError : public InputError {
public:
  ParseError(const std::string& msg, int line, int col)
      : InputError(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

}  // namespace rht

#endif
