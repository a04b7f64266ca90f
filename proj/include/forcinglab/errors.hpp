#pragma once

#include <stdexcept>
#include <string>

namespace forcinglab {

// Exit-code convention shared by the library and the CLI:
//   0 success / pass, 1 failed property or negative query,
//   2 malformed input, 3 exhaustion cap exceeded.

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual int exit_code() const { return 2; }
};

// Malformed or inconsistent input: unknown identifiers, violated
// preconditions, rejected documents.
class InputError : public Error {
public:
  using Error::Error;
};

// An exhaustive scan or construction would exceed its configured cap.
class ResourceError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

}  // namespace forcinglab
