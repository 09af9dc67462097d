#pragma once

#include <stdexcept>
#include <string>

namespace sugeom {

enum class ErrorKind {
  Parse,        // malformed input text
  Domain,       // evaluation outside the domain of a scalar
  Unsupported,  // expression outside the exact scalar class
  Dimension,    // mismatched ambient dimensions or degrees
  Precondition, // operation called on data violating its contract
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sugeom
