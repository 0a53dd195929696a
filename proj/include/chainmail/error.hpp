#pragma once

#include <stdexcept>
#include <string>

namespace chainmail {

enum class errc {
  parse,       // malformed input text
  invalid,     // structurally invalid graph or diagram
  bad_argument,// unknown id, bad range, out-of-contract call
  math,        // a mathematical precondition fails (no certificate possible)
  internal     // broken internal invariant
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

// Filling invariants are undefined when the final framing is zero.
class DegenerateFraming : public Error {
public:
  explicit DegenerateFraming(const std::string& what) : Error(errc::math, what) {}
};

}  // namespace chainmail
