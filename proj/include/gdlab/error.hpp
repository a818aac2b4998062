#pragma once

#include <stdexcept>
#include <string>

namespace gdlab {

// All library failures carry a stable machine-readable code
// (e.g. "NotALattice", "NotMinimalVariety", "SyntaxError") plus a message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

}  // namespace gdlab
