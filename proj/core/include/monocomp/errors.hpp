#pragma once

#include <stdexcept>
#include <string>

namespace monocomp {

// Bad user-supplied parameters or config. The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant did not hold, or an audit refused to run within its
// budget. The CLI maps this to exit code 3.
struct contract_violation : std::runtime_error {
  explicit contract_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monocomp
