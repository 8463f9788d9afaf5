#pragma once

#include <stdexcept>
#include <string>

namespace logpair {

// Malformed or inconsistent user input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computed result violated an invariant that should hold by construction.
// The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace logpair
