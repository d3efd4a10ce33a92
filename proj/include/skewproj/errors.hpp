#pragma once

#include <stdexcept>
#include <string>

namespace skewproj {

// Malformed input or a violated operation precondition. The CLI maps this to
// exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail_input(const std::string& what) {
  throw input_error(what);
}

// Two independent computation routes disagreed; indicates a bug, never bad
// input.
class consistency_error : public std::logic_error {
public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace skewproj
