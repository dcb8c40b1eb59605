#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace popkit {

// Malformed arguments: duplicate entries, labels out of range, bad builder parameters.
class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Relations whose transitive closure is not a strict partial order.
class invalid_poset : public invalid_input {
public:
  using invalid_input::invalid_input;
};

// A rational generating function that cannot be expanded as an integer power series.
class invalid_gf : public invalid_input {
public:
  using invalid_input::invalid_input;
};

// Exhaustive enumeration requested beyond the configured cap.
class resource_limit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax error in pattern notation. Carries the byte offset of the failure and
// the set of tokens that would have been accepted there.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t offset, std::vector<std::string> expected)
      : std::runtime_error(format(offset, expected)), offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected) {
    std::string msg = "parse error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

} // namespace popkit
