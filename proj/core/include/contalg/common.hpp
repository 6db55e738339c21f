#ifndef CONTALG_COMMON_HPP
#define CONTALG_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace contalg {

/// Thrown when an argument violates an operation's precondition
/// (bad Cayley table, non-monic modulus, ambient-ring mismatch, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a construction or enumeration would exceed a configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error from one of the text parsers; carries the byte offset
/// and a description of what was expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position, std::string expected)
      : std::runtime_error(msg), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Caps and the sampling seed. Defaults follow the CLI documentation;
/// CONTALG_CAP overrides the order and vertex caps, CLI flags win over both.
struct Limits {
  std::size_t order_cap = 4096;
  std::size_t ideal_enum_cap = 256;
  std::size_t poly_enum_cap = 20000;   // nonzero enumeration candidates
  std::size_t vertex_cap = 20000;
  std::size_t zpow_case_cap = 1000000; // exhaustive product count before sampling
  std::uint64_t seed = 20240915;
};

/// Default limits with CONTALG_CAP (if set) applied to the order/vertex caps.
Limits limits_from_env();

}  // namespace contalg

#endif
