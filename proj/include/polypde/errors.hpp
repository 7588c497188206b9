#ifndef POLYPDE_ERRORS_HPP
#define POLYPDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polypde {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
  division_by_zero() : error("division by zero") {}
};

// Raised by all text readers; `position` is a 0-based byte offset into the
// input.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct unknown_variable : parse_error {
  unknown_variable(const std::string& name, std::size_t position)
      : parse_error("unknown variable '" + name + "'", position), name(name) {}
  std::string name;
};

struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what)
      : error("dimension mismatch: " + what) {}
};

struct arity_mismatch : error {
  explicit arity_mismatch(const std::string& what)
      : error("arity mismatch: " + what) {}
};

struct not_in_set : error {
  explicit not_in_set(const std::string& what)
      : error("index not in set: " + what) {}
};

struct degree_exceeds_cap : error {
  explicit degree_exceeds_cap(const std::string& what)
      : error("degree exceeds cap: " + what) {}
};

struct length_mismatch : error {
  explicit length_mismatch(const std::string& what)
      : error("length mismatch: " + what) {}
};

struct zero_polynomial : error {
  explicit zero_polynomial(const std::string& what)
      : error("zero polynomial: " + what) {}
};

struct empty_list : error {
  explicit empty_list(const std::string& what)
      : error("empty list: " + what) {}
};

// A linear system with no solution.  Only reachable when the caller forces a
// degree cap below the consistency threshold.
struct inconsistent_system : error {
  inconsistent_system() : error("inconsistent linear system") {}
};

}  // namespace polypde

#endif
