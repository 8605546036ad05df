#ifndef EBWT_ERROR_HPP
#define EBWT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ebwt {

// Malformed or out-of-contract input (bad characters, empty words, parse
// failures, non-Lyndon multiset entries).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured resource guard (table cells,
// closure size, enumeration budget).
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ebwt

#endif  // EBWT_ERROR_HPP
