#pragma once

#include <stdexcept>
#include <string>

namespace ssp {

// Bad mathematical input (zero entries, p = 2, singular Gram, ...).
// The CLI maps this family to exit code 2.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Enumeration would exceed the desk-scale caps.  CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// The brute-force oracle could not certify a sign at the requested depth.
// Never silently downgraded to a wrong answer.
class inconclusive_error : public std::runtime_error {
 public:
  explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

// Bounded search ran out of candidates.
class not_found_error : public std::runtime_error {
 public:
  explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

// Selects between the OpenMP kernel and the serial reference path.
// Results must be identical; tests compare the two, the bench times them.
enum class ExecPolicy { serial, parallel };

}  // namespace ssp
