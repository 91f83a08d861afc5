#pragma once

#include <stdexcept>
#include <string>

namespace braidinv {

// Malformed input text (braid words, polynomial expressions, CLI values).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Well-formed input outside an operation's domain: non-knot closures,
// mismatched strand counts, polynomials that cannot be normalized.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string &msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed.  This is never caused by user input;
// it indicates a bug in the library itself.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string &msg) : std::logic_error(msg) {}
};

}  // namespace braidinv
