#pragma once

#include <stdexcept>
#include <string>

namespace dgr {

// Malformed arguments: self-loops, out-of-range vertices, violated parameter
// guards, unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The invariant is only defined on strong digraphs.
class NotStrong : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Some vertex cannot be reached from the requested source.
class Unreachable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request that has no answer: an empty construction family, a size above
// the family maximum, an enumeration beyond the exhaustive ceiling.
class Infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace dgr
