#pragma once

#include <stdexcept>
#include <string>

namespace sflow {

/// Malformed textual input (family strings, rational literals, weight literals).
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the mathematical input is violated (bad family
/// parameters, weight outside its lattice, level/parameter mismatch, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formula denominator vanishes at the requested level.
class critical_level_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Internal consistency violation: the static catalog produced data that
/// contradicts a structural invariant. Never expected in a correct build.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sflow
