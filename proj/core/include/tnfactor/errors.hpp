#pragma once

#include <stdexcept>
#include <string>

namespace tnfactor {

// Single exception type for all domain and precondition violations.
// The message names the violated condition (and the offending index
// where one exists) so callers can surface it verbatim.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tnfactor
