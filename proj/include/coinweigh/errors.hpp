#pragma once

#include <stdexcept>
#include <string>

namespace coinweigh {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coinweigh
