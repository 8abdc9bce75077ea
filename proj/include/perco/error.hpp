#pragma once

#include <stdexcept>
#include <string>

namespace perco {

/// Library error. The kind drives CLI diagnostics and exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    Input,        // malformed spec, bad probability, bad ids
    Geometry,     // crossings, disconnected graph, bad boundary cycle
    Guard,        // enumeration or combinatorial size guard
    Domain,       // precondition on a value (config outside Gamma, null event)
    Internal,     // consistency failure that signals a bug
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace perco
