#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ellgraph {

// All library failures carry a short machine-readable kind ("LoopEdge",
// "EmptyInterior", ...) next to the human-readable message. The CLI maps
// kinds to diagnostics and exit codes; tests match on kinds.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void raise(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace ellgraph
