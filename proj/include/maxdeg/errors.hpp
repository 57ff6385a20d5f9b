#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxdeg {

// A caller broke a documented precondition (bad vertex id, odd point
// total, non-simple multigraph passed where a graph is required, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine (enumeration, game search, model checking) would
// exceed its configured work or size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The rejection sampler used up its restart allowance without producing a
// simple graph.
class RestartBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text or sentence text. `position` is a 0-based byte offset
// for sentences and a 1-based line number for graph files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace maxdeg
