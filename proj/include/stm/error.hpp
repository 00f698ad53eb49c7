#pragma once

#include <stdexcept>
#include <string>

namespace stm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an iterative fit fails to reach its tolerance within the
/// allowed number of iterations. Carries the last two iterates' discrepancy.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last, double previous)
      : Error(what), last_delta(last), previous_delta(previous) {}
  double last_delta;
  double previous_delta;
};

void log_warn(const std::string& msg);
void log_info(const std::string& msg);

}  // namespace stm
