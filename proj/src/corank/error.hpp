#pragma once

#include <stdexcept>
#include <string>

namespace corank {

// Error categories. Values track the corank_status codes of the C API
// (see include/corank.h); capi.cpp static_asserts the correspondence.
enum class Errc : int {
  ok = 0,
  invalid_argument = 1,
  empty_graph = 2,
  invalid_weight = 3,
  dangling_node = 4,
  zero_teleport_mass = 5,
  non_convergence = 6,
  too_large_for_direct_solve = 7,
  too_few_observations = 8,
  undefined_correlation = 9,
  insufficient_bins = 10,
  author_set_mismatch = 11,
  invalid_k = 12,
  io_error = 13,
  no_valid_records = 14,
  parse_error = 15,
  invalid_count = 16,
  duplicate_author = 17,
  empty_award_list = 18,
  usage_error = 19,
  internal = 20,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown when power iteration hits the iteration cap; carries the last
// residual and the damping value it was running at.
class ConvergenceError : public Error {
 public:
  ConvergenceError(double damping, double residual, const std::string& message)
      : Error(Errc::non_convergence, message),
        damping_(damping),
        residual_(residual) {}

  double damping() const noexcept { return damping_; }
  double residual() const noexcept { return residual_; }

 private:
  double damping_;
  double residual_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

const char* errc_name(Errc code) noexcept;

// CLI exit classes: 0 success, 1 input error, 2 numerical failure, 3 usage.
int exit_class(Errc code) noexcept;

}  // namespace corank
