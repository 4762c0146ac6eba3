#include "corank/error.hpp"

namespace corank {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ok: return "ok";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::empty_graph: return "empty_graph";
    case Errc::invalid_weight: return "invalid_weight";
    case Errc::dangling_node: return "dangling_node";
    case Errc::zero_teleport_mass: return "zero_teleport_mass";
    case Errc::non_convergence: return "non_convergence";
    case Errc::too_large_for_direct_solve: return "too_large_for_direct_solve";
    case Errc::too_few_observations: return "too_few_observations";
    case Errc::undefined_correlation: return "undefined_correlation";
    case Errc::insufficient_bins: return "insufficient_bins";
    case Errc::author_set_mismatch: return "author_set_mismatch";
    case Errc::invalid_k: return "invalid_k";
    case Errc::io_error: return "io_error";
    case Errc::no_valid_records: return "no_valid_records";
    case Errc::parse_error: return "parse_error";
    case Errc::invalid_count: return "invalid_count";
    case Errc::duplicate_author: return "duplicate_author";
    case Errc::empty_award_list: return "empty_award_list";
    case Errc::usage_error: return "usage_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

int exit_class(Errc code) noexcept {
  switch (code) {
    case Errc::ok:
      return 0;
    case Errc::non_convergence:
      return 2;
    case Errc::usage_error:
    case Errc::invalid_argument:
    case Errc::invalid_k:
      return 3;
    default:
      return 1;
  }
}

}  // namespace corank
