#pragma once

#include <stdexcept>
#include <string>

namespace snw {

// Every precondition and structural failure in the library maps to one of
// these codes so callers (and tests) can dispatch without string matching.
enum class errc {
    loop_edge,
    two_cycle,
    duplicate_edge,
    vertex_out_of_range,
    bad_vertex_count,
    empty_set,
    non_positive_lambda,
    too_large_for_exact,
    empty_first_neighborhood,
    not_a_counterexample,
    no_counterexample_component,
    bad_m,
    bad_tolerance,
    no_sign_change,
    index_out_of_range,
    universe_too_large,
    too_large_for_canonical,
    parse_error,
    invariant_violation,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace snw
