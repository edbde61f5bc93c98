#pragma once

#include <stdexcept>
#include <string>

namespace minterp {

enum class Errc {
  non_resolvable,
  out_of_domain,
  range_escape,
  domain_mismatch,
  zero_on_domain,
  no_branch_gap,
  unit_disk_violation,
  no_admissible_permutation,
  not_unit_normal,
  not_orthogonal,
  denominator_vanishes,
  b0_vanishes,
  non_convergence,
  imaginary_derivative_residual,
  degenerate_constants,
  unknown_reference,
  parse_error,
  schema_error,
  io_error,
};

const char* errc_name(Errc c);

// Runtime failure with a machine-checkable code and, once the full pipeline
// runs, the stage that raised it.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }
  void set_stage(const std::string& s) { stage_ = s; }

private:
  Errc code_;
  std::string stage_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace minterp
