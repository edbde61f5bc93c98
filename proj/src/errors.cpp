#include "minterp/errors.hpp"

namespace minterp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_resolvable: return "NonResolvable";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::range_escape: return "RangeEscape";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::zero_on_domain: return "ZeroOnDomain";
    case Errc::no_branch_gap: return "NoBranchGap";
    case Errc::unit_disk_violation: return "UnitDiskViolation";
    case Errc::no_admissible_permutation: return "NoAdmissiblePermutation";
    case Errc::not_unit_normal: return "NotUnitNormal";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::denominator_vanishes: return "DenominatorVanishes";
    case Errc::b0_vanishes: return "B0Vanishes";
    case Errc::non_convergence: return "NonConvergence";
    case Errc::imaginary_derivative_residual: return "ImaginaryDerivativeResidual";
    case Errc::degenerate_constants: return "DegenerateConstants";
    case Errc::unknown_reference: return "UnknownReference";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace minterp
