#pragma once

// Audit of a published left-symmetric multiplication table on the Witt slice
// L(n,0): the table's coefficient is evaluated exactly on a degree cube, and
// its left-symmetry and its commutator-compatibility against both bracket
// orientations are *reported as facts*, never assumed.  The table as printed
// is not left-symmetric and its commutator matches neither orientation of the
// bracket normalization used here (it appears normalized for a different
// convention), so every record carries kind "verdict": the audit informs, it
// does not gate.

#include <string>
#include <vector>

#include "hvloop/check.hpp"
#include "hvloop/scalar.hpp"

namespace hvloop {

struct WittLsaParams {
    GaussianRational alpha_param;  // the table's free parameter (not a degree)
    GaussianRational eps;          // must pass validate_epsilon
};

/// Coefficient of L(m+n,0) in L(m,0) o L(n,0) per the audited table:
/// (alpha_param + n + alpha_param*eps*m) / (1 + eps*(m+n)).
/// Throws std::domain_error when eps is inadmissible (the integer-degree
/// denominator is then guaranteed nonzero).
GaussianRational witt_lsa_product(long mdeg, long ndeg, const WittLsaParams& wp);

struct WittAuditReport {
    WittLsaParams params;
    long degree_bound = 0;
    std::vector<CheckRecord> checks;  // left-symmetry, then both commutator comparisons
    std::string compatible_with;      // "paper" | "reversed" | "both" | "none"
};

/// Sweeps left-symmetry of the table over |m|,|n|,|l| <= degree_bound and the
/// commutator against each bracket orientation over |m|,|n| <= degree_bound.
/// Deterministic; throws std::domain_error for inadmissible eps and
/// std::invalid_argument for a negative bound.
WittAuditReport witt_convention_audit(const WittLsaParams& wp, long degree_bound);

}  // namespace hvloop
