#pragma once

// The twelve coefficient identities that characterize a graded product table
// as left-symmetric and bracket-compatible: three pair identities (antisymmetry
// of a to the degree difference, the b/c pairing, symmetry of d and e) and nine
// composition identities over index triples.  A product table satisfies all
// twelve on a window exactly when its left-symmetry and compatibility residuals
// vanish there; the sweeps below quantify both sides over aligned domains so
// the equivalence is testable instance by instance.
//
// resolve_c_sign settles the sign of the Kronecker-supported c coefficient
// empirically: both signs are swept and the surviving variant is reported with
// a failing witness for the rejected one.

#include <string>
#include <vector>

#include "hvloop/algebra.hpp"
#include "hvloop/check.hpp"
#include "hvloop/lsa.hpp"

namespace hvloop {

struct StructureEquationReport {
    std::vector<CheckRecord> equations;  // twelve, fixed order

    bool ok() const;
};

/// Sweeps all twelve identities: the pair identities over all in-window
/// (degree, loop) argument pairs, the composition identities over index
/// triples whose three pairwise sums stay in the window.  Each record's
/// witness is the largest violation (squared norm of the residual, earliest
/// instance on ties).
StructureEquationReport structure_equation_residuals(const StructureFunctions& f, const Window& w);

/// Left-symmetry residual sweep over ordered basis triples whose pairwise
/// degree and loop sums stay in the window.
CheckRecord left_symmetry_sweep(const StructureFunctions& f, const Window& w);

/// Compatibility residual sweep over ordered basis pairs whose degree and
/// loop sums stay in the window.
CheckRecord compatibility_sweep(const StructureFunctions& f, const Window& w, BracketConvention conv);

/// Copy of `f` with the chosen coefficient table ('a'..'e') shifted by `delta`
/// at one argument tuple; used for negative controls.  Throws
/// std::invalid_argument for an unknown slot.
StructureFunctions perturb_structure_function(const StructureFunctions& f, char slot, const Rational& x1,
                                              long l1, const Rational& x2, long l2,
                                              const GaussianRational& delta);

enum class CSignVerdict { plus, minus, both, neither };

std::string to_string(CSignVerdict v);

/// Outcome of one (sign, m sample) sweep inside resolve_c_sign.
struct CSignVariantOutcome {
    CSign sign = CSign::plus;
    GaussianRational m;
    bool ok = true;
    CheckRecord first_failure;  // meaningful only when !ok
};

struct CSignResolution {
    CSignVerdict verdict = CSignVerdict::neither;
    bool plus_ok = false;
    bool minus_ok = false;
    std::vector<CSignVariantOutcome> outcomes;  // plus samples first, then minus, in sample order

    bool unique() const { return verdict == CSignVerdict::plus || verdict == CSignVerdict::minus; }
};

/// Runs the twelve-equation sweep plus the left-symmetry and compatibility
/// sweeps for both c-signs across the m samples; a variant survives when every
/// check passes for every sample.  Throws std::domain_error for inadmissible
/// eps and std::invalid_argument for an empty sample list.
CSignResolution resolve_c_sign(const GaussianRational& eps, const std::vector<GaussianRational>& m_samples,
                               const Window& w);

}  // namespace hvloop
