#pragma once

// Normalization of 2-cocycles: subtracting the coboundary of a canonically
// chosen functional drives the four anchor pairings
//   phi(L(0,0), L(a,i)),  phi(L(1,0), L(-1,i)),
//   phi(L(0,0), H(a,i)),  phi(L(1,0), H(-1,i))
// to zero.  The weight-zero H entry of that functional admits two sign
// variants; only one of them actually clears the last anchor family, and the
// resolver below names it by computation rather than assumption.

#include <vector>

#include "hvloop/check.hpp"
#include "hvloop/forms.hpp"

namespace hvloop {

enum class NormalizationSign {
    printed,   // f(H(0,i)) = -psi(L(1,0), H(-1,i))
    corrected  // f(H(0,i)) = +psi(L(1,0), H(-1,i))
};

/// The normalizing functional of psi on the window basis:
///   f(L(a,i)) = -(1/a) psi(L(0,0), L(a,i))   for a != 0
///   f(L(0,i)) = (1/2)  psi(L(1,0), L(-1,i))
///   f(H(a,i)) = -(1/a) psi(L(0,0), H(a,i))   for a != 0
///   f(H(0,i)) = sign * psi(L(1,0), H(-1,i))
LinearFunctional normalizing_functional(const BilinearForm& psi, const Window& w, NormalizationSign sign);

/// psi minus the coboundary of its normalizing functional, materialized on w.
BilinearForm normalize(const BilinearForm& psi, const Window& w, NormalizationSign sign);

/// The four anchor-vanishing sweeps for a form on the window.
std::vector<CheckRecord> anchor_conditions(const BilinearForm& phi, const Window& w);

struct NormalizationResolution {
    bool printed_ok = false;
    bool corrected_ok = false;
    std::string printed_witness;    // first failing anchor instance, if any
    std::string corrected_witness;

    /// "printed", "corrected", "both" or "neither".
    std::string verdict() const;

    /// True when exactly one variant clears the anchors.
    bool unique() const { return printed_ok != corrected_ok; }
};

/// Normalize psi under both sign variants and report which of them satisfies
/// every anchor condition on the window.
NormalizationResolution resolve_normalization_sign(const BilinearForm& psi, const Window& w);

}  // namespace hvloop
