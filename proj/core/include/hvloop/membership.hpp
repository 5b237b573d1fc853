#pragma once

// Exact coboundary membership on a window: is a given antisymmetric form the
// coboundary of some functional supported inside the window?  The linear
// system constrains every in-window pair (x, y):
//     f([x, y]) = psi(x, y),
// where f is extended by zero outside the window, so bracket components that
// leave the window contribute nothing to the left-hand side.  Either outcome
// carries an exactly re-verifiable certificate.

#include <optional>
#include <utility>
#include <vector>

#include "hvloop/forms.hpp"

namespace hvloop {

struct CoboundaryCertificate {
    bool coboundary = false;

    /// When coboundary: a functional with psi == (d functional) on every
    /// in-window pair.
    LinearFunctional functional;

    /// When not: weights y on constraint rows (labeled by their pair) such
    /// that sum_p y_p * row_p is the zero functional constraint while
    /// sum_p y_p * psi(p) != 0.
    std::vector<std::pair<BilinearForm::Key, GaussianRational>> witness;

    /// The nonzero value sum_p y_p * psi(p) of the witness combination.
    GaussianRational witness_value;
};

CoboundaryCertificate is_coboundary(const BilinearForm& psi, const Window& w,
                                    BracketConvention conv = BracketConvention::paper);

/// Re-verify a certificate against psi from scratch.  For the positive case
/// this checks psi == (d functional) on every in-window pair; for the
/// negative case it re-derives the witness combination exactly.
bool reverify_certificate(const CoboundaryCertificate& cert, const BilinearForm& psi, const Window& w,
                          BracketConvention conv = BracketConvention::paper);

}  // namespace hvloop
