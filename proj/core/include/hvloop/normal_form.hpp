#pragma once

// The identity chain a normalized cocycle must satisfy, pairing family by
// pairing family (LL, LH, HH):
//   * weight dependence  — the diagonal pairing value depends on the loop
//     indices only through their sum i+j;
//   * degree zero        — the degree-zero diagonal pairing vanishes;
//   * closed form        — the whole pairing is determined by one anchor
//     degree (2 for LL and LH, 1 for HH):
//       phi(L(a,i), L(-a,j)) = (a^3-a)/6 * phi(L(2,.), L(-2,.))|_{i+j}
//       phi(L(a,i), H(-a,j)) = (a^2-a)/2 * phi(L(2,.), H(-2,.))|_{i+j}
//       phi(H(a,i), H(-a,j)) =  a        * phi(H(1,.), H(-1,.))|_{i+j}
//     and vanishes off degree-sum zero.
// Precondition records (cocycle identity, anchor conditions) are reported in
// a distinct failure class so a non-normalized input is distinguishable from
// a normalized one violating the chain.

#include <vector>

#include "hvloop/check.hpp"
#include "hvloop/forms.hpp"
#include "hvloop/normalization.hpp"

namespace hvloop {

struct NormalFormReport {
    std::vector<CheckRecord> checks;
    bool ok() const { return all_ok(checks); }
};

NormalFormReport verify_normal_form(const BilinearForm& phi, const Window& w,
                                    BracketConvention conv = BracketConvention::paper);

}  // namespace hvloop
