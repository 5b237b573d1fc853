#pragma once

// Truncated second cohomology on a window: the space of window-supported
// antisymmetric forms satisfying every closure-guarded cocycle identity,
// modulo coboundaries of window-supported functionals.  Constraint rows and
// coboundary columns both split by (degree sum, loop sum) sector, so ranks
// are computed block by block; an independent full-matrix oracle cross-checks
// the same dimensions in the acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "hvloop/forms.hpp"

namespace hvloop {

struct H2ClassRecord {
    long k = 0;      // loop weight
    int family = 1;  // 1, 2 or 3
    bool nonzero_on_window = false;
    bool independent = false;  // appending it raises the coboundary rank by 1
};

struct H2Report {
    std::int64_t basis_size = 0;
    std::int64_t pair_count = 0;
    std::int64_t constraint_rows = 0;  // nonzero guarded cocycle rows
    std::int64_t dim_cocycles = 0;
    std::int64_t dim_coboundaries = 0;
    std::int64_t dim_quotient = 0;
    std::vector<H2ClassRecord> classes;  // reachable loop weights x families
    std::int64_t matched_count = 0;      // classes nonzero and independent
    std::string note;
};

H2Report truncated_h2(const Window& w, BracketConvention conv = BracketConvention::paper);

}  // namespace hvloop
