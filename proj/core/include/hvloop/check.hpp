#pragma once

// The uniform result record every sweep and verdict in the workbench reports
// through.  Counts are exact; witnesses carry the first (or, where a sweep
// says so, the largest) violating instance with its exact residual text.

#include <cstdint>
#include <string>
#include <vector>

namespace hvloop {

struct CheckRecord {
    std::string name;
    std::string statement;           // identity or property in plain text
    std::string kind = "identity";   // "identity" | "precondition" | "verdict"
    std::int64_t domain = 0;         // instances examined
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::string first_witness;       // empty when nothing failed
    std::string first_residual;
    std::string note;

    bool ok() const { return failed == 0; }

    /// Tally one instance; witness/residual are recorded for the first failure.
    void tally(bool pass, const std::string& witness, const std::string& residual) {
        ++domain;
        if (pass) {
            ++passed;
        } else {
            ++failed;
            if (failed == 1) {
                first_witness = witness;
                first_residual = residual;
            }
        }
    }
};

/// True when every record with kind != "verdict" passed.
bool all_ok(const std::vector<CheckRecord>& records);

}  // namespace hvloop
