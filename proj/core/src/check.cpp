#include "hvloop/check.hpp"

namespace hvloop {

bool all_ok(const std::vector<CheckRecord>& records) {
    for (const auto& r : records) {
        if (r.kind != "verdict" && !r.ok()) return false;
    }
    return true;
}

}  // namespace hvloop
