#pragma once

namespace hvloop {

inline constexpr const char* kToolName = "hvloop";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "hv-loop-report/1";

}  // namespace hvloop
