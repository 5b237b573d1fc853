#pragma once
// Run configuration shared by every CLI subcommand: the window, the scalar
// parameters, the sign-variant selectors, and the determinism knobs.  A config
// is assembled in three layers -- built-in defaults, then an optional JSON
// config file, then command-line flags -- and validated once at the end.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "hvloop/algebra.hpp"
#include "hvloop/scalar.hpp"

namespace hvloop {

/// Raised for malformed or inconsistent configuration; the CLI maps it to the
/// usage-error exit code.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Which c-coefficient variant the product-table subcommands instantiate.
/// `automatic` resolves the sign by sweeping both variants first.
enum class CSignMode { plus, minus, automatic };

/// Which normalization sign the cocycle subcommands apply.  `automatic`
/// resolves it by testing both candidates against the anchor conditions.
enum class NormSignMode { printed, corrected, automatic };

std::string to_string(CSignMode m);
std::string to_string(NormSignMode m);
std::string to_string(BracketConvention c);

/// Parsers for the textual forms above; throw ConfigError on unknown values.
CSignMode parse_c_sign_mode(const std::string& text);
NormSignMode parse_norm_sign_mode(const std::string& text);
BracketConvention parse_convention(const std::string& text);

struct Config {
    Window window{Rational(3), -2, 2, {Rational(1)}};
    GaussianRational epsilon{Rational(2, 3)};
    GaussianRational m{Rational(1)};
    CSignMode c_sign = CSignMode::automatic;
    NormSignMode normalization_sign = NormSignMode::automatic;
    BracketConvention convention = BracketConvention::paper;
    std::uint64_t seed = 0;
    /// Cap on the number of ordered triples any single exhaustive sweep
    /// visits; absent means no cap.  When a sweep is capped it samples a
    /// seeded subset and says so in the record's note.
    std::optional<std::int64_t> triple_budget;
};

/// The built-in defaults spelled out above.
Config default_config();

/// Reads a JSON config file on top of `base`.  Recognized keys:
///   window:   { degree_bound, degree_generators, loop_min, loop_max }
///   epsilon, m:                scalar text ("2/3", "1i", "1+2i")
///   c_sign:                    "plus" | "minus" | "auto"
///   normalization_sign:        "printed" | "corrected" | "auto"
///   convention:                "paper" | "reversed"
///   seed:                      unsigned integer
///   triple_budget:             positive integer or null
/// degree_bound and the entries of degree_generators are rational text or
/// JSON integers.  Unknown keys are rejected.  Throws ConfigError.
Config load_config_file(const std::string& path, const Config& base);

/// Validates the assembled configuration: epsilon admissibility (the reported
/// reason names the offending property, e.g. an integer inverse), window
/// sanity, budget positivity.  Throws ConfigError.
void validate_config(const Config& c);

}  // namespace hvloop
