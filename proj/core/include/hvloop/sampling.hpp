#pragma once
// Seeded deterministic sampling.
//
// Every randomized sweep in the project draws through this header.  Draws use
// raw mt19937_64 outputs reduced by modulo; the standard distribution adapters
// are deliberately avoided because their output is not pinned down by the
// standard, and identical seeds must produce identical reports on every
// platform.  Modulo bias is irrelevant at the tiny ranges used here.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hvloop/algebra.hpp"
#include "hvloop/forms.hpp"
#include "hvloop/scalar.hpp"

namespace hvloop {

class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Draw in [0, n).  n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Draw in [lo, hi] inclusive.
    long integer_in(long lo, long hi);

    bool coin() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Rational p/q with p in [-9, 9] and q in [1, 9].
Rational small_rational(SampleStream& s);

/// Same, but p != 0.
Rational small_nonzero_rational(SampleStream& s);

/// Possibly-complex scalar with small rational parts (imaginary part is zero
/// in two draws out of three, to keep most sample material real).
GaussianRational small_scalar(SampleStream& s);

/// Same, but never zero.
GaussianRational small_nonzero_scalar(SampleStream& s);

/// In-place Fisher-Yates shuffle driven by the stream.  Spelled out by hand:
/// std::shuffle's draw pattern is implementation-defined.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, SampleStream& s) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(s.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

/// Sparse linear functional supported on roughly `support_target` window basis
/// symbols (repeat draws may collide), with nonzero values.
LinearFunctional random_functional(SampleStream& s, const Window& w, int support_target);

/// A random window cocycle together with the recipe that built it.
struct RandomCocycle {
    BilinearForm psi;
    /// Coefficient of the canonical family `family` at loop weight `k`,
    /// keyed by (k, family).  Absent key = coefficient zero.
    std::map<std::pair<long, int>, GaussianRational> class_coefficients;
    /// The functional whose coboundary was mixed in (zero for pure
    /// combinations of canonical families).
    LinearFunctional shift;
};

/// Combination of canonical cocycle families over the window's reachable loop
/// weights with seeded coefficients; at least one coefficient is nonzero.
/// No coboundary part.
RandomCocycle random_class_combination(SampleStream& s, const Window& w);

/// Class combination plus the coboundary of a random functional.  The
/// functional always carries a nonzero value on some degree-zero H symbol, so
/// the two candidate normalizations of the result genuinely disagree and the
/// sign resolution has material to work with.
RandomCocycle random_cocycle(SampleStream& s, const Window& w,
                             BracketConvention conv = BracketConvention::paper);

}  // namespace hvloop
