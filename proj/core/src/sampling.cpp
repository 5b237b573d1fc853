#include "hvloop/sampling.hpp"

#include <stdexcept>

namespace hvloop {

std::uint64_t SampleStream::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SampleStream::below needs a positive range");
    return next() % n;
}

long SampleStream::integer_in(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("SampleStream::integer_in needs lo <= hi");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
}

Rational small_rational(SampleStream& s) {
    const long p = s.integer_in(-9, 9);
    const long q = s.integer_in(1, 9);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational small_nonzero_rational(SampleStream& s) {
    // Fixed draw count (magnitude, sign, denominator) so call sites consume a
    // predictable amount of the stream.
    const long mag = s.integer_in(1, 9);
    const long p = s.coin() ? mag : -mag;
    const long q = s.integer_in(1, 9);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

GaussianRational small_scalar(SampleStream& s) {
    const Rational re = small_rational(s);
    if (s.below(3) == 0) return GaussianRational(re, small_rational(s));
    return GaussianRational(re);
}

GaussianRational small_nonzero_scalar(SampleStream& s) {
    const Rational re = small_nonzero_rational(s);
    if (s.below(3) == 0) return GaussianRational(re, small_rational(s));
    return GaussianRational(re);
}

LinearFunctional random_functional(SampleStream& s, const Window& w, int support_target) {
    const std::vector<BasisIndex> basis = enumerate_basis(w);
    LinearFunctional f;
    for (int t = 0; t < support_target; ++t) {
        const std::size_t idx = static_cast<std::size_t>(s.below(basis.size()));
        f.set(basis[idx], small_nonzero_scalar(s));
    }
    return f;
}

RandomCocycle random_class_combination(SampleStream& s, const Window& w) {
    RandomCocycle out;
    const std::vector<long> weights = reachable_loop_weights(w);
    for (long k : weights) {
        for (int family = 1; family <= 3; ++family) {
            // Keep roughly a third of the classes; the draw happens for every
            // slot so the stream position is independent of the outcomes.
            if (s.below(3) != 0) continue;
            const GaussianRational coeff = small_nonzero_scalar(s);
            out.class_coefficients[{k, family}] = coeff;
            BilinearForm piece = canonical_cocycle(k, family).on(w);
            piece *= coeff;
            out.psi += piece;
        }
    }
    if (out.class_coefficients.empty() && !weights.empty()) {
        // Guarantee a nonzero coefficient vector even on an unlucky seed.
        const GaussianRational one{Rational(1)};
        out.class_coefficients[{weights.front(), 3}] = one;
        out.psi += canonical_cocycle(weights.front(), 3).on(w);
    }
    return out;
}

RandomCocycle random_cocycle(SampleStream& s, const Window& w, BracketConvention conv) {
    RandomCocycle out = random_class_combination(s, w);
    LinearFunctional f = random_functional(s, w, 4);
    // Force a nonzero value on a degree-zero H symbol: that is exactly the
    // slot the two candidate normalizations disagree on, so resolving the
    // normalization sign against this cocycle is never vacuous.
    if (w.contains_degree(Rational(0))) {
        const long i0 = s.integer_in(w.loop_min, w.loop_max);
        f.set(H(Rational(0), i0), small_nonzero_scalar(s));
    }
    out.shift = f;
    out.psi += coboundary_of(f, w, conv);
    return out;
}

}  // namespace hvloop
