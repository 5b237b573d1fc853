#pragma once

// Step-by-step replay of the uniqueness derivation behind the verified
// product family.  The b and c coefficients are rescaled into
//
//   B(x1,l1,x2,l2) = (1+eps(x1+x2))/(1+eps x2) * b(x1,l1,x2,l2)
//   C(x1,l1,x2,l2) = (1+eps(x1+x2))/(1+eps x2) * c(x1,l1,x2,l2)
//
// and the derivation's chain of specializations is checked as exact identities
// on the window, ending with recovery of the family parameter m from the
// diagonal anchor C(1,1,-1,-1).  Additive tweaks to B or C can be injected
// before the sweep as negative controls; failed steps stay in the transcript
// with their witnesses.

#include <functional>
#include <vector>

#include "hvloop/algebra.hpp"
#include "hvloop/check.hpp"
#include "hvloop/lsa.hpp"

namespace hvloop {

/// The rescaled coefficient pair, total on (degree, loop, degree, loop).
struct RescaledPair {
    using Evaluator = std::function<GaussianRational(const Rational&, long, const Rational&, long)>;
    Evaluator B;
    Evaluator C;
};

/// Rescales a product table's b and c; evaluators throw std::domain_error when
/// a rescaling denominator 1 + eps*degree vanishes (impossible for admissible
/// eps and integral degrees).
RescaledPair rescaled_pair(const StructureFunctions& f, const GaussianRational& eps);

/// Additive perturbation of one rescaled table entry.
struct RescaledTweak {
    char slot = 'C';  // 'B' or 'C'
    Rational x1;
    long l1 = 0;
    Rational x2;
    long l2 = 0;
    GaussianRational delta;
};

struct DerivationTranscript {
    GaussianRational eps;
    GaussianRational m_target;
    GaussianRational recovered_m;
    bool anchor_available = false;  // degrees +-1 and loops +-1 realizable
    std::vector<CheckRecord> steps;

    bool ok() const;
};

/// Replays the derivation for the product family at (eps, m_target) on the
/// window; `tweaks` are applied to the rescaled tables first.  The sign
/// selects the c-coefficient variant to instantiate: the verified family
/// (plus) passes every step, while the rejected variant (minus) breaks the
/// composition identities and recovers -m, so forcing it acts as a built-in
/// negative control.  Throws std::domain_error for inadmissible eps,
/// std::invalid_argument for a tweak with an unknown slot.
DerivationTranscript replay_derivation(const Window& w, const GaussianRational& eps,
                                       const GaussianRational& m_target,
                                       const std::vector<RescaledTweak>& tweaks,
                                       CSign sign = CSign::plus);
DerivationTranscript replay_derivation(const Window& w, const GaussianRational& eps,
                                       const GaussianRational& m_target);

}  // namespace hvloop
