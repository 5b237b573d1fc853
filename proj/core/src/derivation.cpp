#include "hvloop/derivation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hvloop {

namespace {

std::string pair_witness(const Rational& x1, long l1, const Rational& x2, long l2) {
    return "(" + to_string(x1) + "," + std::to_string(l1) + "," + to_string(x2) + "," + std::to_string(l2) +
           ")";
}

/// Pairwise degree and loop sums of the triple stay in the window.
bool sums_closed(const Window& w, const Rational& alpha, long i, const Rational& beta, long j,
                 const Rational& gamma, long k) {
    return w.contains_degree(alpha + beta) && w.contains_degree(beta + gamma) &&
           w.contains_degree(alpha + gamma) && w.contains_loop(i + j) && w.contains_loop(j + k) &&
           w.contains_loop(i + k);
}

RescaledPair::Evaluator with_tweak(RescaledPair::Evaluator inner, const RescaledTweak& t) {
    return [inner = std::move(inner), t](const Rational& y1, long m1, const Rational& y2,
                                         long m2) -> GaussianRational {
        GaussianRational v = inner(y1, m1, y2, m2);
        if (y1 == t.x1 && m1 == t.l1 && y2 == t.x2 && m2 == t.l2) v += t.delta;
        return v;
    };
}

}  // namespace

RescaledPair rescaled_pair(const StructureFunctions& f, const GaussianRational& eps) {
    auto scale = [eps](const Rational& x1, const Rational& x2) -> GaussianRational {
        GaussianRational denom = GaussianRational(1) + eps * GaussianRational(x2);
        if (denom.is_zero()) {
            throw std::domain_error("rescaling denominator 1+eps*degree vanished at degree " + to_string(x2));
        }
        return (GaussianRational(1) + eps * GaussianRational(Rational(x1 + x2))) / denom;
    };
    RescaledPair rp;
    rp.B = [scale, b = f.b](const Rational& x1, long l1, const Rational& x2, long l2) {
        return scale(x1, x2) * b(x1, l1, x2, l2);
    };
    rp.C = [scale, c = f.c](const Rational& x1, long l1, const Rational& x2, long l2) {
        return scale(x1, x2) * c(x1, l1, x2, l2);
    };
    return rp;
}

bool DerivationTranscript::ok() const { return all_ok(steps); }

DerivationTranscript replay_derivation(const Window& w, const GaussianRational& eps,
                                       const GaussianRational& m_target,
                                       const std::vector<RescaledTweak>& tweaks, CSign sign) {
    LsaParams params{eps, m_target, sign, BracketConvention::paper};
    StructureFunctions f = structure_functions(params);

    RescaledPair rp = rescaled_pair(f, eps);
    for (const RescaledTweak& t : tweaks) {
        if (t.slot == 'B') {
            rp.B = with_tweak(std::move(rp.B), t);
        } else if (t.slot == 'C') {
            rp.C = with_tweak(std::move(rp.C), t);
        } else {
            throw std::invalid_argument("unknown rescaled slot '" + std::string(1, t.slot) + "'");
        }
    }
    const auto& B = rp.B;
    const auto& C = rp.C;

    const std::vector<Rational> degrees = w.degrees();
    const std::vector<long> loops = w.loops();
    const bool origin_ok = w.contains_degree(0) && w.contains_loop(0);
    const bool anchor_ok = w.contains_degree(1) && w.contains_degree(-1) && w.contains_loop(1) &&
                           w.contains_loop(-1);

    DerivationTranscript tr;
    tr.eps = eps;
    tr.m_target = m_target;
    tr.anchor_available = anchor_ok;

    // Step 1: the pair identity tying B and C back to the bracket coefficient.
    {
        CheckRecord rec;
        rec.name = "rescaled-pair-identity";
        rec.statement =
            "(1+eps beta) B(alpha,i,beta,j) - (1+eps alpha) C(beta,j,alpha,i) = -beta (1+eps(alpha+beta))";
        for (const Rational& alpha : degrees) {
            for (long i : loops) {
                for (const Rational& beta : degrees) {
                    for (long j : loops) {
                        GaussianRational residual =
                            (GaussianRational(1) + eps * GaussianRational(beta)) * B(alpha, i, beta, j) -
                            (GaussianRational(1) + eps * GaussianRational(alpha)) * C(beta, j, alpha, i) +
                            GaussianRational(beta) *
                                (GaussianRational(1) + eps * GaussianRational(Rational(alpha + beta)));
                        rec.tally(residual.is_zero(),
                                  "(alpha,i)=(" + to_string(alpha) + "," + std::to_string(i) +
                                      "), (beta,j)=(" + to_string(beta) + "," + std::to_string(j) + ")",
                                  to_string(residual));
                    }
                }
            }
        }
        tr.steps.push_back(std::move(rec));
    }

    // Steps 2 and 3: the two composition identities for the rescaled tables.
    {
        CheckRecord bb;
        bb.name = "rescaled-b-composition";
        bb.statement =
            "B(beta,j,gamma,k) B(alpha,i,beta+gamma,j+k) - B(alpha,i,gamma,k) B(beta,j,alpha+gamma,i+k) = "
            "(alpha-beta) B(alpha+beta,i+j,gamma,k)";
        CheckRecord cb;
        cb.name = "rescaled-c-composition";
        cb.statement =
            "C(beta,j,gamma,k) B(alpha,i,beta+gamma,j+k) + gamma C(beta,j,alpha+gamma,i+k) = "
            "-beta C(alpha+beta,i+j,gamma,k)";
        for (const Rational& alpha : degrees) {
            for (long i : loops) {
                for (const Rational& beta : degrees) {
                    for (long j : loops) {
                        for (const Rational& gamma : degrees) {
                            for (long k : loops) {
                                if (!sums_closed(w, alpha, i, beta, j, gamma, k)) continue;
                                const Rational bg = beta + gamma;
                                const Rational ag = alpha + gamma;
                                const Rational ab = alpha + beta;
                                const std::string witness = "(alpha,i)=(" + to_string(alpha) + "," +
                                                            std::to_string(i) + "), (beta,j)=(" +
                                                            to_string(beta) + "," + std::to_string(j) +
                                                            "), (gamma,k)=(" + to_string(gamma) + "," +
                                                            std::to_string(k) + ")";
                                GaussianRational b_residual =
                                    B(beta, j, gamma, k) * B(alpha, i, bg, j + k) -
                                    B(alpha, i, gamma, k) * B(beta, j, ag, i + k) -
                                    GaussianRational(Rational(alpha - beta)) * B(ab, i + j, gamma, k);
                                bb.tally(b_residual.is_zero(), witness, to_string(b_residual));
                                GaussianRational c_residual =
                                    C(beta, j, gamma, k) * B(alpha, i, bg, j + k) +
                                    GaussianRational(gamma) * C(beta, j, ag, i + k) +
                                    GaussianRational(beta) * C(ab, i + j, gamma, k);
                                cb.tally(c_residual.is_zero(), witness, to_string(c_residual));
                            }
                        }
                    }
                }
            }
        }
        tr.steps.push_back(std::move(bb));
        tr.steps.push_back(std::move(cb));
    }

    // Step 4: both rescaled tables vanish at the origin.
    {
        CheckRecord rec;
        rec.name = "origin-vanishing";
        rec.statement = "B(0,0,0,0) = 0 and C(0,0,0,0) = 0";
        if (origin_ok) {
            GaussianRational b0 = B(0, 0, 0, 0);
            GaussianRational c0 = C(0, 0, 0, 0);
            rec.tally(b0.is_zero(), "B(0,0,0,0)", to_string(b0));
            rec.tally(c0.is_zero(), "C(0,0,0,0)", to_string(c0));
        } else {
            rec.note = "origin not in window; nothing to check";
        }
        tr.steps.push_back(std::move(rec));
    }

    // Step 5: C vanishes whenever its trailing argument pair is the origin.
    // The derivation gets this from C(beta,j,gamma,k) C(beta+gamma,j+k,0,0) = 0
    // specialized at gamma=k=0, where the product becomes a square; a square
    // vanishes only at zero, so the inference is sound over an exact field.
    {
        CheckRecord rec;
        rec.name = "trailing-zero-argument-vanishing";
        rec.statement = "C(beta,j,0,0) = 0";
        if (origin_ok) {
            for (const Rational& beta : degrees) {
                for (long j : loops) {
                    GaussianRational v = C(beta, j, 0, 0);
                    rec.tally(v.is_zero(), "(beta,j)=(" + to_string(beta) + "," + std::to_string(j) + ")",
                              to_string(v));
                }
            }
        } else {
            rec.note = "origin not in window; nothing to check";
        }
        tr.steps.push_back(std::move(rec));
    }

    // Step 6: B against a leading origin pair reproduces the degree.
    {
        CheckRecord rec;
        rec.name = "leading-zero-argument-value";
        rec.statement = "B(0,0,beta,j) = -beta";
        if (origin_ok) {
            for (const Rational& beta : degrees) {
                for (long j : loops) {
                    GaussianRational residual = B(0, 0, beta, j) + GaussianRational(beta);
                    rec.tally(residual.is_zero(),
                              "(beta,j)=(" + to_string(beta) + "," + std::to_string(j) + ")",
                              to_string(residual));
                }
            }
        } else {
            rec.note = "origin not in window; nothing to check";
        }
        tr.steps.push_back(std::move(rec));
    }

    // Steps 7 and 8: the two induction chains.  Instances are the window-
    // realizable integer multiples of each base pair; the excluded ratio in
    // each chain is exactly the diagonal the anchor step handles.
    {
        long amax = static_cast<long>(degrees.size() / 2);
        amax = std::max(amax, std::max(std::labs(w.loop_min), std::labs(w.loop_max)));

        CheckRecord down;
        down.name = "descending-chain-vanishing";
        down.statement = "C(-a gamma, -a k, gamma, k) = 0 for window-realizable integers a != 1";
        CheckRecord up;
        up.name = "ascending-chain-vanishing";
        up.statement = "C(a gamma, a k, gamma, k) = 0 for window-realizable integers a != -1";
        for (const Rational& gamma : degrees) {
            for (long k : loops) {
                for (long a = -amax; a <= amax; ++a) {
                    if (gamma == 0 && k == 0 && a != 0) continue;  // all multiples coincide
                    const std::string suffix =
                        ", (gamma,k)=(" + to_string(gamma) + "," + std::to_string(k) + ")";
                    if (a != 1) {
                        Rational x1 = -Rational(a) * gamma;
                        long l1 = -a * k;
                        if (w.contains_degree(x1) && w.contains_loop(l1)) {
                            GaussianRational v = C(x1, l1, gamma, k);
                            down.tally(v.is_zero(), "a=" + std::to_string(a) + suffix, to_string(v));
                        }
                    }
                    if (a != -1) {
                        Rational x1 = Rational(a) * gamma;
                        long l1 = a * k;
                        if (w.contains_degree(x1) && w.contains_loop(l1)) {
                            GaussianRational v = C(x1, l1, gamma, k);
                            up.tally(v.is_zero(), "a=" + std::to_string(a) + suffix, to_string(v));
                        }
                    }
                }
            }
        }
        tr.steps.push_back(std::move(down));
        tr.steps.push_back(std::move(up));
    }

    // Step 9: C is supported on degree-sum zero only.
    {
        CheckRecord rec;
        rec.name = "off-diagonal-vanishing";
        rec.statement = "C(x1,l1,x2,l2) = 0 whenever x1+x2 != 0";
        for (const Rational& x1 : degrees) {
            for (long l1 : loops) {
                for (const Rational& x2 : degrees) {
                    for (long l2 : loops) {
                        if (x1 + x2 == 0) continue;
                        GaussianRational v = C(x1, l1, x2, l2);
                        rec.tally(v.is_zero(), pair_witness(x1, l1, x2, l2), to_string(v));
                    }
                }
            }
        }
        tr.steps.push_back(std::move(rec));
    }

    // Step 10: every diagonal value transfers to the single anchor entry.
    {
        CheckRecord rec;
        rec.name = "diagonal-anchor-transfer";
        rec.statement = "C(-gamma,-k,gamma,k) = -gamma C(1,1,-1,-1)";
        if (anchor_ok) {
            GaussianRational anchor = C(1, 1, -1, -1);
            for (const Rational& gamma : degrees) {
                for (long k : loops) {
                    if (!w.contains_loop(-k)) continue;
                    GaussianRational residual =
                        C(-gamma, -k, gamma, k) + GaussianRational(gamma) * anchor;
                    rec.tally(residual.is_zero(),
                              "(gamma,k)=(" + to_string(gamma) + "," + std::to_string(k) + ")",
                              to_string(residual));
                }
            }
        } else {
            rec.note = "anchor entry (1,1,-1,-1) not realizable in this window; nothing to check";
        }
        tr.steps.push_back(std::move(rec));
    }

    // Step 11: the family parameter is read back off the anchor.  For the
    // surviving plus-sign family the anchor carries -m, so recovery negates.
    {
        CheckRecord rec;
        rec.name = "parameter-recovery";
        rec.statement = "-C(1,1,-1,-1) equals the configured m";
        if (anchor_ok) {
            tr.recovered_m = -C(1, 1, -1, -1);
            GaussianRational residual = tr.recovered_m - m_target;
            rec.tally(residual.is_zero(), "recovered m = " + to_string(tr.recovered_m), to_string(residual));
        } else {
            rec.note = "anchor entry (1,1,-1,-1) not realizable in this window; nothing to check";
        }
        tr.steps.push_back(std::move(rec));
    }

    // Step 12: the H-H coefficients vanish identically.
    {
        CheckRecord rec;
        rec.name = "h-h-coefficients-vanish";
        rec.statement = "d(beta,j,gamma,k) = 0 and e(beta,j,gamma,k) = 0";
        for (const Rational& beta : degrees) {
            for (long j : loops) {
                for (const Rational& gamma : degrees) {
                    for (long k : loops) {
                        GaussianRational dv = f.d(beta, j, gamma, k);
                        GaussianRational ev = f.e(beta, j, gamma, k);
                        rec.tally(dv.is_zero() && ev.is_zero(), pair_witness(beta, j, gamma, k),
                                  "d " + to_string(dv) + ", e " + to_string(ev));
                    }
                }
            }
        }
        tr.steps.push_back(std::move(rec));
    }

    return tr;
}

DerivationTranscript replay_derivation(const Window& w, const GaussianRational& eps,
                                       const GaussianRational& m_target) {
    return replay_derivation(w, eps, m_target, {});
}

}  // namespace hvloop
