#include "hvloop/structure_equations.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hvloop {

namespace {

/// Check accumulator that keeps the largest violation (by squared norm,
/// earliest on ties) instead of the first one.
struct MaxViolationSweep {
    CheckRecord rec;
    Rational max_norm2 = 0;

    MaxViolationSweep(std::string name, std::string statement) {
        rec.name = std::move(name);
        rec.statement = std::move(statement);
    }

    void observe(const GaussianRational& residual, const std::string& witness) {
        ++rec.domain;
        if (residual.is_zero()) {
            ++rec.passed;
            return;
        }
        ++rec.failed;
        Rational n2 = residual.norm2();
        if (rec.failed == 1 || n2 > max_norm2) {
            max_norm2 = n2;
            rec.first_witness = witness;
            rec.first_residual = to_string(residual);
        }
    }

    /// Two-part residual (used by the d/e symmetry identity).
    void observe(const GaussianRational& r1, const GaussianRational& r2, const std::string& witness) {
        ++rec.domain;
        if (r1.is_zero() && r2.is_zero()) {
            ++rec.passed;
            return;
        }
        ++rec.failed;
        Rational n2 = r1.norm2() + r2.norm2();
        if (rec.failed == 1 || n2 > max_norm2) {
            max_norm2 = n2;
            rec.first_witness = witness;
            rec.first_residual = "d-part " + to_string(r1) + ", e-part " + to_string(r2);
        }
    }

    CheckRecord finish() {
        if (rec.failed > 0) rec.note = "witness is the largest violation";
        return rec;
    }
};

std::string pair_witness(const Rational& alpha, long i, const Rational& beta, long j) {
    return "(alpha,i)=(" + to_string(alpha) + "," + std::to_string(i) + "), (beta,j)=(" + to_string(beta) +
           "," + std::to_string(j) + ")";
}

std::string triple_witness(const Rational& alpha, long i, const Rational& beta, long j, const Rational& gamma,
                           long k) {
    return pair_witness(alpha, i, beta, j) + ", (gamma,k)=(" + to_string(gamma) + "," + std::to_string(k) +
           ")";
}

/// Pairwise degree and loop sums of the triple stay in the window.
bool sums_closed(const Window& w, const Rational& alpha, long i, const Rational& beta, long j,
                 const Rational& gamma, long k) {
    return w.contains_degree(alpha + beta) && w.contains_degree(beta + gamma) &&
           w.contains_degree(alpha + gamma) && w.contains_loop(i + j) && w.contains_loop(j + k) &&
           w.contains_loop(i + k);
}

}  // namespace

bool StructureEquationReport::ok() const { return all_ok(equations); }

StructureEquationReport structure_equation_residuals(const StructureFunctions& f, const Window& w) {
    const std::vector<Rational> degrees = w.degrees();
    const std::vector<long> loops = w.loops();

    std::vector<MaxViolationSweep> sweeps;
    sweeps.reserve(12);
    sweeps.emplace_back("structure-eq-01-a-antisymmetry",
                        "a(alpha,i,beta,j) - a(beta,j,alpha,i) = alpha - beta");
    sweeps.emplace_back("structure-eq-02-b-c-pairing", "b(alpha,i,beta,j) - c(beta,j,alpha,i) = -beta");
    sweeps.emplace_back("structure-eq-03-d-e-symmetry",
                        "d(alpha,i,beta,j) = d(beta,j,alpha,i) and e(alpha,i,beta,j) = e(beta,j,alpha,i)");
    sweeps.emplace_back("structure-eq-04-a-a-composition",
                        "a(beta,j,gamma,k) a(alpha,i,beta+gamma,j+k) - a(alpha,i,gamma,k) "
                        "a(beta,j,alpha+gamma,i+k) = (alpha-beta) a(alpha+beta,i+j,gamma,k)");
    sweeps.emplace_back("structure-eq-05-b-b-composition",
                        "b(beta,j,gamma,k) b(alpha,i,beta+gamma,j+k) - b(alpha,i,gamma,k) "
                        "b(beta,j,alpha+gamma,i+k) = (alpha-beta) b(alpha+beta,i+j,gamma,k)");
    sweeps.emplace_back("structure-eq-06-c-b-composition",
                        "c(beta,j,gamma,k) b(alpha,i,beta+gamma,j+k) - a(alpha,i,gamma,k) "
                        "c(beta,j,alpha+gamma,i+k) = -beta c(alpha+beta,i+j,gamma,k)");
    sweeps.emplace_back("structure-eq-07-d-a-composition",
                        "d(beta,j,gamma,k) a(alpha,i,beta+gamma,j+k) - b(alpha,i,gamma,k) "
                        "d(beta,j,alpha+gamma,i+k) = -beta d(alpha+beta,i+j,gamma,k)");
    sweeps.emplace_back("structure-eq-08-e-b-composition",
                        "e(beta,j,gamma,k) b(alpha,i,beta+gamma,j+k) - b(alpha,i,gamma,k) "
                        "e(beta,j,alpha+gamma,i+k) = -beta e(alpha+beta,i+j,gamma,k)");
    sweeps.emplace_back("structure-eq-09-c-d-exchange",
                        "c(beta,j,gamma,k) d(alpha,i,beta+gamma,j+k) = c(alpha,i,gamma,k) "
                        "d(beta,j,alpha+gamma,i+k)");
    sweeps.emplace_back("structure-eq-10-c-e-exchange",
                        "c(beta,j,gamma,k) e(alpha,i,beta+gamma,j+k) = c(alpha,i,gamma,k) "
                        "e(beta,j,alpha+gamma,i+k)");
    sweeps.emplace_back("structure-eq-11-e-e-d-c-exchange",
                        "e(beta,j,gamma,k) e(alpha,i,beta+gamma,j+k) + d(alpha,i,gamma,k) "
                        "c(beta,j,alpha+gamma,i+k) = d(beta,j,gamma,k) c(alpha,i,beta+gamma,j+k) + "
                        "e(alpha,i,gamma,k) e(beta,j,alpha+gamma,i+k)");
    sweeps.emplace_back("structure-eq-12-e-d-exchange",
                        "e(beta,j,gamma,k) d(alpha,i,beta+gamma,j+k) = e(alpha,i,gamma,k) "
                        "d(beta,j,alpha+gamma,i+k)");

    // Pair identities.
    for (const Rational& alpha : degrees) {
        for (long i : loops) {
            for (const Rational& beta : degrees) {
                for (long j : loops) {
                    const std::string witness = pair_witness(alpha, i, beta, j);
                    sweeps[0].observe(
                        f.a(alpha, i, beta, j) - f.a(beta, j, alpha, i) - GaussianRational(Rational(alpha - beta)),
                        witness);
                    sweeps[1].observe(f.b(alpha, i, beta, j) - f.c(beta, j, alpha, i) + GaussianRational(beta),
                                      witness);
                    sweeps[2].observe(f.d(alpha, i, beta, j) - f.d(beta, j, alpha, i),
                                      f.e(alpha, i, beta, j) - f.e(beta, j, alpha, i), witness);
                }
            }
        }
    }

    // Composition identities over closure-guarded triples.  The five argument
    // tuples the equations draw from are shared, so evaluate each coefficient
    // once per tuple.
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
                            const long jk = j + k;
                            const long ik = i + k;
                            const long ij = i + j;
                            const std::string witness = triple_witness(alpha, i, beta, j, gamma, k);
                            const GaussianRational galpha(alpha), gbeta(beta);

                            const GaussianRational a_b_g = f.a(beta, j, gamma, k);
                            const GaussianRational a_a_bg = f.a(alpha, i, bg, jk);
                            const GaussianRational a_a_g = f.a(alpha, i, gamma, k);
                            const GaussianRational a_b_ag = f.a(beta, j, ag, ik);
                            const GaussianRational a_ab_g = f.a(ab, ij, gamma, k);
                            sweeps[3].observe(
                                a_b_g * a_a_bg - a_a_g * a_b_ag - (galpha - gbeta) * a_ab_g, witness);

                            const GaussianRational b_b_g = f.b(beta, j, gamma, k);
                            const GaussianRational b_a_bg = f.b(alpha, i, bg, jk);
                            const GaussianRational b_a_g = f.b(alpha, i, gamma, k);
                            const GaussianRational b_b_ag = f.b(beta, j, ag, ik);
                            const GaussianRational b_ab_g = f.b(ab, ij, gamma, k);
                            sweeps[4].observe(
                                b_b_g * b_a_bg - b_a_g * b_b_ag - (galpha - gbeta) * b_ab_g, witness);

                            const GaussianRational c_b_g = f.c(beta, j, gamma, k);
                            const GaussianRational c_b_ag = f.c(beta, j, ag, ik);
                            const GaussianRational c_ab_g = f.c(ab, ij, gamma, k);
                            sweeps[5].observe(c_b_g * b_a_bg - a_a_g * c_b_ag + gbeta * c_ab_g, witness);

                            const GaussianRational d_b_g = f.d(beta, j, gamma, k);
                            const GaussianRational d_b_ag = f.d(beta, j, ag, ik);
                            const GaussianRational d_ab_g = f.d(ab, ij, gamma, k);
                            sweeps[6].observe(d_b_g * a_a_bg - b_a_g * d_b_ag + gbeta * d_ab_g, witness);

                            const GaussianRational e_b_g = f.e(beta, j, gamma, k);
                            const GaussianRational e_b_ag = f.e(beta, j, ag, ik);
                            const GaussianRational e_ab_g = f.e(ab, ij, gamma, k);
                            sweeps[7].observe(e_b_g * b_a_bg - b_a_g * e_b_ag + gbeta * e_ab_g, witness);

                            const GaussianRational c_a_g = f.c(alpha, i, gamma, k);
                            const GaussianRational d_a_bg = f.d(alpha, i, bg, jk);
                            sweeps[8].observe(c_b_g * d_a_bg - c_a_g * d_b_ag, witness);

                            const GaussianRational e_a_bg = f.e(alpha, i, bg, jk);
                            sweeps[9].observe(c_b_g * e_a_bg - c_a_g * e_b_ag, witness);

                            const GaussianRational d_a_g = f.d(alpha, i, gamma, k);
                            const GaussianRational e_a_g = f.e(alpha, i, gamma, k);
                            const GaussianRational c_a_bg = f.c(alpha, i, bg, jk);
                            sweeps[10].observe(
                                e_b_g * e_a_bg + d_a_g * c_b_ag - d_b_g * c_a_bg - e_a_g * e_b_ag, witness);

                            sweeps[11].observe(e_b_g * d_a_bg - e_a_g * d_b_ag, witness);
                        }
                    }
                }
            }
        }
    }

    StructureEquationReport report;
    report.equations.reserve(sweeps.size());
    for (auto& s : sweeps) report.equations.push_back(s.finish());
    return report;
}

CheckRecord left_symmetry_sweep(const StructureFunctions& f, const Window& w) {
    CheckRecord rec;
    rec.name = "left-symmetry";
    rec.statement = "associator(x,y,z) = associator(y,x,z) on sum-closed basis triples";
    const std::vector<BasisIndex> basis = enumerate_basis(w);
    for (const BasisIndex& x : basis) {
        for (const BasisIndex& y : basis) {
            for (const BasisIndex& z : basis) {
                if (!sums_closed(w, x.degree, x.loop, y.degree, y.loop, z.degree, z.loop)) continue;
                Element r = left_symmetry_residual(x, y, z, f);
                rec.tally(r.is_zero(),
                          "x=" + to_string(x) + ", y=" + to_string(y) + ", z=" + to_string(z), to_string(r));
            }
        }
    }
    return rec;
}

CheckRecord compatibility_sweep(const StructureFunctions& f, const Window& w, BracketConvention conv) {
    CheckRecord rec;
    rec.name = "bracket-compatibility";
    rec.statement = "x o y - y o x = [x,y] on sum-closed basis pairs";
    const std::vector<BasisIndex> basis = enumerate_basis(w);
    for (const BasisIndex& x : basis) {
        for (const BasisIndex& y : basis) {
            if (!w.contains_degree(x.degree + y.degree) || !w.contains_loop(x.loop + y.loop)) continue;
            Element r = compatibility_residual(x, y, f, conv);
            rec.tally(r.is_zero(), "x=" + to_string(x) + ", y=" + to_string(y), to_string(r));
        }
    }
    return rec;
}

StructureFunctions perturb_structure_function(const StructureFunctions& f, char slot, const Rational& x1,
                                              long l1, const Rational& x2, long l2,
                                              const GaussianRational& delta) {
    auto bump = [x1, l1, x2, l2, delta](StructureFunctions::Evaluator base) -> StructureFunctions::Evaluator {
        return [base = std::move(base), x1, l1, x2, l2, delta](const Rational& y1, long m1, const Rational& y2,
                                                               long m2) -> GaussianRational {
            GaussianRational v = base(y1, m1, y2, m2);
            if (y1 == x1 && m1 == l1 && y2 == x2 && m2 == l2) v += delta;
            return v;
        };
    };
    StructureFunctions out = f;
    switch (slot) {
        case 'a': out.a = bump(f.a); break;
        case 'b': out.b = bump(f.b); break;
        case 'c': out.c = bump(f.c); break;
        case 'd': out.d = bump(f.d); break;
        case 'e': out.e = bump(f.e); break;
        default: throw std::invalid_argument("unknown coefficient slot '" + std::string(1, slot) + "'");
    }
    return out;
}

std::string to_string(CSignVerdict v) {
    switch (v) {
        case CSignVerdict::plus: return "plus";
        case CSignVerdict::minus: return "minus";
        case CSignVerdict::both: return "both";
        case CSignVerdict::neither: return "neither";
    }
    return "neither";
}

CSignResolution resolve_c_sign(const GaussianRational& eps, const std::vector<GaussianRational>& m_samples,
                               const Window& w) {
    if (m_samples.empty()) throw std::invalid_argument("resolve_c_sign needs at least one m sample");

    CSignResolution res;
    res.plus_ok = true;
    res.minus_ok = true;
    for (CSign sign : {CSign::plus, CSign::minus}) {
        bool& variant_ok = (sign == CSign::plus) ? res.plus_ok : res.minus_ok;
        for (const GaussianRational& m : m_samples) {
            LsaParams params{eps, m, sign, BracketConvention::paper};
            StructureFunctions f = structure_functions(params);

            std::vector<CheckRecord> records = structure_equation_residuals(f, w).equations;
            records.push_back(left_symmetry_sweep(f, w));
            records.push_back(compatibility_sweep(f, w, params.convention));

            CSignVariantOutcome outcome;
            outcome.sign = sign;
            outcome.m = m;
            for (const CheckRecord& rec : records) {
                if (!rec.ok()) {
                    outcome.ok = false;
                    outcome.first_failure = rec;
                    break;
                }
            }
            if (!outcome.ok) variant_ok = false;
            res.outcomes.push_back(std::move(outcome));
        }
    }

    if (res.plus_ok && res.minus_ok) {
        res.verdict = CSignVerdict::both;
    } else if (res.plus_ok) {
        res.verdict = CSignVerdict::plus;
    } else if (res.minus_ok) {
        res.verdict = CSignVerdict::minus;
    } else {
        res.verdict = CSignVerdict::neither;
    }
    return res;
}

}  // namespace hvloop
