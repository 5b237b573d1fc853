#include "hvloop/witt.hpp"

#include <stdexcept>

namespace hvloop {

namespace {

void require_admissible(const GaussianRational& eps) {
    EpsilonVerdict v = validate_epsilon(eps);
    if (!v.valid) {
        throw std::domain_error("inadmissible deformation parameter: " + v.reason);
    }
}

std::string cube_witness(long m, long n, long l) {
    return "(m,n,l)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(l) + ")";
}

std::string square_witness(long m, long n) {
    return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

GaussianRational witt_lsa_product(long mdeg, long ndeg, const WittLsaParams& wp) {
    require_admissible(wp.eps);
    GaussianRational numer =
        wp.alpha_param + GaussianRational(ndeg) + wp.alpha_param * wp.eps * GaussianRational(mdeg);
    GaussianRational denom = GaussianRational(1) + wp.eps * GaussianRational(mdeg + ndeg);
    return numer / denom;
}

WittAuditReport witt_convention_audit(const WittLsaParams& wp, long degree_bound) {
    require_admissible(wp.eps);
    if (degree_bound < 0) {
        throw std::invalid_argument("degree bound must be nonnegative");
    }

    // The audited table is loop-free, so its coefficient is a pure function of
    // the two degrees; evaluate through a small closure for readability.
    auto f = [&wp](long m, long n) { return witt_lsa_product(m, n, wp); };

    WittAuditReport report;
    report.params = wp;
    report.degree_bound = degree_bound;

    CheckRecord leftsym;
    leftsym.name = "witt-left-symmetry";
    leftsym.statement = "associator(m,n,l) = associator(n,m,l) for the audited table on the degree cube";
    leftsym.kind = "verdict";
    for (long m = -degree_bound; m <= degree_bound; ++m) {
        for (long n = -degree_bound; n <= degree_bound; ++n) {
            for (long l = -degree_bound; l <= degree_bound; ++l) {
                GaussianRational residual = f(m, n) * f(m + n, l) - f(n, l) * f(m, n + l) -
                                            f(n, m) * f(m + n, l) + f(m, l) * f(n, m + l);
                leftsym.tally(residual.is_zero(), cube_witness(m, n, l), to_string(residual));
            }
        }
    }
    report.checks.push_back(leftsym);

    CheckRecord paper_commutator;
    paper_commutator.name = "witt-commutator-paper-orientation";
    paper_commutator.statement = "f(m,n) - f(n,m) = m - n (the L-L bracket coefficient, paper orientation)";
    paper_commutator.kind = "verdict";
    CheckRecord reversed_commutator;
    reversed_commutator.name = "witt-commutator-reversed-orientation";
    reversed_commutator.statement =
        "f(m,n) - f(n,m) = n - m (the L-L bracket coefficient, reversed orientation)";
    reversed_commutator.kind = "verdict";
    for (long m = -degree_bound; m <= degree_bound; ++m) {
        for (long n = -degree_bound; n <= degree_bound; ++n) {
            GaussianRational diff = f(m, n) - f(n, m);
            GaussianRational paper_residual = diff - GaussianRational(m - n);
            GaussianRational reversed_residual = diff - GaussianRational(n - m);
            paper_commutator.tally(paper_residual.is_zero(), square_witness(m, n), to_string(paper_residual));
            reversed_commutator.tally(reversed_residual.is_zero(), square_witness(m, n),
                                      to_string(reversed_residual));
        }
    }
    const bool paper_ok = paper_commutator.ok();
    const bool reversed_ok = reversed_commutator.ok();
    report.checks.push_back(std::move(paper_commutator));
    report.checks.push_back(std::move(reversed_commutator));

    if (paper_ok && reversed_ok) {
        report.compatible_with = "both";
    } else if (paper_ok) {
        report.compatible_with = "paper";
    } else if (reversed_ok) {
        report.compatible_with = "reversed";
    } else {
        report.compatible_with = "none";
    }
    return report;
}

}  // namespace hvloop
