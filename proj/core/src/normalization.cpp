#include "hvloop/normalization.hpp"

namespace hvloop {

LinearFunctional normalizing_functional(const BilinearForm& psi, const Window& w, NormalizationSign sign) {
    LinearFunctional f;
    const BasisIndex l00 = L(0, 0);
    const BasisIndex l10 = L(1, 0);
    const GaussianRational half(Rational(1, 2));
    const GaussianRational s = sign == NormalizationSign::corrected ? GaussianRational(1) : GaussianRational(-1);
    for (const BasisIndex& b : enumerate_basis(w)) {
        GaussianRational v;
        if (b.degree != 0) {
            v = -(GaussianRational(b.degree).inverse()) * psi(l00, b);
        } else if (b.kind == Kind::L) {
            v = half * psi(l10, L(-1, b.loop));
        } else {
            v = s * psi(l10, H(-1, b.loop));
        }
        f.set(b, v);
    }
    return f;
}

BilinearForm normalize(const BilinearForm& psi, const Window& w, NormalizationSign sign) {
    LinearFunctional f = normalizing_functional(psi, w, sign);
    return psi - coboundary_of(f, w);
}

std::vector<CheckRecord> anchor_conditions(const BilinearForm& phi, const Window& w) {
    std::vector<CheckRecord> out;
    const BasisIndex l00 = L(0, 0);
    const BasisIndex l10 = L(1, 0);
    const bool has_unit_degree = w.contains_degree(Rational(1));

    CheckRecord a1{.name = "anchor-LL-weight0", .statement = "phi(L(0,0), L(a,i)) = 0"};
    CheckRecord a2{.name = "anchor-LL-unit", .statement = "phi(L(1,0), L(-1,i)) = 0"};
    CheckRecord a3{.name = "anchor-LH-weight0", .statement = "phi(L(0,0), H(a,i)) = 0"};
    CheckRecord a4{.name = "anchor-LH-unit", .statement = "phi(L(1,0), H(-1,i)) = 0"};

    for (const Rational& a : w.degrees()) {
        for (long i : w.loops()) {
            GaussianRational v1 = phi(l00, L(a, i));
            a1.tally(v1.is_zero(), "(L(0,0), " + to_string(L(a, i)) + ")", to_string(v1));
            GaussianRational v3 = phi(l00, H(a, i));
            a3.tally(v3.is_zero(), "(L(0,0), " + to_string(H(a, i)) + ")", to_string(v3));
        }
    }
    if (has_unit_degree) {
        for (long i : w.loops()) {
            GaussianRational v2 = phi(l10, L(-1, i));
            a2.tally(v2.is_zero(), "(L(1,0), " + to_string(L(-1, i)) + ")", to_string(v2));
            GaussianRational v4 = phi(l10, H(-1, i));
            a4.tally(v4.is_zero(), "(L(1,0), " + to_string(H(-1, i)) + ")", to_string(v4));
        }
    } else {
        a2.note = "degree 1 not in window; nothing to check";
        a4.note = a2.note;
    }
    out.push_back(std::move(a1));
    out.push_back(std::move(a2));
    out.push_back(std::move(a3));
    out.push_back(std::move(a4));
    return out;
}

std::string NormalizationResolution::verdict() const {
    if (printed_ok && corrected_ok) return "both";
    if (printed_ok) return "printed";
    if (corrected_ok) return "corrected";
    return "neither";
}

NormalizationResolution resolve_normalization_sign(const BilinearForm& psi, const Window& w) {
    NormalizationResolution out;
    for (NormalizationSign sign : {NormalizationSign::printed, NormalizationSign::corrected}) {
        BilinearForm phi = normalize(psi, w, sign);
        std::vector<CheckRecord> anchors = anchor_conditions(phi, w);
        bool ok = all_ok(anchors);
        std::string witness;
        for (const auto& r : anchors) {
            if (!r.ok()) {
                witness = r.name + " at " + r.first_witness + ", residual " + r.first_residual;
                break;
            }
        }
        if (sign == NormalizationSign::printed) {
            out.printed_ok = ok;
            out.printed_witness = witness;
        } else {
            out.corrected_ok = ok;
            out.corrected_witness = witness;
        }
    }
    return out;
}

}  // namespace hvloop
