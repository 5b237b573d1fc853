#include "hvloop/membership.hpp"

#include <map>

#include "hvloop/linalg.hpp"

namespace hvloop {

namespace {

struct PairSystem {
    std::vector<BasisIndex> basis;
    std::map<BasisIndex, size_t> column_of;
    std::vector<BilinearForm::Key> pairs;  // row labels, canonical order
};

PairSystem pair_system(const Window& w) {
    PairSystem s;
    s.basis = enumerate_basis(w);
    for (size_t c = 0; c < s.basis.size(); ++c) s.column_of.emplace(s.basis[c], c);
    for (size_t i = 0; i < s.basis.size(); ++i) {
        for (size_t j = i + 1; j < s.basis.size(); ++j) {
            s.pairs.push_back({s.basis[i], s.basis[j]});
        }
    }
    return s;
}

// Coefficient of the single unknown (if any) in the row for pair (x, y):
// f([x,y]) with f supported in the window.
std::optional<std::pair<size_t, GaussianRational>> row_entry(const PairSystem& s, const Window& w,
                                                             const BilinearForm::Key& p, BracketConvention conv) {
    BracketTerm t = bracket(p.first, p.second, conv);
    if (t.coeff.is_zero() || !w.contains(t.index)) return std::nullopt;
    return std::make_pair(s.column_of.at(t.index), t.coeff);
}

}  // namespace

CoboundaryCertificate is_coboundary(const BilinearForm& psi, const Window& w, BracketConvention conv) {
    PairSystem s = pair_system(w);
    Matrix m(s.pairs.size(), s.basis.size());
    std::vector<GaussianRational> rhs(s.pairs.size());
    for (size_t r = 0; r < s.pairs.size(); ++r) {
        if (auto e = row_entry(s, w, s.pairs[r], conv)) m.at(r, e->first) = e->second;
        rhs[r] = psi(s.pairs[r].first, s.pairs[r].second);
    }

    LinearSolveResult res = rank_and_solve(m, rhs);
    CoboundaryCertificate cert;
    if (res.status == SolveStatus::infeasible) {
        cert.coboundary = false;
        const auto& y = *res.infeasibility_witness;
        for (size_t r = 0; r < y.size(); ++r) {
            if (y[r].is_zero()) continue;
            cert.witness.emplace_back(s.pairs[r], y[r]);
            cert.witness_value += y[r] * rhs[r];
        }
        return cert;
    }
    cert.coboundary = true;
    for (size_t c = 0; c < s.basis.size(); ++c) cert.functional.set(s.basis[c], (*res.solution)[c]);
    return cert;
}

bool reverify_certificate(const CoboundaryCertificate& cert, const BilinearForm& psi, const Window& w,
                          BracketConvention conv) {
    if (cert.coboundary) {
        std::vector<BasisIndex> basis = enumerate_basis(w);
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = i + 1; j < basis.size(); ++j) {
                GaussianRational lhs = coboundary_value(cert.functional, basis[i], basis[j], conv);
                if (lhs != psi(basis[i], basis[j])) return false;
            }
        }
        // The certifying functional must itself be window-supported.
        for (const auto& [b, v] : cert.functional.values()) {
            if (!w.contains(b)) return false;
        }
        return true;
    }
    if (cert.witness.empty()) return false;
    // The combined constraint row must vanish on every window unknown...
    std::map<BasisIndex, GaussianRational> combined;
    GaussianRational value;
    for (const auto& [key, weight] : cert.witness) {
        BracketTerm t = bracket(key.first, key.second, conv);
        if (!t.coeff.is_zero() && w.contains(t.index)) {
            auto [it, inserted] = combined.emplace(t.index, weight * t.coeff);
            if (!inserted) it->second += weight * t.coeff;
        }
        value += weight * psi(key.first, key.second);
    }
    for (const auto& [b, v] : combined) {
        if (!v.is_zero()) return false;
    }
    // ...while pairing nontrivially with psi.
    return !value.is_zero() && value == cert.witness_value;
}

}  // namespace hvloop
