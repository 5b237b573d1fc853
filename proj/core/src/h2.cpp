#include "hvloop/h2.hpp"

#include <map>
#include <utility>

#include "hvloop/linalg.hpp"

namespace hvloop {

namespace {

using SectorKey = std::pair<Rational, long>;  // (degree sum, loop sum)
using SparseRow = std::map<size_t, GaussianRational>;

struct Sector {
    std::vector<size_t> pair_ids;          // global pair ids, ascending
    std::map<size_t, size_t> local_of;     // global pair id -> local column
    std::vector<SparseRow> rows;           // cocycle constraint rows, local columns
    std::vector<BasisIndex> symbols;       // window symbols at this (degree, loop)
    size_t coboundary_rank = 0;
};

Matrix dense_from_rows(const std::vector<SparseRow>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [c, v] : rows[r]) m.at(r, c) = v;
    }
    return m;
}

}  // namespace

H2Report truncated_h2(const Window& w, BracketConvention conv) {
    H2Report report;
    const std::vector<BasisIndex> basis = enumerate_basis(w);
    report.basis_size = static_cast<std::int64_t>(basis.size());

    // Global pair enumeration and sector assignment.
    std::vector<BilinearForm::Key> pairs;
    std::map<BilinearForm::Key, size_t> pair_id;
    std::map<SectorKey, Sector> sectors;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            BilinearForm::Key key{basis[i], basis[j]};
            size_t id = pairs.size();
            pair_id.emplace(key, id);
            pairs.push_back(key);
            SectorKey sk{basis[i].degree + basis[j].degree, basis[i].loop + basis[j].loop};
            Sector& sec = sectors[sk];
            sec.local_of.emplace(id, sec.pair_ids.size());
            sec.pair_ids.push_back(id);
        }
    }
    report.pair_count = static_cast<std::int64_t>(pairs.size());

    // Window symbols per sector (the unknowns f(z) feeding its coboundaries).
    for (const BasisIndex& b : basis) {
        auto it = sectors.find(SectorKey{b.degree, b.loop});
        if (it != sectors.end()) it->second.symbols.push_back(b);
    }

    // Cocycle identity rows for closure-guarded distinct triples.
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            for (size_t l = j + 1; l < basis.size(); ++l) {
                const BasisIndex& x = basis[i];
                const BasisIndex& y = basis[j];
                const BasisIndex& z = basis[l];
                if (!triple_closed(w, x, y, z, conv)) continue;
                SparseRow row;  // keyed by global pair id for now
                const BasisIndex* cyc[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
                for (auto& [a, b, c] : cyc) {
                    BracketTerm t = bracket(*b, *c, conv);
                    if (t.coeff.is_zero()) continue;
                    if (*a == t.index) continue;  // diagonal entry of an antisymmetric form
                    GaussianRational coeff = t.coeff;
                    BilinearForm::Key key{*a, t.index};
                    if (t.index < *a) {
                        key = {t.index, *a};
                        coeff = -coeff;
                    }
                    size_t id = pair_id.at(key);
                    auto [it, inserted] = row.emplace(id, coeff);
                    if (!inserted) {
                        it->second += coeff;
                        if (it->second.is_zero()) row.erase(it);
                    }
                }
                if (row.empty()) continue;
                SectorKey sk{x.degree + y.degree + z.degree, x.loop + y.loop + z.loop};
                Sector& sec = sectors.at(sk);  // every pair in the row shares this sector
                SparseRow local;
                for (const auto& [id, v] : row) local.emplace(sec.local_of.at(id), v);
                sec.rows.push_back(std::move(local));
                ++report.constraint_rows;
            }
        }
    }

    // Sector-by-sector ranks.
    std::int64_t cocycle_rank = 0;
    for (auto& [sk, sec] : sectors) {
        if (!sec.rows.empty()) {
            cocycle_rank += static_cast<std::int64_t>(exact_rank(dense_from_rows(sec.rows, sec.pair_ids.size())));
        }
        if (!sec.symbols.empty()) {
            Matrix d(sec.pair_ids.size(), sec.symbols.size());
            for (size_t r = 0; r < sec.pair_ids.size(); ++r) {
                const BilinearForm::Key& p = pairs[sec.pair_ids[r]];
                BracketTerm t = bracket(p.first, p.second, conv);
                if (t.coeff.is_zero()) continue;
                for (size_t c = 0; c < sec.symbols.size(); ++c) {
                    if (sec.symbols[c] == t.index) d.at(r, c) = t.coeff;
                }
            }
            sec.coboundary_rank = exact_rank(d);
        }
        report.dim_coboundaries += static_cast<std::int64_t>(sec.coboundary_rank);
    }
    report.dim_cocycles = report.pair_count - cocycle_rank;
    report.dim_quotient = report.dim_cocycles - report.dim_coboundaries;

    // Canonical classes: nonzero on the window and independent of the
    // coboundary columns within their sector.
    for (long k : reachable_loop_weights(w)) {
        auto it = sectors.find(SectorKey{Rational(0), k});
        for (int family : {1, 2, 3}) {
            H2ClassRecord rec{.k = k, .family = family};
            if (it != sectors.end()) {
                const Sector& sec = it->second;
                CanonicalCocycle phi = canonical_cocycle(k, family);
                std::vector<GaussianRational> v(sec.pair_ids.size());
                bool nonzero = false;
                for (size_t r = 0; r < sec.pair_ids.size(); ++r) {
                    const BilinearForm::Key& p = pairs[sec.pair_ids[r]];
                    v[r] = phi(p.first, p.second);
                    nonzero = nonzero || !v[r].is_zero();
                }
                rec.nonzero_on_window = nonzero;
                if (nonzero) {
                    Matrix d(sec.pair_ids.size(), sec.symbols.size() + 1);
                    for (size_t r = 0; r < sec.pair_ids.size(); ++r) {
                        const BilinearForm::Key& p = pairs[sec.pair_ids[r]];
                        BracketTerm t = bracket(p.first, p.second, conv);
                        if (!t.coeff.is_zero()) {
                            for (size_t c = 0; c < sec.symbols.size(); ++c) {
                                if (sec.symbols[c] == t.index) d.at(r, c) = t.coeff;
                            }
                        }
                        d.at(r, sec.symbols.size()) = v[r];
                    }
                    rec.independent = exact_rank(d) == sec.coboundary_rank + 1;
                }
            }
            if (rec.nonzero_on_window && rec.independent) ++report.matched_count;
            report.classes.push_back(rec);
        }
    }

    if (report.constraint_rows == 0) {
        report.note = "window too small to impose any cocycle identity";
    }
    return report;
}

}  // namespace hvloop
