// Acceptance gate: twelve end-to-end criteria, one PASS/FAIL line each.
// Every criterion is exact (no tolerances); a criterion either holds on the
// stated window or the run fails.  The cohomology criterion recomputes every
// dimension through a second, independently coded elimination path so the
// library's own rank computation is never trusted on its own word.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hvloop/derivation.hpp"
#include "hvloop/forms.hpp"
#include "hvloop/h2.hpp"
#include "hvloop/membership.hpp"
#include "hvloop/normal_form.hpp"
#include "hvloop/normalization.hpp"
#include "hvloop/runner.hpp"
#include "hvloop/sampling.hpp"
#include "hvloop/structure_equations.hpp"
#include "hvloop/witt.hpp"

using namespace hvloop;

namespace {

// ---------------------------------------------------------------------------
// Windows used by the criteria.

const Window kJacobiWindow{Rational(4), -2, 2, {Rational(1)}};   // 90 symbols
const Window kWideWindow{Rational(3), -2, 2, {Rational(1)}};     // 70 symbols
const Window kThinWindow{Rational(3), -1, 1, {Rational(1)}};     // 42 symbols
const Window kTinyWindow{Rational(2), -1, 1, {Rational(1)}};     // 30 symbols

// ---------------------------------------------------------------------------
// Failure collection: a criterion body returns an empty string on success and
// a human-readable reason otherwise.

struct Failure {
    std::string detail;
    explicit operator bool() const { return !detail.empty(); }
};

Failure ok() { return {}; }

Failure fail(const std::string& detail) { return {detail}; }

// ---------------------------------------------------------------------------
// Independent sparse elimination over Q(i).  Deliberately different from the
// library's dense fraction-free solver: sparse rows keyed by column index,
// leading-entry pivoting, pivot rows normalized to a leading 1.

using SparseRow = std::map<int, GaussianRational>;

struct SparseEliminator {
    std::map<int, SparseRow> pivots;  // leading column -> normalized row
    int rank = 0;

    /// Reduce `row` against the pivots collected so far; absorb the remainder
    /// as a new pivot when it is nonzero.  Returns true when rank grew.
    bool absorb(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        const GaussianRational scale = row.begin()->second;
        for (auto& [col, v] : row) v = v / scale;
        const int lead = row.begin()->first;
        pivots.emplace(lead, std::move(row));
        ++rank;
        return true;
    }

    /// True when the row lies in the span of the pivots collected so far.
    bool in_span(SparseRow row) const {
        reduce(row);
        return row.empty();
    }

private:
    void reduce(SparseRow& row) const {
        while (!row.empty()) {
            const auto p = pivots.find(row.begin()->first);
            if (p == pivots.end()) return;
            const GaussianRational factor = row.begin()->second;
            for (const auto& [col, pv] : p->second) {
                const auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -(factor * pv));
                } else {
                    it->second -= factor * pv;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Shared sweep material.

std::vector<std::array<int, 3>> guarded_triples(const std::vector<BasisIndex>& basis, const Window& w) {
    std::vector<std::array<int, 3>> out;
    const int n = static_cast<int>(basis.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (triple_closed(w, basis[x], basis[y], basis[z])) out.push_back({x, y, z});
    return out;
}

std::string run_cli(const std::vector<std::string>& args, int& exit_code) {
    std::ostringstream out;
    std::ostringstream err;
    exit_code = run(args, out, err);
    return out.str() + err.str();
}

// ---------------------------------------------------------------------------
// Criterion bodies.

Failure criterion_jacobi() {
    const std::vector<BasisIndex> basis = enumerate_basis(kJacobiWindow);
    if (basis.size() != 90) return fail("expected 90 symbols, got " + std::to_string(basis.size()));
    long long checked = 0;
    for (const BasisIndex& x : basis)
        for (const BasisIndex& y : basis)
            for (const BasisIndex& z : basis) {
                if (!jacobi_residual(x, y, z).is_zero())
                    return fail("nonzero residual at " + to_string(x) + ", " + to_string(y) + ", " +
                                to_string(z));
                ++checked;
            }
    if (checked != 729000) return fail("expected 729000 ordered triples, swept " + std::to_string(checked));
    return ok();
}

Failure criterion_canonical_cocycles() {
    const std::vector<BasisIndex> basis = enumerate_basis(kWideWindow);
    const std::vector<std::array<int, 3>> triples = guarded_triples(basis, kWideWindow);
    if (triples.empty()) return fail("no guarded triples on the window");
    for (long k = -3; k <= 3; ++k) {
        for (int family = 1; family <= 3; ++family) {
            const BilinearForm psi = canonical_cocycle(k, family).on(kWideWindow);
            for (const auto& t : triples) {
                const GaussianRational r = cocycle_residual(psi, basis[t[0]], basis[t[1]], basis[t[2]]);
                if (!r.is_zero())
                    return fail("weight " + std::to_string(k) + " family " + std::to_string(family) +
                                " residual " + to_string(r) + " at " + to_string(basis[t[0]]) + ", " +
                                to_string(basis[t[1]]) + ", " + to_string(basis[t[2]]));
            }
        }
    }
    return ok();
}

Failure criterion_normalization() {
    SampleStream s(2026);
    for (int case_no = 0; case_no < 25; ++case_no) {
        const RandomCocycle rc = random_cocycle(s, kThinWindow);
        const NormalizationResolution res = resolve_normalization_sign(rc.psi, kThinWindow);
        if (!res.unique())
            return fail("case " + std::to_string(case_no) + ": sign resolution verdict '" + res.verdict() +
                        "' is not unique");
        if (res.verdict() != "corrected")
            return fail("case " + std::to_string(case_no) + ": verdict '" + res.verdict() +
                        "' differs from the expected consistent choice");
        const BilinearForm phi = normalize(rc.psi, kThinWindow, NormalizationSign::corrected);
        for (const CheckRecord& a : anchor_conditions(phi, kThinWindow))
            if (!a.ok())
                return fail("case " + std::to_string(case_no) + ": anchor " + a.name +
                            " nonzero after normalization: " + a.first_residual);
    }
    return ok();
}

Failure criterion_normal_form_chain() {
    // The canonical families on the wide window.
    for (long k = -3; k <= 3; ++k)
        for (int family = 1; family <= 3; ++family) {
            const NormalFormReport rep =
                verify_normal_form(canonical_cocycle(k, family).on(kWideWindow), kWideWindow);
            if (!rep.ok())
                return fail("canonical weight " + std::to_string(k) + " family " + std::to_string(family) +
                            " rejected by the identity chain");
        }

    // The 25 seeded random cocycles, after normalization.
    SampleStream s(2027);
    for (int case_no = 0; case_no < 25; ++case_no) {
        const RandomCocycle rc = random_cocycle(s, kThinWindow);
        const BilinearForm phi = normalize(rc.psi, kThinWindow, NormalizationSign::corrected);
        if (!verify_normal_form(phi, kThinWindow).ok())
            return fail("normalized random cocycle " + std::to_string(case_no) +
                        " rejected by the identity chain");
    }

    // One injected perturbation per pairing family; each must fail inside its
    // own family with a recorded witness.
    struct Probe {
        const char* prefix;
        BilinearForm form;
    };
    std::vector<Probe> probes;
    {
        BilinearForm ll = canonical_cocycle(0, 1).on(kWideWindow);
        ll.add(L(Rational(3), 0), L(Rational(-3), 0), GaussianRational(Rational(1)));
        probes.push_back({"LL-", ll});
        BilinearForm lh = canonical_cocycle(0, 2).on(kWideWindow);
        lh.add(L(Rational(3), 0), H(Rational(-3), 0), GaussianRational(Rational(1)));
        probes.push_back({"LH-", lh});
        BilinearForm hh = canonical_cocycle(0, 3).on(kWideWindow);
        hh.add(H(Rational(1), 0), H(Rational(-1), 1), GaussianRational(Rational(1)));
        probes.push_back({"HH-", hh});
    }
    for (const Probe& probe : probes) {
        const NormalFormReport rep = verify_normal_form(probe.form, kWideWindow);
        if (rep.ok()) return fail(std::string(probe.prefix) + "perturbation went undetected");
        bool family_failure = false;
        for (const CheckRecord& c : rep.checks)
            if (!c.ok() && c.name.rfind(probe.prefix, 0) == 0) {
                if (c.first_witness.empty())
                    return fail(c.name + " failed without recording a witness");
                family_failure = true;
            }
        if (!family_failure)
            return fail(std::string(probe.prefix) +
                        "perturbation did not fail inside its own pairing family");
    }
    return ok();
}

Failure criterion_membership() {
    SampleStream s(3035);
    for (int case_no = 0; case_no < 20; ++case_no) {
        const RandomCocycle rc = random_class_combination(s, kThinWindow);
        const CoboundaryCertificate cert = is_coboundary(rc.psi, kThinWindow);
        if (cert.coboundary)
            return fail("class combination " + std::to_string(case_no) + " misclassified as a coboundary");
        if (cert.witness.empty() || cert.witness_value.is_zero())
            return fail("class combination " + std::to_string(case_no) + " has no usable witness");
        if (!reverify_certificate(cert, rc.psi, kThinWindow))
            return fail("witness for class combination " + std::to_string(case_no) +
                        " failed re-verification");
    }
    for (int case_no = 0; case_no < 20; ++case_no) {
        const LinearFunctional f = random_functional(s, kThinWindow, 6);
        const BilinearForm psi = coboundary_of(f, kThinWindow);
        const CoboundaryCertificate cert = is_coboundary(psi, kThinWindow);
        if (!cert.coboundary)
            return fail("pure coboundary " + std::to_string(case_no) + " misclassified");
        if (!reverify_certificate(cert, psi, kThinWindow))
            return fail("functional for pure coboundary " + std::to_string(case_no) +
                        " failed re-verification");
    }
    return ok();
}

Failure criterion_h2_oracle() {
    const std::vector<BasisIndex> basis = enumerate_basis(kWideWindow);
    const int n = static_cast<int>(basis.size());

    // Column index per canonical unordered pair (x < y).
    std::map<BilinearForm::Key, int> pair_index;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pair_index.emplace(BilinearForm::Key{basis[i], basis[j]}, static_cast<int>(pair_index.size()));
    const int pair_count = static_cast<int>(pair_index.size());

    // psi(a, b) as a signed column reference; the diagonal contributes nothing.
    const auto add_pair = [&](SparseRow& row, const BasisIndex& a, const BasisIndex& b,
                              const GaussianRational& coeff) {
        if (a == b) return;
        const bool flip = b < a;
        const auto it = pair_index.find(flip ? BilinearForm::Key{b, a} : BilinearForm::Key{a, b});
        const GaussianRational value = flip ? -coeff : coeff;
        const auto [slot, inserted] = row.emplace(it->second, value);
        if (!inserted) {
            slot->second += value;
            if (slot->second.is_zero()) row.erase(slot);
        }
    };

    // Cocycle constraint rows over guard-closed unordered triples.
    SparseEliminator cocycle_rank;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (!triple_closed(kWideWindow, basis[x], basis[y], basis[z])) continue;
                SparseRow row;
                const auto cyclic = [&](const BasisIndex& a, const BasisIndex& b, const BasisIndex& c) {
                    const BracketTerm t = bracket(b, c);
                    if (!t.coeff.is_zero()) add_pair(row, a, t.index, t.coeff);
                };
                cyclic(basis[x], basis[y], basis[z]);
                cyclic(basis[y], basis[z], basis[x]);
                cyclic(basis[z], basis[x], basis[y]);
                if (!row.empty()) cocycle_rank.absorb(std::move(row));
            }
    const long long dim_cocycles = pair_count - cocycle_rank.rank;

    // Coboundary rows: one generator per basis symbol the functional can see.
    std::vector<SparseRow> coboundary_rows(basis.size());
    std::map<BasisIndex, int> symbol_index;
    for (int i = 0; i < n; ++i) symbol_index.emplace(basis[i], i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const BracketTerm t = bracket(basis[i], basis[j]);
            if (t.coeff.is_zero()) continue;
            const auto target = symbol_index.find(t.index);
            if (target == symbol_index.end()) continue;  // functional vanishes off the window
            add_pair(coboundary_rows[static_cast<size_t>(target->second)], basis[i], basis[j], t.coeff);
        }
    SparseEliminator coboundary_rank;
    for (const SparseRow& row : coboundary_rows)
        if (!row.empty()) coboundary_rank.absorb(row);
    const long long dim_coboundaries = coboundary_rank.rank;
    const long long dim_quotient = dim_cocycles - dim_coboundaries;

    // Library counterpart.
    const H2Report rep = truncated_h2(kWideWindow);
    if (rep.pair_count != pair_count)
        return fail("pair counts disagree: oracle " + std::to_string(pair_count) + ", library " +
                    std::to_string(rep.pair_count));
    if (rep.dim_cocycles != dim_cocycles || rep.dim_coboundaries != dim_coboundaries ||
        rep.dim_quotient != dim_quotient)
        return fail("dimensions disagree: oracle " + std::to_string(dim_cocycles) + "/" +
                    std::to_string(dim_coboundaries) + "/" + std::to_string(dim_quotient) + ", library " +
                    std::to_string(rep.dim_cocycles) + "/" + std::to_string(rep.dim_coboundaries) + "/" +
                    std::to_string(rep.dim_quotient));
    if (dim_cocycles != 381 || dim_coboundaries != 70 || dim_quotient != 311)
        return fail("window dimensions moved from their pinned values 381/70/311: got " +
                    std::to_string(dim_cocycles) + "/" + std::to_string(dim_coboundaries) + "/" +
                    std::to_string(dim_quotient));

    // Every reachable canonical class must raise the coboundary rank by one.
    int raised = 0;
    for (long k : reachable_loop_weights(kWideWindow))
        for (int family = 1; family <= 3; ++family) {
            const BilinearForm phi = canonical_cocycle(k, family).on(kWideWindow);
            SparseRow row;
            for (const auto& [key, value] : phi.entries()) add_pair(row, key.first, key.second, value);
            if (row.empty())
                return fail("class weight " + std::to_string(k) + " family " + std::to_string(family) +
                            " vanishes on the window");
            if (coboundary_rank.in_span(row))
                return fail("class weight " + std::to_string(k) + " family " + std::to_string(family) +
                            " failed to raise the coboundary rank");
            ++raised;
        }
    if (raised != static_cast<int>(rep.classes.size()) || raised != rep.matched_count)
        return fail("class tally mismatch: oracle raised " + std::to_string(raised) + ", library matched " +
                    std::to_string(rep.matched_count));
    return ok();
}

CSignResolution resolve_on_probe_window(const GaussianRational& eps) {
    return resolve_c_sign(eps, {GaussianRational(Rational(1)), GaussianRational(Rational(-2, 7))},
                          kTinyWindow);
}

std::vector<GaussianRational> epsilon_grid() {
    return {GaussianRational(Rational(2, 3)), GaussianRational(Rational(3, 5)),
            GaussianRational(Rational(0), Rational(1))};
}

Failure criterion_family_sweeps() {
    const std::vector<GaussianRational> m_grid = {GaussianRational(), GaussianRational(Rational(1)),
                                                  GaussianRational(Rational(-2, 7))};
    for (const GaussianRational& eps : epsilon_grid()) {
        const CSignResolution res = resolve_on_probe_window(eps);
        if (!res.unique()) return fail("no unique sign at eps = " + to_string(eps));
        const CSign sign = res.verdict == CSignVerdict::plus ? CSign::plus : CSign::minus;
        for (const GaussianRational& m : m_grid) {
            const LsaParams p{eps, m, sign, BracketConvention::paper};
            const StructureFunctions f = structure_functions(p);
            const CheckRecord ls = left_symmetry_sweep(f, kThinWindow);
            if (!ls.ok() || ls.domain == 0)
                return fail("left symmetry failed at eps = " + to_string(eps) + ", m = " + to_string(m) +
                            ": " + ls.first_witness);
            const CheckRecord compat = compatibility_sweep(f, kThinWindow, BracketConvention::paper);
            if (!compat.ok() || compat.domain == 0)
                return fail("compatibility failed at eps = " + to_string(eps) + ", m = " + to_string(m) +
                            ": " + compat.first_witness);
        }
    }
    return ok();
}

Failure criterion_sign_resolution() {
    std::string shared_verdict;
    for (const GaussianRational& eps : epsilon_grid()) {
        const CSignResolution res = resolve_on_probe_window(eps);
        if (!res.unique())
            return fail("verdict at eps = " + to_string(eps) + " is " + to_string(res.verdict) +
                        ", not a single variant");
        const std::string verdict = to_string(res.verdict);
        if (shared_verdict.empty()) shared_verdict = verdict;
        if (verdict != shared_verdict)
            return fail("verdict flips across the grid: " + shared_verdict + " vs " + verdict + " at eps = " +
                        to_string(eps));
        bool rejected_seen = false;
        for (const CSignVariantOutcome& o : res.outcomes) {
            if (to_string(o.sign) == verdict) {
                if (!o.ok) return fail("surviving variant has a failure at eps = " + to_string(eps));
                continue;
            }
            if (o.ok) continue;  // rejected variant may pass degenerate samples
            rejected_seen = true;
            if (o.first_failure.name != "structure-eq-02-b-c-pairing")
                return fail("rejected variant fails first at '" + o.first_failure.name +
                            "', expected the b/c pairing identity");
            if (o.first_failure.statement != "b(alpha,i,beta,j) - c(beta,j,alpha,i) = -beta")
                return fail("pairing identity statement changed: " + o.first_failure.statement);
            if (o.first_failure.first_witness.empty() || o.first_failure.first_residual.empty())
                return fail("rejected variant at eps = " + to_string(eps) + " lacks an exact witness");
        }
        if (!rejected_seen) return fail("no rejected-variant witness recorded at eps = " + to_string(eps));
    }
    return ok();
}

Failure criterion_equation_equivalence() {
    const LsaParams params{GaussianRational(Rational(2, 3)), GaussianRational(Rational(1)), CSign::plus,
                           BracketConvention::paper};
    const StructureFunctions base = structure_functions(params);
    const std::vector<Rational> degrees = kTinyWindow.degrees();
    SampleStream s(4099);

    const auto draw_degree = [&]() {
        return degrees[static_cast<size_t>(s.below(degrees.size()))];
    };
    const auto draw_loop = [&]() { return s.integer_in(kTinyWindow.loop_min, kTinyWindow.loop_max); };

    const char slots[4] = {'b', 'c', 'd', 'e'};
    for (int trial = 0; trial < 10; ++trial) {
        const char slot = slots[trial % 4];
        Rational x1, x2;
        long l1 = 0, l2 = 0;
        // Rejection-sample argument tuples that both sides of the equivalence
        // can see: the pair/triple instances exercising the touched entry must
        // keep every pairwise degree and loop sum inside the window.
        while (true) {
            x1 = draw_degree();
            x2 = draw_degree();
            l1 = draw_loop();
            l2 = draw_loop();
            if (!kTinyWindow.contains_degree(Rational(x1 + x2))) continue;
            if (!kTinyWindow.contains_loop(l1 + l2)) continue;
            if (slot == 'd') {
                // Probed through z = L(1,0): both x+z and y+z must stay inside.
                if (!kTinyWindow.contains_degree(Rational(x1 + 1))) continue;
                if (!kTinyWindow.contains_degree(Rational(x2 + 1))) continue;
                if (x1 == x2 && l1 == l2) continue;
            }
            if (slot == 'e') {
                // Probed through z = L(-(x1+x2),0) against the Kronecker part
                // of c, which needs nonzero degrees on both H arguments.
                if (x1 == 0 || x2 == 0) continue;
                if (x1 == x2 && l1 == l2) continue;
            }
            break;
        }
        const GaussianRational delta = small_nonzero_scalar(s);
        const StructureFunctions probed = perturb_structure_function(base, slot, x1, l1, x2, l2, delta);

        const bool equations_fail = !structure_equation_residuals(probed, kTinyWindow).ok();
        const bool sweeps_fail = !left_symmetry_sweep(probed, kTinyWindow).ok() ||
                                 !compatibility_sweep(probed, kTinyWindow, BracketConvention::paper).ok();
        if (!equations_fail || !sweeps_fail)
            return fail(std::string("trial ") + std::to_string(trial) + " slot " + slot + " at (" +
                        to_string(x1) + "," + std::to_string(l1) + "," + to_string(x2) + "," +
                        std::to_string(l2) + "): equations " + (equations_fail ? "fail" : "pass") +
                        " but residual sweeps " + (sweeps_fail ? "fail" : "pass"));
    }
    return ok();
}

Failure criterion_replay() {
    for (const Rational& m : {Rational(1), Rational(0)}) {
        const DerivationTranscript t =
            replay_derivation(kWideWindow, GaussianRational(Rational(2, 3)), GaussianRational(m));
        if (!t.ok()) {
            for (const CheckRecord& step : t.steps)
                if (!step.ok())
                    return fail("step " + step.name + " failed at m = " + to_string(m) + ": " +
                                step.first_witness);
            return fail("transcript not ok at m = " + to_string(m));
        }
        if (t.recovered_m != GaussianRational(m))
            return fail("recovered " + to_string(t.recovered_m) + " instead of m = " + to_string(m));
        if (!t.anchor_available) return fail("diagonal anchor unavailable on the window");
    }

    const RescaledTweak tweak{'C', Rational(2), 0, Rational(-2), 0, GaussianRational(Rational(1))};
    const DerivationTranscript t = replay_derivation(kWideWindow, GaussianRational(Rational(2, 3)),
                                                     GaussianRational(Rational(1)), {tweak});
    if (t.ok()) return fail("tweaked transcript passed");
    const CheckRecord* anchor = nullptr;
    for (const CheckRecord& step : t.steps)
        if (step.name == "diagonal-anchor-transfer") anchor = &step;
    if (anchor == nullptr || anchor->ok())
        return fail("tweak was not caught at the predicted diagonal-anchor-transfer step");
    if (anchor->first_witness.empty()) return fail("anchor failure lacks a witness");
    return ok();
}

Failure criterion_witt_stability() {
    for (long alpha : {0L, 1L}) {
        const WittLsaParams wp{GaussianRational(Rational(alpha)), GaussianRational(Rational(2, 3))};
        const WittAuditReport first = witt_convention_audit(wp, 3);
        const WittAuditReport second = witt_convention_audit(wp, 3);
        if (first.checks.size() != 3) return fail("expected three audit records");
        for (size_t i = 0; i < first.checks.size(); ++i) {
            const CheckRecord& a = first.checks[i];
            const CheckRecord& b = second.checks[i];
            if (a.kind != "verdict") return fail("record " + a.name + " is not a verdict");
            if (a.passed != b.passed || a.failed != b.failed || a.first_witness != b.first_witness ||
                a.first_residual != b.first_residual)
                return fail("record " + a.name + " is not stable across runs");
        }
        if (first.compatible_with != second.compatible_with)
            return fail("compatibility verdict flapped for alpha_param " + std::to_string(alpha));
    }

    // The CLI rendering of the audit is pinned byte-for-byte.
    int exit_code = 0;
    const std::string fresh = run_cli({"witt-audit"}, exit_code);
    if (exit_code != 0) return fail("witt-audit exited with " + std::to_string(exit_code));
    std::ifstream golden(std::string(HVLOOP_GOLDEN_DIR) + "/witt-audit.json", std::ios::binary);
    if (!golden) return fail("golden report missing");
    std::stringstream bytes;
    bytes << golden.rdbuf();
    if (bytes.str() != fresh) return fail("witt-audit output drifted from the golden report");
    return ok();
}

Failure criterion_determinism() {
    int first_code = 0;
    int second_code = 0;
    const std::string first = run_cli({"all"}, first_code);
    const std::string second = run_cli({"all"}, second_code);
    if (first_code != 0 || second_code != 0)
        return fail("combined run exited with " + std::to_string(first_code) + " / " +
                    std::to_string(second_code));
    if (first != second) return fail("combined reports differ between runs");
    return ok();
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Failure()> body;
        long long budget_ms;  // 0 = no runtime requirement
    };
    const std::vector<Criterion> criteria = {
        {"bracket satisfies the Jacobi identity on the 90-symbol window", criterion_jacobi, 60000},
        {"canonical cocycles pass the guarded identity sweep", criterion_canonical_cocycles, 0},
        {"normalization is uniquely signed across 25 random cocycles", criterion_normalization, 0},
        {"identity chain accepts normal forms and localizes perturbations", criterion_normal_form_chain, 0},
        {"membership certificates re-verify for 40 seeded forms", criterion_membership, 0},
        {"truncated cohomology matches an independent elimination oracle", criterion_h2_oracle, 0},
        {"product family sweeps clean across the parameter grid", criterion_family_sweeps, 120000},
        {"product sign resolves uniquely with rejected-variant witnesses", criterion_sign_resolution, 0},
        {"equation system and residual sweeps agree on perturbed tables", criterion_equation_equivalence, 0},
        {"derivation replay recovers parameters and localizes tweaks", criterion_replay, 0},
        {"degree-slice audit is stable and matches the golden report", criterion_witt_stability, 0},
        {"combined run is byte-identical across repeats", criterion_determinism, 0},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto started = std::chrono::steady_clock::now();
        Failure f = criteria[i].body();
        const auto elapsed = std::chrono::steady_clock::now() - started;
        const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        if (!f && criteria[i].budget_ms > 0 && ms > criteria[i].budget_ms)
            f = fail("runtime " + std::to_string(ms) + " ms exceeds the " +
                     std::to_string(criteria[i].budget_ms) + " ms budget");
        std::printf("%s  criterion %02zu: %s (%lld ms)\n", f ? "FAIL" : "PASS", i + 1, criteria[i].name, ms);
        if (f) {
            std::printf("      %s\n", f.detail.c_str());
            ++failures;
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
