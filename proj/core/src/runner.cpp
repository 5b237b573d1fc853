#include "hvloop/runner.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hvloop/algebra.hpp"
#include "hvloop/check.hpp"
#include "hvloop/config.hpp"
#include "hvloop/derivation.hpp"
#include "hvloop/forms.hpp"
#include "hvloop/h2.hpp"
#include "hvloop/lsa.hpp"
#include "hvloop/normalization.hpp"
#include "hvloop/sampling.hpp"
#include "hvloop/scalar.hpp"
#include "hvloop/structure_equations.hpp"
#include "hvloop/version.hpp"
#include "hvloop/witt.hpp"

namespace hvloop {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// report plumbing

ordered_json check_to_json(const CheckRecord& r) {
    // Every field is always present so reports with the same config have the
    // same shape byte-for-byte.
    ordered_json j = ordered_json::object();
    j["name"] = r.name;
    j["statement"] = r.statement;
    j["kind"] = r.kind;
    j["domain"] = r.domain;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["first_witness"] = r.first_witness;
    j["first_residual"] = r.first_residual;
    j["note"] = r.note;
    return j;
}

ordered_json checks_to_json(const std::vector<CheckRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const CheckRecord& r : records) arr.push_back(check_to_json(r));
    return arr;
}

ordered_json config_to_json(const Config& c) {
    ordered_json w = ordered_json::object();
    w["degree_bound"] = to_string(c.window.degree_bound);
    ordered_json gens = ordered_json::array();
    if (c.window.degree_generators.empty()) {
        gens.push_back("1");
    } else {
        for (const Rational& g : c.window.degree_generators) gens.push_back(to_string(g));
    }
    w["degree_generators"] = gens;
    w["loop_min"] = c.window.loop_min;
    w["loop_max"] = c.window.loop_max;

    ordered_json j = ordered_json::object();
    j["window"] = w;
    j["epsilon"] = to_string(c.epsilon);
    j["m"] = to_string(c.m);
    j["c_sign"] = to_string(c.c_sign);
    j["normalization_sign"] = to_string(c.normalization_sign);
    j["convention"] = to_string(c.convention);
    j["seed"] = c.seed;
    j["triple_budget"] = c.triple_budget ? ordered_json(*c.triple_budget) : ordered_json(nullptr);
    return j;
}

/// One subcommand's contribution to the report.  `body` holds the
/// section-specific keys ("checks", "verdicts", ...); the dispatcher adds the
/// "command" tag.
struct Section {
    ordered_json body = ordered_json::object();
    bool failed = false;
};

void count_checks(const ordered_json& body, std::int64_t& total, std::int64_t& failures) {
    if (!body.contains("checks")) return;
    for (const ordered_json& c : body.at("checks")) {
        ++total;
        if (c.at("kind").get<std::string>() != "verdict" && c.at("failed").get<std::int64_t>() > 0) ++failures;
    }
}

// ---------------------------------------------------------------------------
// budgeted triple enumeration

/// Visits ordered index triples over [0, n)^3.  Without a budget (or when the
/// budget covers everything) the order is lexicographic and the returned note
/// is empty; otherwise a seeded subsample is visited and described.
template <typename Fn>
std::string sweep_ordered_triples(std::size_t n, const std::optional<std::int64_t>& budget,
                                  std::uint64_t seed, Fn&& visit) {
    const unsigned long long total = 1ULL * n * n * n;
    if (!budget || total <= static_cast<unsigned long long>(*budget)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) visit(i, j, k);
        return "";
    }
    SampleStream stream(seed);
    const std::size_t want = static_cast<std::size_t>(*budget);
    std::vector<unsigned long long> codes;
    std::string how;
    // Materializing the full index list keeps the subsample duplicate-free;
    // past this cap fall back to independent draws to bound memory.
    constexpr unsigned long long kMaterializeCap = 50000000ULL;
    if (total <= kMaterializeCap) {
        codes.resize(static_cast<std::size_t>(total));
        for (unsigned long long c = 0; c < total; ++c) codes[static_cast<std::size_t>(c)] = c;
        deterministic_shuffle(codes, stream);
        codes.resize(want);
        how = "sampled " + std::to_string(want) + " of " + std::to_string(total) +
              " ordered triples without replacement";
    } else {
        codes.reserve(want);
        for (std::size_t t = 0; t < want; ++t) codes.push_back(stream.below(total));
        how = "sampled " + std::to_string(want) + " of " + std::to_string(total) +
              " ordered triples with replacement";
    }
    for (unsigned long long code : codes) {
        const std::size_t i = static_cast<std::size_t>(code / (1ULL * n * n));
        const std::size_t j = static_cast<std::size_t>((code / n) % n);
        const std::size_t k = static_cast<std::size_t>(code % n);
        visit(i, j, k);
    }
    return how + " (seed " + std::to_string(seed) + ")";
}

std::string triple_witness_text(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z) {
    return "x=" + to_string(x) + ", y=" + to_string(y) + ", z=" + to_string(z);
}

std::string pair_witness_text(const BasisIndex& x, const BasisIndex& y) {
    return "x=" + to_string(x) + ", y=" + to_string(y);
}

// ---------------------------------------------------------------------------
// sign selection shared by the product-table subcommands

struct CSignChoice {
    CSign sign = CSign::plus;
    bool resolved = true;       // false when auto-resolution was inconclusive
    std::string selection;      // how the sign was arrived at
};

CSignChoice choose_c_sign(const Config& cfg) {
    if (cfg.c_sign == CSignMode::plus) return {CSign::plus, true, "plus (configured)"};
    if (cfg.c_sign == CSignMode::minus) return {CSign::minus, true, "minus (configured)"};
    if (cfg.m.is_zero()) return {CSign::plus, true, "plus (variants coincide at m = 0)"};
    const CSignResolution res = resolve_c_sign(cfg.epsilon, {cfg.m}, cfg.window);
    const CSign sign = res.verdict == CSignVerdict::minus ? CSign::minus : CSign::plus;
    return {sign, res.unique(), "resolved: " + to_string(res.verdict)};
}

NormalizationSign fallback_norm_sign() { return NormalizationSign::corrected; }

// ---------------------------------------------------------------------------
// subcommands

Section run_verify_jacobi(const Config& cfg) {
    const std::vector<BasisIndex> basis = enumerate_basis(cfg.window);
    const std::size_t n = basis.size();

    CheckRecord jac;
    jac.name = "jacobi-identity";
    jac.statement = "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 over ordered window basis triples";
    jac.note = sweep_ordered_triples(n, cfg.triple_budget, cfg.seed, [&](std::size_t i, std::size_t j, std::size_t k) {
        const Element r = jacobi_residual(basis[i], basis[j], basis[k], cfg.convention);
        if (r.is_zero()) {
            jac.tally(true, "", "");
        } else {
            jac.tally(false, triple_witness_text(basis[i], basis[j], basis[k]), to_string(r));
        }
    });

    CheckRecord anti;
    anti.name = "bracket-antisymmetry";
    anti.statement = "[x,y] + [y,x] = 0 over ordered window basis pairs";
    for (const BasisIndex& x : basis) {
        for (const BasisIndex& y : basis) {
            const BracketTerm t1 = bracket(x, y, cfg.convention);
            const BracketTerm t2 = bracket(y, x, cfg.convention);
            Element sum;
            if (!t1.coeff.is_zero()) sum.add(t1.index, t1.coeff);
            if (!t2.coeff.is_zero()) sum.add(t2.index, t2.coeff);
            if (sum.is_zero()) {
                anti.tally(true, "", "");
            } else {
                anti.tally(false, pair_witness_text(x, y), to_string(sum));
            }
        }
    }

    CheckRecord grading;
    grading.name = "grading-operator";
    const bool paper = cfg.convention == BracketConvention::paper;
    grading.statement = paper ? "[L(0,0), x] + degree(x) * x = 0 over window basis symbols"
                              : "[L(0,0), x] - degree(x) * x = 0 over window basis symbols";
    const BasisIndex l00 = L(Rational(0), 0);
    for (const BasisIndex& x : basis) {
        const BracketTerm t = bracket(l00, x, cfg.convention);
        Element r;
        if (!t.coeff.is_zero()) r.add(t.index, t.coeff);
        Element scaled(x, GaussianRational(x.degree));
        if (paper) {
            r += scaled;
        } else {
            r -= scaled;
        }
        if (r.is_zero()) {
            grading.tally(true, "", "");
        } else {
            grading.tally(false, "x=" + to_string(x), to_string(r));
        }
    }

    Section s;
    s.body["checks"] = checks_to_json({jac, anti, grading});
    s.failed = !(jac.ok() && anti.ok() && grading.ok());
    return s;
}

Section run_verify_cocycles(const Config& cfg) {
    const std::vector<BasisIndex> basis = enumerate_basis(cfg.window);
    const std::size_t n = basis.size();
    const std::vector<long> weights = reachable_loop_weights(cfg.window);

    std::vector<CheckRecord> checks;
    ordered_json weights_json = ordered_json::array();
    for (long k : weights) weights_json.push_back(k);

    for (long k : weights) {
        for (int family = 1; family <= 3; ++family) {
            const BilinearForm phi = canonical_cocycle(k, family).on(cfg.window);
            CheckRecord rec;
            rec.name = "canonical-cocycle-weight" + std::to_string(k) + "-family" + std::to_string(family);
            rec.statement =
                "2-cocycle identity for the family-" + std::to_string(family) + " form at loop weight " +
                std::to_string(k) + " over bracket-closed ordered basis triples";
            const std::string note =
                sweep_ordered_triples(n, cfg.triple_budget, cfg.seed, [&](std::size_t i, std::size_t j, std::size_t l) {
                    const BasisIndex& x = basis[i];
                    const BasisIndex& y = basis[j];
                    const BasisIndex& z = basis[l];
                    if (!triple_closed(cfg.window, x, y, z, cfg.convention)) return;
                    const GaussianRational r = cocycle_residual(phi, x, y, z, cfg.convention);
                    if (r.is_zero()) {
                        rec.tally(true, "", "");
                    } else {
                        rec.tally(false, triple_witness_text(x, y, z), to_string(r));
                    }
                });
            rec.note = note;
            checks.push_back(rec);
        }
    }

    Section s;
    s.body["loop_weights"] = weights_json;
    s.body["checks"] = checks_to_json(checks);
    s.failed = !all_ok(checks);
    return s;
}

Section run_resolve_signs(const Config& cfg) {
    if (cfg.m.is_zero())
        throw ConfigError("resolve-signs needs m != 0: the two product-sign variants coincide at m = 0");

    std::vector<CheckRecord> checks;

    // Product-table sign: sweep both variants, expect exactly one survivor.
    const CSignResolution cres = resolve_c_sign(cfg.epsilon, {cfg.m}, cfg.window);
    for (const CSignVariantOutcome& o : cres.outcomes) {
        CheckRecord rec;
        rec.name = "product-sign-variant-" + to_string(o.sign);
        rec.statement = "twelve structure equations, left-symmetry and compatibility at m = " + to_string(o.m);
        rec.kind = "verdict";
        rec.domain = 1;
        rec.passed = o.ok ? 1 : 0;
        rec.failed = o.ok ? 0 : 1;
        if (!o.ok) {
            rec.first_witness = o.first_failure.name + ": " + o.first_failure.first_witness;
            rec.first_residual = o.first_failure.first_residual;
        }
        checks.push_back(rec);
    }

    // Normalization sign: resolve against a seeded batch of random cocycles.
    SampleStream stream(cfg.seed);
    const int kBatch = 5;
    bool norm_all_unique = true;
    std::string norm_verdict;
    bool norm_mixed = false;
    for (int case_no = 1; case_no <= kBatch; ++case_no) {
        const RandomCocycle rc = random_cocycle(stream, cfg.window, BracketConvention::paper);
        const NormalizationResolution nres = resolve_normalization_sign(rc.psi, cfg.window);
        CheckRecord rec;
        rec.name = "normalization-sign-cocycle-" + std::to_string(case_no);
        rec.statement = "exactly one normalization sign clears the anchor conditions for a random cocycle";
        rec.kind = "verdict";
        rec.domain = 1;
        const bool unique = nres.unique();
        rec.passed = unique ? 1 : 0;
        rec.failed = unique ? 0 : 1;
        rec.note = "printed: " + std::string(nres.printed_ok ? "ok" : "fails") +
                   (nres.printed_ok ? "" : " (" + nres.printed_witness + ")") +
                   "; corrected: " + std::string(nres.corrected_ok ? "ok" : "fails") +
                   (nres.corrected_ok ? "" : " (" + nres.corrected_witness + ")");
        checks.push_back(rec);
        if (!unique) {
            norm_all_unique = false;
        } else if (norm_verdict.empty()) {
            norm_verdict = nres.verdict();
        } else if (norm_verdict != nres.verdict()) {
            norm_mixed = true;
        }
    }
    std::string norm_summary;
    if (!norm_all_unique) {
        norm_summary = "unresolved";
    } else if (norm_mixed) {
        norm_summary = "mixed";
    } else {
        norm_summary = norm_verdict;
    }

    ordered_json verdicts = ordered_json::object();
    verdicts["c_sign"] = to_string(cres.verdict);
    verdicts["normalization_sign"] = norm_summary;

    Section s;
    s.body["checks"] = checks_to_json(checks);
    s.body["verdicts"] = verdicts;
    s.failed = !cres.unique() || !norm_all_unique || norm_mixed;
    return s;
}

Section run_normalize(const Config& cfg) {
    SampleStream stream(cfg.seed);
    const int kBatch = 5;
    std::vector<CheckRecord> checks;
    bool failed = false;

    std::string sign_used_summary;
    bool sign_mixed = false;

    for (int case_no = 1; case_no <= kBatch; ++case_no) {
        const RandomCocycle rc = random_cocycle(stream, cfg.window, BracketConvention::paper);
        NormalizationSign sign = fallback_norm_sign();
        std::string sign_text;
        bool resolution_ok = true;

        if (cfg.normalization_sign == NormSignMode::printed) {
            sign = NormalizationSign::printed;
            sign_text = "printed (configured)";
        } else if (cfg.normalization_sign == NormSignMode::corrected) {
            sign = NormalizationSign::corrected;
            sign_text = "corrected (configured)";
        } else {
            const NormalizationResolution nres = resolve_normalization_sign(rc.psi, cfg.window);
            resolution_ok = nres.unique();
            if (nres.verdict() == "printed") sign = NormalizationSign::printed;
            sign_text = resolution_ok ? nres.verdict() + " (resolved)" : nres.verdict() + " (unresolved)";
            CheckRecord res_rec;
            res_rec.name = "cocycle-" + std::to_string(case_no) + "-sign-resolution";
            res_rec.statement = "exactly one normalization sign clears the anchor conditions";
            res_rec.kind = "verdict";
            res_rec.domain = 1;
            res_rec.passed = resolution_ok ? 1 : 0;
            res_rec.failed = resolution_ok ? 0 : 1;
            res_rec.note = "verdict: " + nres.verdict();
            checks.push_back(res_rec);
            if (!resolution_ok) failed = true;
        }

        const std::string sign_name =
            sign == NormalizationSign::printed ? std::string("printed") : std::string("corrected");
        if (sign_used_summary.empty()) {
            sign_used_summary = sign_name;
        } else if (sign_used_summary != sign_name) {
            sign_mixed = true;
        }

        const BilinearForm normalized = normalize(rc.psi, cfg.window, sign);
        std::vector<CheckRecord> anchors = anchor_conditions(normalized, cfg.window);
        for (CheckRecord& a : anchors) {
            a.name = "cocycle-" + std::to_string(case_no) + "-" + a.name;
            if (a.note.empty()) a.note = "normalized with the " + sign_text + " sign";
            if (!a.ok()) failed = true;
            checks.push_back(a);
        }
    }

    ordered_json verdicts = ordered_json::object();
    verdicts["normalization_sign_used"] = sign_mixed ? std::string("mixed") : sign_used_summary;

    Section s;
    s.body["checks"] = checks_to_json(checks);
    s.body["verdicts"] = verdicts;
    s.failed = failed;
    return s;
}

Section run_h2(const Config& cfg) {
    const H2Report rep = truncated_h2(cfg.window, cfg.convention);

    CheckRecord dim;
    dim.name = "quotient-dimension-consistency";
    dim.statement = "dim cocycles - dim coboundaries = dim quotient";
    const bool dim_ok = rep.dim_cocycles - rep.dim_coboundaries == rep.dim_quotient;
    dim.tally(dim_ok, dim_ok ? "" : "report", dim_ok ? "" : "inconsistent dimensions");

    CheckRecord matched;
    matched.name = "independent-classes-within-quotient";
    matched.statement = "independent canonical classes fit inside the quotient dimension";
    const bool matched_ok = rep.matched_count <= rep.dim_quotient;
    matched.tally(matched_ok, matched_ok ? "" : "report", matched_ok ? "" : "more classes than dimensions");

    ordered_json classes = ordered_json::array();
    for (const H2ClassRecord& c : rep.classes) {
        ordered_json entry = ordered_json::object();
        entry["loop_weight"] = c.k;
        entry["family"] = c.family;
        entry["nonzero_on_window"] = c.nonzero_on_window;
        entry["independent"] = c.independent;
        classes.push_back(entry);
    }

    ordered_json h2 = ordered_json::object();
    h2["basis_size"] = rep.basis_size;
    h2["pair_count"] = rep.pair_count;
    h2["constraint_rows"] = rep.constraint_rows;
    h2["dim_cocycles"] = rep.dim_cocycles;
    h2["dim_coboundaries"] = rep.dim_coboundaries;
    h2["dim_quotient"] = rep.dim_quotient;
    h2["matched_count"] = rep.matched_count;
    h2["classes"] = classes;
    h2["note"] = rep.note;

    Section s;
    s.body["checks"] = checks_to_json({dim, matched});
    s.body["h2"] = h2;
    s.failed = !(dim.ok() && matched.ok());
    return s;
}

Section run_verify_lsa(const Config& cfg) {
    const CSignChoice choice = choose_c_sign(cfg);
    const LsaParams params{cfg.epsilon, cfg.m, choice.sign, cfg.convention};
    const StructureFunctions f = structure_functions(params);

    std::vector<CheckRecord> checks = structure_equation_residuals(f, cfg.window).equations;
    checks.push_back(left_symmetry_sweep(f, cfg.window));
    checks.push_back(compatibility_sweep(f, cfg.window, cfg.convention));

    ordered_json verdicts = ordered_json::object();
    verdicts["c_sign_used"] = to_string(choice.sign);
    verdicts["c_sign_selection"] = choice.selection;

    Section s;
    s.body["checks"] = checks_to_json(checks);
    s.body["verdicts"] = verdicts;
    s.failed = !all_ok(checks) || !choice.resolved;
    return s;
}

Section run_replay(const Config& cfg) {
    const CSignChoice choice = choose_c_sign(cfg);
    const DerivationTranscript tr = replay_derivation(cfg.window, cfg.epsilon, cfg.m, {}, choice.sign);

    ordered_json replay = ordered_json::object();
    replay["m_target"] = to_string(tr.m_target);
    replay["recovered_m"] = to_string(tr.recovered_m);
    replay["anchor_available"] = tr.anchor_available;
    replay["c_sign_used"] = to_string(choice.sign);
    replay["c_sign_selection"] = choice.selection;

    Section s;
    s.body["checks"] = checks_to_json(tr.steps);
    s.body["replay"] = replay;
    s.failed = !tr.ok() || !choice.resolved;
    return s;
}

Section run_witt_audit(const Config& cfg) {
    const long kDegreeBound = 3;
    std::vector<CheckRecord> checks;
    ordered_json audits = ordered_json::array();
    for (long alpha = 0; alpha <= 1; ++alpha) {
        const WittLsaParams wp{Rational(alpha), cfg.epsilon};
        WittAuditReport rep = witt_convention_audit(wp, kDegreeBound);
        for (CheckRecord rec : rep.checks) {
            rec.name = "alpha-param-" + std::to_string(alpha) + "-" + rec.name;
            checks.push_back(rec);
        }
        ordered_json entry = ordered_json::object();
        entry["alpha_param"] = std::to_string(alpha);
        entry["compatible_with"] = rep.compatible_with;
        audits.push_back(entry);
    }

    ordered_json verdicts = ordered_json::object();
    verdicts["witt_audit"] = audits;

    Section s;
    s.body["checks"] = checks_to_json(checks);
    s.body["verdicts"] = verdicts;
    // Every record here is a verdict: the audit reports facts about an
    // external table and never gates the exit code by itself.
    s.failed = !all_ok(checks);
    return s;
}

using SectionRunner = std::function<Section(const Config&)>;

const std::vector<std::pair<std::string, SectionRunner>>& section_runners() {
    static const std::vector<std::pair<std::string, SectionRunner>> runners = {
        {"verify-jacobi", run_verify_jacobi},
        {"verify-cocycles", run_verify_cocycles},
        {"resolve-signs", run_resolve_signs},
        {"normalize", run_normalize},
        {"h2", run_h2},
        {"verify-lsa", run_verify_lsa},
        {"replay-lemma13", run_replay},
        {"witt-audit", run_witt_audit},
    };
    return runners;
}

// ---------------------------------------------------------------------------
// CLI surface

struct CliValues {
    std::string config_path;
    std::string window_a;
    long loop_min = 0;
    long loop_max = 0;
    std::string generators;
    std::string epsilon;
    std::string m;
    std::string c_sign;
    std::string norm_sign;
    std::string convention;
    std::uint64_t seed = 0;
    std::int64_t budget = 0;
    std::string out_path;
    bool timing = false;
};

void add_shared_options(CLI::App* cmd, CliValues& v) {
    cmd->add_option("--config", v.config_path, "JSON config file applied over the defaults");
    cmd->add_option("--window-a", v.window_a, "degree bound A (rational text, e.g. 3 or 7/2)");
    cmd->add_option("--loop-min", v.loop_min, "lower end of the loop index range");
    cmd->add_option("--loop-max", v.loop_max, "upper end of the loop index range");
    cmd->add_option("--generators", v.generators, "comma-separated degree generators (e.g. 1,1/2)");
    cmd->add_option("--epsilon", v.epsilon, "deformation parameter (scalar text, e.g. 2/3 or i)");
    cmd->add_option("--m", v.m, "family parameter m (scalar text)");
    cmd->add_option("--c-sign", v.c_sign, "product-sign variant: plus, minus or auto");
    cmd->add_option("--norm-sign", v.norm_sign, "normalization sign: printed, corrected or auto");
    cmd->add_option("--convention", v.convention, "bracket orientation: paper or reversed");
    cmd->add_option("--seed", v.seed, "seed for every randomized sweep");
    cmd->add_option("--budget", v.budget, "cap on ordered triples per exhaustive sweep");
    cmd->add_option("--out", v.out_path, "also write the JSON report to this file");
    cmd->add_flag("--timing", v.timing, "include wall-clock timing in the report (breaks byte-for-byte determinism)");
}

std::vector<Rational> parse_generator_list(const std::string& text) {
    std::vector<Rational> out;
    std::string::size_type start = 0;
    while (start <= text.size()) {
        std::string::size_type comma = text.find(',', start);
        const std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        std::string trimmed;
        for (char ch : piece)
            if (ch != ' ' && ch != '\t') trimmed += ch;
        if (trimmed.empty()) throw ConfigError("empty entry in --generators list '" + text + "'");
        try {
            out.push_back(parse_rational(trimmed));
        } catch (const std::exception& e) {
            throw ConfigError("bad --generators entry '" + trimmed + "': " + e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Config assemble_config(const CLI::App* active, const CliValues& v) {
    Config cfg = default_config();
    if (active->count("--config") > 0) cfg = load_config_file(v.config_path, cfg);
    if (active->count("--window-a") > 0) {
        try {
            cfg.window.degree_bound = parse_rational(v.window_a);
        } catch (const std::exception& e) {
            throw ConfigError("bad --window-a value '" + v.window_a + "': " + e.what());
        }
    }
    if (active->count("--loop-min") > 0) cfg.window.loop_min = v.loop_min;
    if (active->count("--loop-max") > 0) cfg.window.loop_max = v.loop_max;
    if (active->count("--generators") > 0) cfg.window.degree_generators = parse_generator_list(v.generators);
    if (active->count("--epsilon") > 0) {
        try {
            cfg.epsilon = parse_scalar(v.epsilon);
        } catch (const std::exception& e) {
            throw ConfigError("bad --epsilon value '" + v.epsilon + "': " + e.what());
        }
    }
    if (active->count("--m") > 0) {
        try {
            cfg.m = parse_scalar(v.m);
        } catch (const std::exception& e) {
            throw ConfigError("bad --m value '" + v.m + "': " + e.what());
        }
    }
    if (active->count("--c-sign") > 0) cfg.c_sign = parse_c_sign_mode(v.c_sign);
    if (active->count("--norm-sign") > 0) cfg.normalization_sign = parse_norm_sign_mode(v.norm_sign);
    if (active->count("--convention") > 0) cfg.convention = parse_convention(v.convention);
    if (active->count("--seed") > 0) cfg.seed = v.seed;
    if (active->count("--budget") > 0) cfg.triple_budget = v.budget;
    validate_config(cfg);
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic verification workbench for a graded loop algebra"};
    app.name(kToolName);
    app.require_subcommand(1);

    CliValues values;
    std::vector<std::string> names;
    for (const auto& [name, runner] : section_runners()) names.push_back(name);
    names.push_back("all");

    std::map<std::string, CLI::App*> subs;
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name, name == "all" ? "run every subcommand in order" : "");
        add_shared_options(sub, values);
        subs[name] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends arrive as "successful" parse errors.
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const CLI::App* active = nullptr;
    std::string command;
    for (const std::string& name : names) {
        if (subs[name]->parsed()) {
            active = subs[name];
            command = name;
            break;
        }
    }
    if (active == nullptr) {
        err << "error: no subcommand selected\n";
        return kExitUsage;
    }

    Config cfg;
    try {
        cfg = assemble_config(active, values);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();

    ordered_json report = ordered_json::object();
    report["schema"] = kReportSchema;
    ordered_json tool = ordered_json::object();
    tool["name"] = kToolName;
    tool["version"] = kToolVersion;
    report["tool"] = tool;
    report["command"] = command;
    report["config"] = config_to_json(cfg);

    bool failed = false;
    std::int64_t total_checks = 0;
    std::int64_t failed_checks = 0;

    try {
        if (command == "all") {
            ordered_json runs = ordered_json::array();
            for (const auto& [name, runner] : section_runners()) {
                Section s = runner(cfg);
                failed = failed || s.failed;
                count_checks(s.body, total_checks, failed_checks);
                ordered_json entry = ordered_json::object();
                entry["command"] = name;
                for (const auto& [key, value] : s.body.items()) entry[key] = value;
                runs.push_back(entry);
            }
            report["runs"] = runs;
        } else {
            SectionRunner runner;
            for (const auto& [name, r] : section_runners())
                if (name == command) runner = r;
            Section s = runner(cfg);
            failed = s.failed;
            count_checks(s.body, total_checks, failed_checks);
            for (const auto& [key, value] : s.body.items()) report[key] = value;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    ordered_json summary = ordered_json::object();
    summary["checks"] = total_checks;
    summary["failed_checks"] = failed_checks;
    summary["ok"] = !failed;
    report["summary"] = summary;

    ordered_json timing = ordered_json::object();
    timing["enabled"] = values.timing;
    if (values.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        timing["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    report["timing"] = timing;

    const std::string text = report.dump(2) + "\n";
    out << text;
    if (!values.out_path.empty()) {
        std::ofstream file(values.out_path);
        if (!file) {
            err << "error: cannot write report to " << values.out_path << "\n";
            return kExitUsage;
        }
        file << text;
    }

    return failed ? kExitCheckFailure : kExitOk;
}

}  // namespace hvloop
