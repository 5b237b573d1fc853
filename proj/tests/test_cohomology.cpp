// Normalization, the normalized identity chain, coboundary membership with
// re-verifiable certificates, and the truncated second cohomology report.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hvloop/h2.hpp"
#include "hvloop/membership.hpp"
#include "hvloop/normal_form.hpp"
#include "hvloop/normalization.hpp"
#include "hvloop/sampling.hpp"

using namespace hvloop;

namespace {

const Window kSmall{Rational(2), -1, 1, {Rational(1)}};
const Window kMedium{Rational(3), -2, 2, {Rational(1)}};

bool has_failed_named(const std::vector<CheckRecord>& checks, const std::string& name) {
    for (const CheckRecord& c : checks)
        if (c.name == name && !c.ok()) return true;
    return false;
}

}  // namespace

TEST_CASE("canonical cocycles already have vanishing normalizing functional") {
    for (long k : {-1L, 0L, 1L}) {
        const BilinearForm phi = canonical_cocycle(k, 1).on(kSmall);
        CHECK(normalizing_functional(phi, kSmall, NormalizationSign::corrected).is_zero());
        CHECK(normalize(phi, kSmall, NormalizationSign::corrected) == phi);
    }
    CHECK(normalizing_functional(BilinearForm(), kSmall, NormalizationSign::printed).is_zero());
}

TEST_CASE("normalization strips a coboundary shift and lands back in the class") {
    SampleStream s(41);
    for (int trial = 0; trial < 5; ++trial) {
        LinearFunctional g;
        for (const BasisIndex& b : enumerate_basis(kSmall))
            if (s.below(3) == 0) g.set(b, small_scalar(s));
        const BilinearForm phi = canonical_cocycle(0, 3).on(kSmall);
        const BilinearForm shifted = phi + coboundary_of(g, kSmall);

        const BilinearForm back = normalize(shifted, kSmall, NormalizationSign::corrected);
        for (const CheckRecord& c : anchor_conditions(back, kSmall)) CHECK(c.ok());

        // The output differs from the input by an exact coboundary.
        const CoboundaryCertificate cert = is_coboundary(shifted - back, kSmall);
        CHECK(cert.coboundary);
        CHECK(reverify_certificate(cert, shifted - back, kSmall));
    }
}

TEST_CASE("the printed sign variant leaves a doubled H anchor behind") {
    // With the printed sign the subtraction adds the anchor value instead of
    // cancelling it, so the normalized form pairs L(1,0) with H(-1,i) at
    // twice the original value; the corrected sign clears it.
    SampleStream s(43);
    const RandomCocycle rc = random_cocycle(s, kSmall);
    const BilinearForm printed = normalize(rc.psi, kSmall, NormalizationSign::printed);
    const BilinearForm corrected = normalize(rc.psi, kSmall, NormalizationSign::corrected);
    for (long i : kSmall.loops()) {
        const GaussianRational original = rc.psi(L(Rational(1), 0), H(Rational(-1), i));
        CHECK(printed(L(Rational(1), 0), H(Rational(-1), i)) ==
              GaussianRational(Rational(2)) * original);
        CHECK(corrected(L(Rational(1), 0), H(Rational(-1), i)).is_zero());
    }
}

TEST_CASE("sign resolution picks the corrected variant on random cocycles") {
    SampleStream s(47);
    for (int trial = 0; trial < 10; ++trial) {
        const RandomCocycle rc = random_cocycle(s, kSmall);
        const NormalizationResolution res = resolve_normalization_sign(rc.psi, kSmall);
        CHECK(res.corrected_ok);
        CHECK(res.verdict() == "corrected");
        CHECK(res.unique());
        CHECK_FALSE(res.printed_witness.empty());
    }
}

TEST_CASE("normal form chain accepts the canonical families") {
    for (long k : {-2L, -1L, 0L, 1L, 2L})
        for (int family : {1, 2, 3}) {
            const NormalFormReport report =
                verify_normal_form(canonical_cocycle(k, family).on(kSmall), kSmall);
            CHECK(report.ok());
        }
}

TEST_CASE("normal form chain rejects a single perturbed pairing entry") {
    BilinearForm phi = canonical_cocycle(0, 1).on(kMedium);
    phi.add(L(Rational(3), 0), L(Rational(-3), 0), GaussianRational(Rational(1)));
    const NormalFormReport report = verify_normal_form(phi, kMedium);
    CHECK_FALSE(report.ok());
    CHECK(has_failed_named(report.checks, "LL-closed-form"));
    for (const CheckRecord& c : report.checks)
        if (c.name == "LL-closed-form") {
            CHECK(c.first_witness.find("L(3,0)") != std::string::npos);
            CHECK(c.first_witness.find("L(-3,0)") != std::string::npos);
        }
}

TEST_CASE("normal form chain flags non-normalized input as a precondition issue") {
    LinearFunctional g;
    g.set(L(Rational(1), 0), GaussianRational(Rational(1)));
    const BilinearForm shifted = canonical_cocycle(0, 1).on(kSmall) + coboundary_of(g, kSmall);
    const NormalFormReport report = verify_normal_form(shifted, kSmall);
    CHECK_FALSE(report.ok());
    bool precondition_failed = false;
    for (const CheckRecord& c : report.checks)
        if (!c.ok() && c.name.rfind("precondition-", 0) == 0) precondition_failed = true;
    CHECK(precondition_failed);
}

TEST_CASE("normalized random cocycles are supported on degree-sum zero") {
    SampleStream s(53);
    for (int trial = 0; trial < 5; ++trial) {
        const RandomCocycle rc = random_cocycle(s, kSmall);
        const BilinearForm phi = normalize(rc.psi, kSmall, NormalizationSign::corrected);
        for (const auto& [key, value] : phi.entries()) {
            CHECK(Rational(key.first.degree + key.second.degree) == Rational(0));
            CHECK_FALSE(value.is_zero());
        }
        CHECK(verify_normal_form(phi, kSmall).ok());
    }
}

TEST_CASE("coboundaries are recognized with a checkable functional") {
    SampleStream s(59);
    for (int trial = 0; trial < 5; ++trial) {
        LinearFunctional f;
        for (const BasisIndex& b : enumerate_basis(kSmall))
            if (s.below(2) == 0) f.set(b, small_scalar(s));
        const BilinearForm df = coboundary_of(f, kSmall);
        const CoboundaryCertificate cert = is_coboundary(df, kSmall);
        CHECK(cert.coboundary);
        CHECK(reverify_certificate(cert, df, kSmall));
        // The recovered functional need not equal f (the kernel is large),
        // but its coboundary must reproduce df exactly.
        CHECK(coboundary_of(cert.functional, kSmall) == df);
    }
}

TEST_CASE("canonical classes are not coboundaries, with checkable witnesses") {
    for (int family : {1, 2, 3}) {
        const BilinearForm phi = canonical_cocycle(0, family).on(kMedium);
        const CoboundaryCertificate cert = is_coboundary(phi, kMedium);
        CHECK_FALSE(cert.coboundary);
        CHECK_FALSE(cert.witness.empty());
        CHECK_FALSE(cert.witness_value.is_zero());
        CHECK(reverify_certificate(cert, phi, kMedium));
    }
}

TEST_CASE("negative certificates fail re-verification against the wrong form") {
    const BilinearForm phi = canonical_cocycle(0, 3).on(kMedium);
    const CoboundaryCertificate cert = is_coboundary(phi, kMedium);
    CHECK_FALSE(cert.coboundary);
    // The recorded witness value is pinned exactly: scaling the form doubles
    // the recomputed value and invalidates the certificate.
    CHECK_FALSE(reverify_certificate(cert, GaussianRational(Rational(2)) * phi, kMedium));
    // A coboundary annihilates every witness combination outright.
    LinearFunctional f;
    f.set(H(Rational(0), 0), GaussianRational(Rational(1)));
    CHECK_FALSE(reverify_certificate(cert, coboundary_of(f, kMedium), kMedium));
}

TEST_CASE("truncated cohomology on a degenerate window") {
    const H2Report r = truncated_h2(Window{Rational(0), 0, 0, {Rational(1)}});
    CHECK(r.basis_size == 2);
    CHECK(r.pair_count == 1);
    // All brackets of degree-zero symbols with each other vanish except
    // [L,H] which also has coefficient 0, so every form is a cocycle and no
    // nonzero form is a coboundary.
    CHECK(r.dim_cocycles == 1);
    CHECK(r.dim_coboundaries == 0);
    CHECK(r.dim_quotient == 1);
}

TEST_CASE("truncated cohomology default-window dimensions are stable") {
    const H2Report r = truncated_h2(kMedium);
    CHECK(r.basis_size == 70);
    CHECK(r.pair_count == 2415);
    CHECK(r.constraint_rows == 14687);
    CHECK(r.dim_cocycles == 381);
    CHECK(r.dim_coboundaries == 70);
    CHECK(r.dim_quotient == 311);
    CHECK(r.classes.size() == 27);
    CHECK(r.matched_count == 27);
    for (const H2ClassRecord& c : r.classes) {
        CHECK(c.nonzero_on_window);
        CHECK(c.independent);
    }
}

TEST_CASE("truncated cohomology agrees across orientations") {
    const H2Report p = truncated_h2(kSmall, BracketConvention::paper);
    const H2Report r = truncated_h2(kSmall, BracketConvention::reversed);
    CHECK(p.dim_cocycles == r.dim_cocycles);
    CHECK(p.dim_coboundaries == r.dim_coboundaries);
    CHECK(p.dim_quotient == r.dim_quotient);
    CHECK(p.matched_count == r.matched_count);
}
