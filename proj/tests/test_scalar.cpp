// Exact scalar field and deformation-parameter admissibility.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hvloop/sampling.hpp"
#include "hvloop/scalar.hpp"

using namespace hvloop;

TEST_CASE("field arithmetic on exact values") {
    const GaussianRational half{Rational(1, 2)};
    const GaussianRational third{Rational(1, 3)};
    CHECK(half + third == GaussianRational(Rational(5, 6)));

    const GaussianRational i = imaginary_unit();
    CHECK(i * i == GaussianRational(Rational(-1)));

    const GaussianRational z{Rational(2, 3)};
    CHECK_THROWS_AS(z / GaussianRational(), std::domain_error);
}

TEST_CASE("canonical form makes equality structural") {
    CHECK(parse_scalar("2/4") == parse_scalar("1/2"));
    CHECK(parse_scalar("-6/8") == parse_scalar("-3/4"));
    CHECK(to_string(parse_scalar("2/4")) == "1/2");
}

TEST_CASE("text forms round-trip") {
    for (const char* text : {"2/3", "-7", "0", "5/9", "1", "-2/7"}) {
        const GaussianRational v = parse_scalar(text);
        CHECK(parse_scalar(to_string(v)) == v);
        CHECK(v.is_real());
    }
    const GaussianRational c = parse_scalar("0/1+1/1 i");
    CHECK(c == imaginary_unit());
    CHECK(parse_scalar(to_string(c)) == c);
    CHECK(parse_scalar("1i") == imaginary_unit());
    CHECK(parse_scalar("2-3i") == GaussianRational(Rational(2), Rational(-3)));
    CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::domain_error);
}

TEST_CASE("epsilon admissibility verdicts") {
    CHECK(validate_epsilon(parse_scalar("2/3")).valid);

    const EpsilonVerdict half = validate_epsilon(parse_scalar("1/2"));
    CHECK_FALSE(half.valid);
    // The reason names the offending integral inverse.
    CHECK(half.reason.find("integer") != std::string::npos);
    CHECK(half.reason.find("2") != std::string::npos);

    CHECK(validate_epsilon(imaginary_unit()).valid);
    CHECK_FALSE(validate_epsilon(parse_scalar("-1")).valid);
    CHECK_FALSE(validate_epsilon(GaussianRational()).valid);
    // Negative imaginary part on the Re = 0 branch is rejected.
    CHECK_FALSE(validate_epsilon(GaussianRational(Rational(0), Rational(-2))).valid);
    // Positive real part with non-integer inverse is fine even when complex.
    CHECK(validate_epsilon(GaussianRational(Rational(1), Rational(1))).valid);
}

TEST_CASE("field axioms hold for seeded random scalars") {
    SampleStream s(42);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational a = small_scalar(s);
        const GaussianRational b = small_scalar(s);
        const GaussianRational c = small_scalar(s);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(Rational(1)));
    }
}

TEST_CASE("conjugation and norm") {
    SampleStream s(7);
    for (int trial = 0; trial < 50; ++trial) {
        const GaussianRational a = small_scalar(s);
        const GaussianRational n = a * a.conj();
        CHECK(n.is_real());
        CHECK(n.re() == a.norm2());
    }
}
