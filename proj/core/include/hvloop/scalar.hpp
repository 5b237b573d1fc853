#pragma once

// Exact scalar arithmetic for the workbench: arbitrary-precision rationals
// (GMP mpq_class, always canonical: reduced, denominator > 0) and Gaussian
// rationals Q(i).  All arithmetic is exact; there is no floating point
// anywhere in the library.

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hvloop {

using Rational = mpq_class;

/// Parse "p/q" or "p" (optional leading sign).  Throws std::invalid_argument
/// on malformed input, std::domain_error on a zero denominator.
Rational parse_rational(const std::string& text);

/// Minimal canonical text: "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// True when r has denominator 1.
bool is_integer(const Rational& r);

/// An element of Q(i), the field the cocycle and product coefficients live in.
/// Componentwise canonical (each part a reduced mpq_class); equality is
/// structural and exact.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re), im_(0) {}             // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2, the rational norm used for exact magnitude comparisons.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        im_ = im;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational inverse() const;

private:
    Rational re_;
    Rational im_;
};

/// The imaginary unit.
GaussianRational imaginary_unit();

/// Parse "p/q", "p/q+r/s i", "p/q-r/s i" (integers accepted without "/1",
/// whitespace ignored, the '*' before 'i' optional).  Throws
/// std::invalid_argument on malformed input.
GaussianRational parse_scalar(const std::string& text);

/// Canonical text form: to_string(re) for real values, otherwise
/// "<re>+<im> i" / "<re>-<im> i" with both parts in minimal "p/q" form.
std::string to_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Verdict of the deformation-parameter admissibility test.
struct EpsilonVerdict {
    bool valid = false;
    std::string reason;  // human-readable justification either way
};

/// eps is admissible when (Re eps > 0 and 1/eps is not an integer) or
/// (Re eps = 0 and Im eps > 0).  Admissibility guarantees the denominators
/// 1 + eps*(degree sum) never vanish for integer degree sums.
EpsilonVerdict validate_epsilon(const GaussianRational& eps);

}  // namespace hvloop
