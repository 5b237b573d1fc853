#include "hvloop/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hvloop {

namespace {

// Strip every whitespace character; scalar text forms are whitespace-insensitive.
std::string strip_spaces(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Parse a signed "p" or "p/q" starting at pos; advances pos past the token.
Rational parse_rational_at(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_begin) throw std::invalid_argument("malformed rational: \"" + s + "\"");
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_begin) throw std::invalid_argument("malformed rational: \"" + s + "\"");
        den = s.substr(den_begin, pos - den_begin);
    }
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("zero denominator in \"" + s + "\"");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = strip_spaces(text);
    size_t pos = 0;
    Rational r = parse_rational_at(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in rational: \"" + text + "\"");
    return r;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;  // GMP prints "p" or "p/q", already canonical
    return os.str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm2();
    if (n == 0) throw std::domain_error("division by zero scalar");
    return {re_ / n, -im_ / n};
}

GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

GaussianRational parse_scalar(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    size_t pos = 0;
    Rational first = parse_rational_at(s, pos);
    if (pos == s.size()) return {first};
    // Optional "*" then "i" ends a pure real followed by an imaginary part,
    // or the whole tail is "<sign><rational>[*]i".
    if (s[pos] == '+' || s[pos] == '-') {
        bool negative = s[pos] == '-';
        ++pos;
        Rational second = parse_rational_at(s, pos);
        if (pos < s.size() && s[pos] == '*') ++pos;
        if (pos + 1 == s.size() && s[pos] == 'i') {
            return {first, negative ? Rational(-second) : second};
        }
        throw std::invalid_argument("malformed scalar: \"" + text + "\"");
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos + 1 == s.size() && s[pos] == 'i') {
        return {Rational(0), first};  // pure imaginary, e.g. "1i"
    }
    throw std::invalid_argument("malformed scalar: \"" + text + "\"");
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re());
    std::string out = to_string(z.re());
    if (z.im() > 0) {
        out += "+" + to_string(Rational(z.im())) + " i";
    } else {
        out += "-" + to_string(Rational(-z.im())) + " i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

EpsilonVerdict validate_epsilon(const GaussianRational& eps) {
    if (eps.is_zero()) return {false, "epsilon is zero"};
    int re_sign = sgn(eps.re());
    if (re_sign > 0) {
        GaussianRational inv = eps.inverse();
        if (inv.is_real() && is_integer(inv.re())) {
            return {false, "1/epsilon is an integer (" + to_string(inv.re()) + ")"};
        }
        return {true, "Re(epsilon) > 0 and 1/epsilon is not an integer"};
    }
    if (re_sign == 0) {
        if (sgn(eps.im()) > 0) return {true, "Re(epsilon) = 0 and Im(epsilon) > 0"};
        return {false, "Re(epsilon) = 0 requires Im(epsilon) > 0"};
    }
    return {false, "Re(epsilon) < 0"};
}

}  // namespace hvloop
