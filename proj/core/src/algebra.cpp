#include "hvloop/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace hvloop {

BasisIndex L(const Rational& degree, long loop) { return {Kind::L, degree, loop}; }
BasisIndex H(const Rational& degree, long loop) { return {Kind::H, degree, loop}; }

std::string to_string(const BasisIndex& b) {
    std::string out = b.kind == Kind::L ? "L(" : "H(";
    out += to_string(b.degree);
    out += ",";
    out += std::to_string(b.loop);
    out += ")";
    return out;
}

BasisIndex parse_basis_index(const std::string& text) {
    size_t open = text.find('(');
    size_t comma = text.find(',', open == std::string::npos ? 0 : open);
    size_t close = text.rfind(')');
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos || close < comma) {
        throw std::invalid_argument("malformed basis index: \"" + text + "\"");
    }
    std::string head = text.substr(0, open);
    // allow surrounding whitespace around the kind letter
    size_t h0 = head.find_first_not_of(" \t");
    size_t h1 = head.find_last_not_of(" \t");
    if (h0 == std::string::npos || h1 != h0 || (head[h0] != 'L' && head[h0] != 'H')) {
        throw std::invalid_argument("malformed basis index: \"" + text + "\"");
    }
    Kind kind = head[h0] == 'L' ? Kind::L : Kind::H;
    Rational degree = parse_rational(text.substr(open + 1, comma - open - 1));
    std::string loop_text = text.substr(comma + 1, close - comma - 1);
    size_t pos = 0;
    long loop = std::stol(loop_text, &pos);
    while (pos < loop_text.size() && std::isspace(static_cast<unsigned char>(loop_text[pos]))) ++pos;
    if (pos != loop_text.size()) throw std::invalid_argument("malformed basis index: \"" + text + "\"");
    return {kind, degree, loop};
}

GaussianRational Element::coeff(const BasisIndex& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Element::add(const BasisIndex& b, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

Element& Element::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        if (!first) out += " + ";
        first = false;
        out += to_string(c) + "*" + to_string(b);
    }
    return out;
}

BracketTerm bracket(const BasisIndex& x, const BasisIndex& y, BracketConvention conv) {
    BracketTerm out;
    const Rational sum_degree = x.degree + y.degree;
    const long sum_loop = x.loop + y.loop;
    Rational coeff;
    Kind kind = Kind::L;
    if (x.kind == Kind::L && y.kind == Kind::L) {
        coeff = x.degree - y.degree;
        kind = Kind::L;
    } else if (x.kind == Kind::L && y.kind == Kind::H) {
        coeff = -y.degree;
        kind = Kind::H;
    } else if (x.kind == Kind::H && y.kind == Kind::L) {
        coeff = x.degree;  // antisymmetric counterpart of the L-H row
        kind = Kind::H;
    } else {
        return out;  // [H,H] = 0
    }
    if (conv == BracketConvention::reversed) coeff = -coeff;
    if (coeff == 0) return out;
    out.coeff = GaussianRational(coeff);
    out.index = {kind, sum_degree, sum_loop};
    return out;
}

Element bracket(const Element& x, const Element& y, BracketConvention conv) {
    Element out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            BracketTerm t = bracket(bx, by, conv);
            if (!t.coeff.is_zero()) out.add(t.index, cx * cy * t.coeff);
        }
    }
    return out;
}

Element jacobi_residual(const Element& x, const Element& y, const Element& z, BracketConvention conv) {
    Element out = bracket(x, bracket(y, z, conv), conv);
    out += bracket(y, bracket(z, x, conv), conv);
    out += bracket(z, bracket(x, y, conv), conv);
    return out;
}

Element jacobi_residual(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z, BracketConvention conv) {
    Element out;
    const BasisIndex* triple[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
    for (auto& [a, b, c] : triple) {
        BracketTerm inner = bracket(*b, *c, conv);
        if (inner.coeff.is_zero()) continue;
        BracketTerm outer = bracket(*a, inner.index, conv);
        if (outer.coeff.is_zero()) continue;
        out.add(outer.index, inner.coeff * outer.coeff);
    }
    return out;
}

Element grading_residual(const BasisIndex& x) {
    Element out;
    BracketTerm t = bracket(L(0, 0), x, BracketConvention::paper);
    if (!t.coeff.is_zero()) out.add(t.index, t.coeff);
    out.add(x, GaussianRational(x.degree));
    return out;
}

bool bracket_respects_grading(const BasisIndex& x, const BasisIndex& y, BracketConvention conv) {
    BracketTerm t = bracket(x, y, conv);
    if (t.coeff.is_zero()) return true;
    return t.index.degree == x.degree + y.degree && t.index.loop == x.loop + y.loop;
}

Rational Window::subgroup_step() const {
    std::vector<Rational> gens = degree_generators;
    if (gens.empty()) gens.push_back(Rational(1));
    // A finitely generated subgroup of Q is cyclic; its generator is the
    // rational gcd of the generators: gcd(a/b, c/d) = gcd(a*d, c*b)/(b*d).
    Rational step(0);
    for (const Rational& g : gens) {
        if (g == 0) continue;
        Rational a = g > 0 ? g : Rational(-g);
        if (step == 0) {
            step = a;
            continue;
        }
        mpz_class num;
        mpz_class lhs = step.get_num() * a.get_den();
        mpz_class rhs = a.get_num() * step.get_den();
        mpz_gcd(num.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
        Rational next(num, step.get_den() * a.get_den());
        next.canonicalize();
        step = next;
    }
    return step;  // zero when no generator spans anything
}

std::vector<Rational> Window::degrees() const {
    std::vector<Rational> out;
    if (degree_bound < 0) return out;
    Rational step = subgroup_step();
    if (step == 0) {
        out.push_back(Rational(0));
        return out;
    }
    Rational reach = degree_bound / step;
    mpz_class n = reach.get_num() / reach.get_den();  // floor for nonnegative reach
    for (mpz_class k = -n; k <= n; ++k) {
        out.push_back(Rational(k) * step);
    }
    return out;
}

std::vector<long> Window::loops() const {
    std::vector<long> out;
    for (long l = loop_min; l <= loop_max; ++l) out.push_back(l);
    return out;
}

bool Window::contains_degree(const Rational& d) const {
    if (d < -degree_bound || d > degree_bound) return false;
    Rational step = subgroup_step();
    if (step == 0) return d == 0;
    return is_integer(d / step);
}

bool Window::bracket_closed(const BasisIndex& x, const BasisIndex& y, BracketConvention conv) const {
    BracketTerm t = bracket(x, y, conv);
    return t.coeff.is_zero() || contains(t.index);
}

std::vector<BasisIndex> enumerate_basis(const Window& w) {
    if (w.degree_bound < 0 || w.loop_min > w.loop_max) {
        throw std::invalid_argument("window too small: degree bound must be >= 0 and loop_min <= loop_max");
    }
    std::vector<BasisIndex> out;
    for (Kind kind : {Kind::L, Kind::H}) {
        for (const Rational& d : w.degrees()) {
            for (long l : w.loops()) {
                out.push_back({kind, d, l});
            }
        }
    }
    if (out.empty()) throw std::invalid_argument("window too small: no degrees within bound");
    return out;  // loop order above matches the canonical (kind, degree, loop) order
}

}  // namespace hvloop
