#pragma once

// The graded algebra underlying everything else: basis symbols L(degree,loop)
// and H(degree,loop), finitely supported elements over Q(i), the bracket in
// both orientation conventions, and the residuals (Jacobi, grading) that the
// verification sweeps quantify over.
//
// Bracket (paper orientation):
//   [L(a,i), L(b,j)] = (a-b) L(a+b, i+j)
//   [L(a,i), H(b,j)] = -b    H(a+b, i+j)
//   [H(a,i), H(b,j)] = 0
// The reversed orientation negates the L-L and L-H coefficients consistently,
// so antisymmetry is preserved either way.

#include <map>
#include <string>
#include <vector>

#include "hvloop/scalar.hpp"

namespace hvloop {

enum class Kind { L, H };

/// A basis symbol.  Canonical order is lexicographic on (kind, degree, loop)
/// with L < H.
struct BasisIndex {
    Kind kind = Kind::L;
    Rational degree;
    long loop = 0;

    friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
        return a.kind == b.kind && a.degree == b.degree && a.loop == b.loop;
    }
    friend bool operator!=(const BasisIndex& a, const BasisIndex& b) { return !(a == b); }
    friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        int c = cmp(a.degree, b.degree);
        if (c != 0) return c < 0;
        return a.loop < b.loop;
    }
};

BasisIndex L(const Rational& degree, long loop);
BasisIndex H(const Rational& degree, long loop);

/// Text form "L(-3/2,4)" / "H(0,1)".
std::string to_string(const BasisIndex& b);

/// Parse the text form above; throws std::invalid_argument when malformed.
BasisIndex parse_basis_index(const std::string& text);

/// A finitely supported Q(i)-linear combination of basis symbols.  Canonical:
/// zero coefficients are never stored, so structural equality is exact
/// equality of elements.
class Element {
public:
    Element() = default;
    Element(const BasisIndex& b, const GaussianRational& coeff) { add(b, coeff); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<BasisIndex, GaussianRational>& terms() const { return terms_; }

    /// Coefficient of b (zero when absent).
    GaussianRational coeff(const BasisIndex& b) const;

    void add(const BasisIndex& b, const GaussianRational& coeff);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const GaussianRational& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const GaussianRational& s, Element a) { return a *= s; }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    std::map<BasisIndex, GaussianRational> terms_;
};

/// Text form "c1*B1 + c2*B2" in canonical basis order; "0" for the zero element.
std::string to_string(const Element& e);

enum class BracketConvention { paper, reversed };

/// A single bracket term: the bracket of two basis symbols is always a scalar
/// multiple of one basis symbol (possibly zero).
struct BracketTerm {
    GaussianRational coeff;  // zero means the bracket vanishes
    BasisIndex index;        // meaningful only when coeff != 0
};

/// Bracket of two basis symbols.
BracketTerm bracket(const BasisIndex& x, const BasisIndex& y, BracketConvention conv = BracketConvention::paper);

/// Bilinear extension to elements.
Element bracket(const Element& x, const Element& y, BracketConvention conv = BracketConvention::paper);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero for a Lie bracket.
Element jacobi_residual(const Element& x, const Element& y, const Element& z,
                        BracketConvention conv = BracketConvention::paper);
Element jacobi_residual(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                        BracketConvention conv = BracketConvention::paper);

/// [L(0,0), x] + degree(x)*x, for a homogeneous basis symbol x; identically
/// zero under the paper orientation (L(0,0) grades by minus the degree).
Element grading_residual(const BasisIndex& x);

/// Degree/loop additivity probe: the bracket of homogeneous symbols is
/// supported (if anywhere) at degree sum and loop sum.
bool bracket_respects_grading(const BasisIndex& x, const BasisIndex& y, BracketConvention conv);

/// A rectangular truncation of the basis: degrees range over the subgroup of
/// Q generated by `degree_generators`, capped at |degree| <= degree_bound;
/// loops range over [loop_min, loop_max].
struct Window {
    Rational degree_bound;                      // A >= 0
    long loop_min = 0;
    long loop_max = 0;
    std::vector<Rational> degree_generators{};  // default {1} when empty

    /// Generator of the (cyclic) subgroup of Q spanned by degree_generators.
    Rational subgroup_step() const;

    /// All degrees d in the subgroup with |d| <= degree_bound, ascending.
    std::vector<Rational> degrees() const;

    std::vector<long> loops() const;

    bool contains_degree(const Rational& d) const;
    bool contains_loop(long loop) const { return loop >= loop_min && loop <= loop_max; }
    bool contains(const BasisIndex& b) const { return contains_degree(b.degree) && contains_loop(b.loop); }

    /// True when the bracket of x and y either vanishes or stays inside the
    /// window (the closure guard used by every identity sweep).
    bool bracket_closed(const BasisIndex& x, const BasisIndex& y, BracketConvention conv) const;
};

/// Sorted, duplicate-free basis enumeration of the window.  Throws
/// std::invalid_argument when the window is empty (negative bound, empty loop
/// range, or no generators with nonzero span).
std::vector<BasisIndex> enumerate_basis(const Window& w);

}  // namespace hvloop
