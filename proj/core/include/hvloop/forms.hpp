#pragma once

// Antisymmetric bilinear forms, linear functionals and their coboundaries,
// the three canonical cocycle families, and the cocycle identity residual.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hvloop/algebra.hpp"

namespace hvloop {

/// Sparse antisymmetric bilinear form on basis symbols.  Only keys (x, y)
/// with x < y are stored; evaluation applies the antisymmetry sign, and the
/// diagonal is identically zero.  A form materialized over a window is the
/// window-restriction of whatever global form produced it.
class BilinearForm {
public:
    using Key = std::pair<BasisIndex, BasisIndex>;

    bool is_zero() const { return entries_.empty(); }
    size_t entry_count() const { return entries_.size(); }
    const std::map<Key, GaussianRational>& entries() const { return entries_; }

    /// Adds v to the (x, y) entry; (y, x) implicitly receives -v.  Adding on
    /// the diagonal is a no-op (the antisymmetric diagonal is zero).
    void add(const BasisIndex& x, const BasisIndex& y, const GaussianRational& v);

    GaussianRational operator()(const BasisIndex& x, const BasisIndex& y) const;

    /// Bilinear extension to elements.
    GaussianRational operator()(const Element& x, const Element& y) const;

    BilinearForm& operator+=(const BilinearForm& o);
    BilinearForm& operator-=(const BilinearForm& o);
    BilinearForm& operator*=(const GaussianRational& s);

    friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) { return a += b; }
    friend BilinearForm operator-(BilinearForm a, const BilinearForm& b) { return a -= b; }
    friend BilinearForm operator*(const GaussianRational& s, BilinearForm a) { return a *= s; }

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const BilinearForm& a, const BilinearForm& b) { return !(a == b); }

private:
    std::map<Key, GaussianRational> entries_;
};

/// Finitely supported linear functional on basis symbols, extended by zero
/// elsewhere (so it is defined on the whole algebra).
class LinearFunctional {
public:
    bool is_zero() const { return values_.empty(); }
    const std::map<BasisIndex, GaussianRational>& values() const { return values_; }

    GaussianRational operator()(const BasisIndex& b) const;
    GaussianRational operator()(const Element& e) const;

    void set(const BasisIndex& b, const GaussianRational& v);

    friend bool operator==(const LinearFunctional& a, const LinearFunctional& b) {
        return a.values_ == b.values_;
    }

private:
    std::map<BasisIndex, GaussianRational> values_;
};

/// Coboundary value (d f)(x, y) = f([x, y]) at a pair of basis symbols.
GaussianRational coboundary_value(const LinearFunctional& f, const BasisIndex& x, const BasisIndex& y,
                                  BracketConvention conv = BracketConvention::paper);

/// The coboundary of f materialized over all pairs of the window basis.
BilinearForm coboundary_of(const LinearFunctional& f, const Window& w,
                           BracketConvention conv = BracketConvention::paper);

/// The three canonical cocycle families at loop weight k:
///   family 1 pairs L(a,i) with L(-a,k-i), value (a^3 - a)/12;
///   family 2 pairs L(a,i) with H(-a,k-i), value  a^2 - a;
///   family 3 pairs H(a,i) with H(-a,k-i), value  a.
struct CanonicalCocycle {
    long k = 0;
    int family = 1;  // 1, 2 or 3

    /// Global (window-independent) value at a pair of basis symbols.
    GaussianRational operator()(const BasisIndex& x, const BasisIndex& y) const;

    /// Window restriction as a sparse form.
    BilinearForm on(const Window& w) const;
};

CanonicalCocycle canonical_cocycle(long k, int family);

/// Loop weights k reachable as i+j inside the window's loop range.
std::vector<long> reachable_loop_weights(const Window& w);

/// psi(x,[y,z]) + psi(y,[z,x]) + psi(z,[x,y]) for basis symbols; vanishing of
/// this residual over all triples is the 2-cocycle identity.
GaussianRational cocycle_residual(const BilinearForm& psi, const BasisIndex& x, const BasisIndex& y,
                                  const BasisIndex& z, BracketConvention conv = BracketConvention::paper);

/// Same residual for an arbitrary pair evaluator (used for global formula
/// forms that are not materialized).
GaussianRational cocycle_residual(
    const std::function<GaussianRational(const BasisIndex&, const BasisIndex&)>& psi, const BasisIndex& x,
    const BasisIndex& y, const BasisIndex& z, BracketConvention conv = BracketConvention::paper);

/// True when all three pairwise brackets of the triple vanish or stay in w.
bool triple_closed(const Window& w, const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                   BracketConvention conv = BracketConvention::paper);

}  // namespace hvloop
