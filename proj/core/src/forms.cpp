#include "hvloop/forms.hpp"

#include <stdexcept>

namespace hvloop {

void BilinearForm::add(const BasisIndex& x, const BasisIndex& y, const GaussianRational& v) {
    if (v.is_zero() || x == y) return;
    Key key;
    GaussianRational val = v;
    if (x < y) {
        key = {x, y};
    } else {
        key = {y, x};
        val = -val;
    }
    auto [it, inserted] = entries_.emplace(key, val);
    if (!inserted) {
        it->second += val;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

GaussianRational BilinearForm::operator()(const BasisIndex& x, const BasisIndex& y) const {
    if (x == y) return {};
    if (x < y) {
        auto it = entries_.find(Key{x, y});
        return it == entries_.end() ? GaussianRational() : it->second;
    }
    auto it = entries_.find(Key{y, x});
    return it == entries_.end() ? GaussianRational() : -it->second;
}

GaussianRational BilinearForm::operator()(const Element& x, const Element& y) const {
    GaussianRational acc;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            GaussianRational v = (*this)(bx, by);
            if (!v.is_zero()) acc += cx * cy * v;
        }
    }
    return acc;
}

BilinearForm& BilinearForm::operator+=(const BilinearForm& o) {
    for (const auto& [key, v] : o.entries_) add(key.first, key.second, v);
    return *this;
}

BilinearForm& BilinearForm::operator-=(const BilinearForm& o) {
    for (const auto& [key, v] : o.entries_) add(key.first, key.second, -v);
    return *this;
}

BilinearForm& BilinearForm::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [key, v] : entries_) v *= s;
    return *this;
}

GaussianRational LinearFunctional::operator()(const BasisIndex& b) const {
    auto it = values_.find(b);
    return it == values_.end() ? GaussianRational() : it->second;
}

GaussianRational LinearFunctional::operator()(const Element& e) const {
    GaussianRational acc;
    for (const auto& [b, c] : e.terms()) {
        GaussianRational v = (*this)(b);
        if (!v.is_zero()) acc += c * v;
    }
    return acc;
}

void LinearFunctional::set(const BasisIndex& b, const GaussianRational& v) {
    if (v.is_zero()) {
        values_.erase(b);
    } else {
        values_[b] = v;
    }
}

GaussianRational coboundary_value(const LinearFunctional& f, const BasisIndex& x, const BasisIndex& y,
                                  BracketConvention conv) {
    BracketTerm t = bracket(x, y, conv);
    if (t.coeff.is_zero()) return {};
    GaussianRational v = f(t.index);
    return v.is_zero() ? GaussianRational() : t.coeff * v;
}

BilinearForm coboundary_of(const LinearFunctional& f, const Window& w, BracketConvention conv) {
    BilinearForm out;
    std::vector<BasisIndex> basis = enumerate_basis(w);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            out.add(basis[i], basis[j], coboundary_value(f, basis[i], basis[j], conv));
        }
    }
    return out;
}

GaussianRational CanonicalCocycle::operator()(const BasisIndex& x, const BasisIndex& y) const {
    // All three families pair degree a with -a and require loop weight i+j = k.
    if (x.degree + y.degree != 0 || x.loop + y.loop != k) return {};
    switch (family) {
        case 1: {
            if (x.kind != Kind::L || y.kind != Kind::L) return {};
            const Rational& a = x.degree;
            return GaussianRational(Rational((a * a * a - a) / 12));
        }
        case 2: {
            // antisymmetric extension: value on (L, H) pairs, negated on (H, L)
            if (x.kind == Kind::L && y.kind == Kind::H) {
                const Rational& a = x.degree;
                return GaussianRational(Rational(a * a - a));
            }
            if (x.kind == Kind::H && y.kind == Kind::L) {
                const Rational& a = y.degree;
                return -GaussianRational(Rational(a * a - a));
            }
            return {};
        }
        case 3: {
            if (x.kind != Kind::H || y.kind != Kind::H) return {};
            return GaussianRational(x.degree);
        }
        default:
            throw std::invalid_argument("canonical cocycle family must be 1, 2 or 3");
    }
}

BilinearForm CanonicalCocycle::on(const Window& w) const {
    BilinearForm out;
    std::vector<BasisIndex> basis = enumerate_basis(w);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            out.add(basis[i], basis[j], (*this)(basis[i], basis[j]));
        }
    }
    return out;
}

CanonicalCocycle canonical_cocycle(long k, int family) {
    if (family < 1 || family > 3) throw std::invalid_argument("canonical cocycle family must be 1, 2 or 3");
    return {k, family};
}

std::vector<long> reachable_loop_weights(const Window& w) {
    std::vector<long> out;
    for (long k = 2 * w.loop_min; k <= 2 * w.loop_max; ++k) out.push_back(k);
    return out;
}

namespace {

template <typename Form>
GaussianRational cocycle_residual_impl(const Form& psi, const BasisIndex& x, const BasisIndex& y,
                                       const BasisIndex& z, BracketConvention conv) {
    GaussianRational acc;
    const BasisIndex* cyc[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
    for (auto& [a, b, c] : cyc) {
        BracketTerm t = bracket(*b, *c, conv);
        if (t.coeff.is_zero()) continue;
        GaussianRational v = psi(*a, t.index);
        if (!v.is_zero()) acc += t.coeff * v;
    }
    return acc;
}

}  // namespace

GaussianRational cocycle_residual(const BilinearForm& psi, const BasisIndex& x, const BasisIndex& y,
                                  const BasisIndex& z, BracketConvention conv) {
    return cocycle_residual_impl(psi, x, y, z, conv);
}

GaussianRational cocycle_residual(
    const std::function<GaussianRational(const BasisIndex&, const BasisIndex&)>& psi, const BasisIndex& x,
    const BasisIndex& y, const BasisIndex& z, BracketConvention conv) {
    return cocycle_residual_impl(psi, x, y, z, conv);
}

bool triple_closed(const Window& w, const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                   BracketConvention conv) {
    return w.bracket_closed(y, z, conv) && w.bracket_closed(z, x, conv) && w.bracket_closed(x, y, conv);
}

}  // namespace hvloop
