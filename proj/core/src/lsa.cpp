#include "hvloop/lsa.hpp"

#include <stdexcept>

namespace hvloop {

std::string to_string(CSign s) { return s == CSign::plus ? "plus" : "minus"; }

StructureFunctions structure_functions(const LsaParams& p) {
    EpsilonVerdict v = validate_epsilon(p.eps);
    if (!v.valid) {
        throw std::domain_error("inadmissible deformation parameter: " + v.reason);
    }
    const GaussianRational eps = p.eps;
    const GaussianRational m = p.m;
    const GaussianRational sign = (p.c_sign == CSign::plus) ? GaussianRational(1) : GaussianRational(-1);

    StructureFunctions f;
    f.a = [eps](const Rational& x, long, const Rational& y, long) -> GaussianRational {
        GaussianRational denom = GaussianRational(1) + eps * GaussianRational(x + y);
        if (denom.is_zero()) {
            throw std::domain_error("product denominator 1+eps*(degree sum) vanished at degree sum " +
                                    to_string(Rational(x + y)));
        }
        return -GaussianRational(y) * (GaussianRational(1) + eps * GaussianRational(y)) / denom;
    };
    f.b = [eps, m](const Rational& x, long, const Rational& y, long) -> GaussianRational {
        GaussianRational extra = 0;
        if (x + y == 0) extra = (GaussianRational(1) - eps * GaussianRational(y)) * m;
        return -GaussianRational(y) * (GaussianRational(1) + extra);
    };
    f.c = [eps, m, sign](const Rational& x, long, const Rational& y, long) -> GaussianRational {
        if (x + y != 0) return 0;
        return sign * GaussianRational(y) * (GaussianRational(1) + eps * GaussianRational(y)) * m;
    };
    f.d = [](const Rational&, long, const Rational&, long) -> GaussianRational { return 0; };
    f.e = [](const Rational&, long, const Rational&, long) -> GaussianRational { return 0; };
    return f;
}

Element lsa_product(const BasisIndex& x, const BasisIndex& y, const StructureFunctions& f) {
    const Rational sum_degree = x.degree + y.degree;
    const long sum_loop = x.loop + y.loop;
    Element out;
    if (x.kind == Kind::L && y.kind == Kind::L) {
        out.add(L(sum_degree, sum_loop), f.a(x.degree, x.loop, y.degree, y.loop));
    } else if (x.kind == Kind::L && y.kind == Kind::H) {
        out.add(H(sum_degree, sum_loop), f.b(x.degree, x.loop, y.degree, y.loop));
    } else if (x.kind == Kind::H && y.kind == Kind::L) {
        out.add(H(sum_degree, sum_loop), f.c(x.degree, x.loop, y.degree, y.loop));
    } else {
        out.add(L(sum_degree, sum_loop), f.d(x.degree, x.loop, y.degree, y.loop));
        out.add(H(sum_degree, sum_loop), f.e(x.degree, x.loop, y.degree, y.loop));
    }
    return out;
}

Element lsa_product(const Element& x, const Element& y, const StructureFunctions& f) {
    Element out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            Element part = lsa_product(bx, by, f);
            part *= cx * cy;
            out += part;
        }
    }
    return out;
}

Element lsa_product(const Element& x, const Element& y, const LsaParams& p) {
    return lsa_product(x, y, structure_functions(p));
}

Element associator(const Element& x, const Element& y, const Element& z, const StructureFunctions& f) {
    return lsa_product(lsa_product(x, y, f), z, f) - lsa_product(x, lsa_product(y, z, f), f);
}

Element associator(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z, const StructureFunctions& f) {
    return associator(Element(x, 1), Element(y, 1), Element(z, 1), f);
}

Element left_symmetry_residual(const Element& x, const Element& y, const Element& z,
                               const StructureFunctions& f) {
    return associator(x, y, z, f) - associator(y, x, z, f);
}

Element left_symmetry_residual(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                               const StructureFunctions& f) {
    return left_symmetry_residual(Element(x, 1), Element(y, 1), Element(z, 1), f);
}

Element left_symmetry_residual(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                               const LsaParams& p) {
    return left_symmetry_residual(x, y, z, structure_functions(p));
}

Element compatibility_residual(const Element& x, const Element& y, const StructureFunctions& f,
                               BracketConvention conv) {
    return lsa_product(x, y, f) - lsa_product(y, x, f) - bracket(x, y, conv);
}

Element compatibility_residual(const BasisIndex& x, const BasisIndex& y, const StructureFunctions& f,
                               BracketConvention conv) {
    return compatibility_residual(Element(x, 1), Element(y, 1), f, conv);
}

Element compatibility_residual(const BasisIndex& x, const BasisIndex& y, const LsaParams& p) {
    return compatibility_residual(Element(x, 1), Element(y, 1), structure_functions(p), p.convention);
}

}  // namespace hvloop
