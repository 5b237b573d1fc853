#pragma once

// The graded left-symmetric product on the loop algebra.  A product on the
// L/H basis is described by five coefficient functions
//
//   L(a,i) o L(b,j) = a(a,i,b,j) L(a+b,i+j)
//   L(a,i) o H(b,j) = b(a,i,b,j) H(a+b,i+j)
//   H(a,i) o L(b,j) = c(a,i,b,j) H(a+b,i+j)
//   H(a,i) o H(b,j) = d(a,i,b,j) L(a+b,i+j) + e(a,i,b,j) H(a+b,i+j)
//
// and the two-parameter family verified by this workbench is
//
//   a(x,i,y,j) = -y (1+eps y) / (1+eps (x+y))
//   b(x,i,y,j) = -y (1 + (1-eps y) m [x+y=0])
//   c(x,i,y,j) = +/- y (1+eps y) m [x+y=0]      (sign per CSign)
//   d = e = 0
//
// where [..] is the Kronecker bracket on the degree sum.  The two c-signs are
// both constructible because the source material is internally inconsistent
// about which one is meant; resolve_c_sign (structure_equations.hpp) arbitrates
// empirically, and `plus` is the variant that survives.

#include <functional>

#include "hvloop/algebra.hpp"
#include "hvloop/scalar.hpp"

namespace hvloop {

/// Which sign the Kronecker-supported c coefficient carries.
enum class CSign { plus, minus };

std::string to_string(CSign s);

/// Parameter record for the verified product family.
struct LsaParams {
    GaussianRational eps;  // must pass validate_epsilon
    GaussianRational m;
    CSign c_sign = CSign::plus;
    BracketConvention convention = BracketConvention::paper;
};

/// A product table given by its five coefficient evaluators.  Evaluators are
/// total on (degree, loop, degree, loop); they throw std::domain_error when a
/// denominator 1 + eps*(degree sum) vanishes (impossible for admissible eps
/// and integral degree sums, possible on rational-degree windows).
struct StructureFunctions {
    using Evaluator = std::function<GaussianRational(const Rational&, long, const Rational&, long)>;
    Evaluator a;
    Evaluator b;
    Evaluator c;
    Evaluator d;
    Evaluator e;
};

/// The verified family at the given parameters.  Throws std::domain_error when
/// p.eps fails validate_epsilon (the message carries the verdict reason).
StructureFunctions structure_functions(const LsaParams& p);

/// The graded product of two basis symbols / elements under a product table.
Element lsa_product(const BasisIndex& x, const BasisIndex& y, const StructureFunctions& f);
Element lsa_product(const Element& x, const Element& y, const StructureFunctions& f);
Element lsa_product(const Element& x, const Element& y, const LsaParams& p);

/// (x o y) o z - x o (y o z).
Element associator(const Element& x, const Element& y, const Element& z, const StructureFunctions& f);
Element associator(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z, const StructureFunctions& f);

/// associator(x,y,z) - associator(y,x,z); identically zero exactly when the
/// product is left-symmetric.
Element left_symmetry_residual(const Element& x, const Element& y, const Element& z,
                               const StructureFunctions& f);
Element left_symmetry_residual(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                               const StructureFunctions& f);
Element left_symmetry_residual(const BasisIndex& x, const BasisIndex& y, const BasisIndex& z,
                               const LsaParams& p);

/// x o y - y o x - [x,y] under the given bracket orientation; identically zero
/// exactly when the product's commutator reproduces the bracket.
Element compatibility_residual(const Element& x, const Element& y, const StructureFunctions& f,
                               BracketConvention conv);
Element compatibility_residual(const BasisIndex& x, const BasisIndex& y, const StructureFunctions& f,
                               BracketConvention conv);
Element compatibility_residual(const BasisIndex& x, const BasisIndex& y, const LsaParams& p);

}  // namespace hvloop
