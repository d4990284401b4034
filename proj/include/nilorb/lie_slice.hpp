#pragma once

#include <string>
#include <vector>

#include "nilorb/matrix_oracle.hpp"
#include "nilorb/poly_matrix.hpp"

namespace nilorb {

// Parametrized affine chart of the Slodowy slice through X = jordan form of
// the base-point partition: chart = X + sum a_j * basis[j], where the basis
// spans the centralizer of Y inside trace-zero matrices.
struct SliceChart {
    Sl2Triple triple;
    std::vector<RationalMatrix> basis;
    PolyMatrix chart;  // variables a1..ak
};

SliceChart slodowy_slice(const Partition& mu);

// chi_i = (-1)^{i+1} * coefficient of t^{n-i-1} in det(tI - M), i = 1..n-1.
// Requires trace(M) = 0 as a polynomial.
std::vector<MultiPoly> chi_invariants(const PolyMatrix& m);

// Defining equations of (slice cap nilpotent cone) in chart coordinates.
std::vector<MultiPoly> slice_nilpotent_equations(const Partition& mu);

// ADE symbol with its classification range: A (index >= 1), D (>= 4),
// E (6, 7 or 8).
struct KleinianType {
    char letter;
    int index;
    std::string str() const { return std::string(1, letter) + "_" + std::to_string(index); }
};

KleinianType make_kleinian(char letter, int index);

// The hypersurface equation of C^2/Gamma in variables x, y, z.
MultiPoly kleinian_equation(const KleinianType& k);

// x^{l+1} + u_1 x^{l-1} + ... + u_{l-1} x + u_l + yz with the given values.
MultiPoly semiuniversal_typeA(int ell, const std::vector<Rat>& u);

// Same family with symbolic parameters, over variables x, y, z, u1..ul.
MultiPoly semiuniversal_typeA_generic(int ell);

// Slodowy's pairs for the non-simply-laced types, plus the quotient group.
struct SlodowyPair {
    KleinianType gamma;
    KleinianType gamma_prime;
    std::string quotient;  // "S_2" or "S_3"
};

// letter in {B, C, F, G}; index ranges B: >=2, C: >=3, F: 4, G: 2.
SlodowyPair slodowy_pair(char letter, int index);

// Loads a PolyMatrix fixture: "vars ..." line, "rows cols" line, then rows of
// ';'-separated polynomial entries. '#' starts a comment line.
PolyMatrix load_poly_matrix(const std::string& path);

}  // namespace nilorb
