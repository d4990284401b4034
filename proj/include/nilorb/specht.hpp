#pragma once

#include <vector>

#include "nilorb/multipoly.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

// Integral Specht module data: a lattice basis of the span of the permuted
// Vandermonde products, and the Gram matrix of the monomial-orthonormal
// pairing on that basis.
struct SpechtModule {
    Partition lambda;
    std::vector<MultiPoly> basis;        // integer polynomials in x1..xn
    std::vector<std::vector<Int>> gram;  // symmetric, integer entries
};

// Product of Vandermonde factors over consecutive variable blocks of sizes
// lambda_1, lambda_2, ...; blocks of size < 2 contribute 1.
MultiPoly pi_polynomial(const Partition& lambda);

// Enumerates all n! permuted pi polynomials (permutations in lexicographic
// order) and extracts a deterministic integral basis by integer row
// echelonization of the spanning lattice; no back-reduction above pivots, so
// small examples keep their familiar shapes.
SpechtModule specht_module(const Partition& lambda, int max_n = 7);

Int gram_determinant(const Partition& lambda, int max_n = 7);

// Rank of the Gram matrix over F_p = dim of the irreducible D_mu.
// Requires mu p-restricted and p prime.
long dim_irreducible_mod_p(const Partition& mu, long p, int max_n = 7);

// Monomial-orthonormal pairing of two integer polynomials.
Int specht_pairing(const MultiPoly& f, const MultiPoly& g);

// Whether f lies in the integer span of the module's basis (the basis is
// echelon, so this is a triangular divisibility check).
bool specht_lattice_contains(const SpechtModule& mod, const MultiPoly& f);

}  // namespace nilorb
