#pragma once

#include "nilorb/matrix.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

// X, Y nilpotent with H = [X,Y], [H,X] = 2X, [H,Y] = -2Y.
struct Sl2Triple {
    RationalMatrix X, Y, H;
};

// Block-diagonal nilpotent with Jordan blocks of sizes lambda_1, lambda_2, ...
// (superdiagonal ones), largest block first.
RationalMatrix jordan_nilpotent(const Partition& lambda);

bool is_nilpotent(const RationalMatrix& x);

// Jordan block sizes recovered from the rank sequence of powers.
// Throws if x is not nilpotent.
Partition jordan_type(const RationalMatrix& x);

// rank(X^k) <= rank(J_lambda^k) for all k, computed from actual powers on
// both sides; the brute-force counterpart of the dominance test.
bool in_orbit_closure(const RationalMatrix& x, const Partition& lambda);

// X = jordan_nilpotent(lambda); Y has subdiagonal entries i*(d-i) inside each
// block of size d.
Sl2Triple sl2_triple(const Partition& lambda);

// Kernel dimension of Z -> [Z, X] on all n x n matrices.
long centralizer_dimension_gl(const RationalMatrix& x);

// n^2 - dim of the gl centralizer of the Jordan representative; the identity
// is central and the trace-zero cut removes exactly one dimension, so this
// equals the orbit dimension inside sl_n.
long orbit_dimension_via_centralizer(const Partition& lambda);

}  // namespace nilorb
