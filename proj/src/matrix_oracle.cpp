#include "nilorb/matrix_oracle.hpp"

#include <stdexcept>

namespace nilorb {

RationalMatrix jordan_nilpotent(const Partition& lambda) {
    std::size_t n = static_cast<std::size_t>(lambda.n());
    RationalMatrix x(n, n);
    std::size_t offset = 0;
    for (int d : lambda.parts()) {
        for (int i = 0; i + 1 < d; ++i)
            x.at(offset + i, offset + i + 1) = 1;
        offset += static_cast<std::size_t>(d);
    }
    return x;
}

bool is_nilpotent(const RationalMatrix& x) {
    if (x.rows() != x.cols()) return false;
    return x.pow(static_cast<unsigned>(x.rows())).is_zero();
}

Partition jordan_type(const RationalMatrix& x) {
    if (!is_nilpotent(x))
        throw std::domain_error("jordan_type: matrix is not in the nilpotent cone");
    std::size_t n = x.rows();
    // transpose(lambda)_k = rank(X^{k-1}) - rank(X^k)
    std::vector<int> cols;
    std::size_t prev = n;
    RationalMatrix p = x;
    for (std::size_t k = 1; k <= n && prev > 0; ++k) {
        std::size_t r = p.rank();
        cols.push_back(static_cast<int>(prev - r));
        prev = r;
        p = p * x;
    }
    return transpose(Partition(cols));
}

bool in_orbit_closure(const RationalMatrix& x, const Partition& lambda) {
    if (x.rows() != x.cols() || x.rows() != static_cast<std::size_t>(lambda.n()))
        throw std::invalid_argument("in_orbit_closure: size mismatch");
    if (!is_nilpotent(x))
        throw std::domain_error("in_orbit_closure: matrix is not in the nilpotent cone");
    RationalMatrix j = jordan_nilpotent(lambda);
    RationalMatrix xp = x, jp = j;
    for (int k = 1; k < lambda.n(); ++k) {
        if (xp.rank() > jp.rank()) return false;
        xp = xp * x;
        jp = jp * j;
    }
    return true;
}

Sl2Triple sl2_triple(const Partition& lambda) {
    std::size_t n = static_cast<std::size_t>(lambda.n());
    RationalMatrix y(n, n);
    std::size_t offset = 0;
    for (int d : lambda.parts()) {
        for (int i = 1; i < d; ++i)
            y.at(offset + i, offset + i - 1) = Rat(static_cast<long>(i) * (d - i));
        offset += static_cast<std::size_t>(d);
    }
    RationalMatrix x = jordan_nilpotent(lambda);
    return Sl2Triple{x, y, commutator(x, y)};
}

long centralizer_dimension_gl(const RationalMatrix& x) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("centralizer of non-square matrix");
    std::size_t n = x.rows();
    // Row (i,j): entry (i,j) of ZX - XZ as a linear form in vec(Z).
    RationalMatrix op(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                op.at(row, i * n + k) += x.at(k, j);   // (ZX)_{ij}
                op.at(row, k * n + j) -= x.at(i, k);   // (XZ)_{ij}
            }
        }
    return static_cast<long>(n * n) - static_cast<long>(op.rank());
}

long orbit_dimension_via_centralizer(const Partition& lambda) {
    long n = lambda.n();
    return n * n - centralizer_dimension_gl(jordan_nilpotent(lambda));
}

}  // namespace nilorb
