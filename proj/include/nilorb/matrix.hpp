#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

class RationalMatrix;

// Reduced row echelon form; pivot columns in increasing order.
struct Echelon {
    std::vector<Rat> entries;  // row-major, same shape as the source
    std::size_t cols = 0;
    std::vector<std::size_t> pivots;

    const Rat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// Dense matrix over arbitrary-precision rationals. Zero-sized matrices
// (0 rows or 0 columns) are legal and behave as expected under products.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rat& c) const;
    RationalMatrix transposed() const;
    RationalMatrix pow(unsigned k) const;

    Rat trace() const;
    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    std::size_t rank() const;

    Echelon rref() const;

    // Deterministic basis of the right kernel, one vector per free column of
    // the reduced echelon form.
    std::vector<std::vector<Rat>> nullspace() const;

    RationalMatrix inverse() const;

    std::vector<Rat> apply(const std::vector<Rat>& x) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) {
    return x * y - y * x;
}

// Solve A x = b; returns false if inconsistent. On success x is the
// particular solution with all free variables zero.
bool solve_linear(const RationalMatrix& a, const std::vector<Rat>& b, std::vector<Rat>& x);

// Column span membership: each column of `cols` is a basis vector.
bool in_column_span(const RationalMatrix& basis, const std::vector<Rat>& v);

}  // namespace nilorb
