#pragma once

#include <string>
#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/multipoly.hpp"

namespace nilorb {

// Matrix whose entries are polynomials over one shared variable list.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> vars);

    static PolyMatrix from_rational(const RationalMatrix& m, std::vector<std::string> vars);
    static PolyMatrix identity(std::size_t n, std::vector<std::string> vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const MultiPoly& p) const;

    MultiPoly trace() const;
    RationalMatrix eval(const std::vector<Rat>& point) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::string> vars_;
    std::vector<MultiPoly> a_;
};

// Coefficients c_1..c_n with det(tI - M) = t^n + c_1 t^{n-1} + ... + c_n,
// computed by the Faddeev-LeVerrier recurrence (only integer divisions, so
// exact over the rationals). Each c_k lives over the matrix's variables.
std::vector<MultiPoly> char_poly_coeffs(const PolyMatrix& m);

// det(tI - M) as a polynomial over vars(M) + {tvar}; tvar must be fresh.
MultiPoly char_poly(const PolyMatrix& m, const std::string& tvar);

}  // namespace nilorb
