#include "nilorb/poly_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilorb {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
    a_.assign(rows_ * cols_, MultiPoly(vars_));
}

PolyMatrix PolyMatrix::from_rational(const RationalMatrix& m, std::vector<std::string> vars) {
    PolyMatrix out(m.rows(), m.cols(), std::move(vars));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = MultiPoly::constant(out.vars_, m.at(i, j));
    return out;
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::vector<std::string> vars) {
    PolyMatrix out(n, n, std::move(vars));
    for (std::size_t i = 0; i < n; ++i)
        out.at(i, i) = MultiPoly::constant(out.vars_, 1);
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || vars_ != o.vars_)
        throw std::invalid_argument("poly matrix mismatch in +");
    PolyMatrix out(rows_, cols_, vars_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_ || vars_ != o.vars_)
        throw std::invalid_argument("poly matrix mismatch in *");
    PolyMatrix out(rows_, o.cols_, vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
        }
    return out;
}

PolyMatrix PolyMatrix::operator*(const MultiPoly& p) const {
    PolyMatrix out(rows_, cols_, vars_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * p;
    return out;
}

MultiPoly PolyMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square poly matrix");
    MultiPoly t(vars_);
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

RationalMatrix PolyMatrix::eval(const std::vector<Rat>& point) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).eval(point);
    return out;
}

std::string PolyMatrix::str() const {
    std::vector<std::string> cells(rows_ * cols_);
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cells[i * cols_ + j] = at(i, j).str();
            width[j] = std::max(width[j], cells[i * cols_ + j].size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::string& s = cells[i * cols_ + j];
            out << s << std::string(width[j] - s.size(), ' ');
            out << (j + 1 < cols_ ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

std::vector<MultiPoly> char_poly_coeffs(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows();
    const std::vector<std::string>& vars = m.vars();
    std::vector<MultiPoly> c;
    c.reserve(n);
    PolyMatrix nk = m;  // N_1 = M
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) nk = m * (nk + PolyMatrix::identity(n, vars) * c.back());
        c.push_back(nk.trace() * Rat(-1, static_cast<long>(k)));
    }
    return c;
}

MultiPoly char_poly(const PolyMatrix& m, const std::string& tvar) {
    for (const std::string& v : m.vars())
        if (v == tvar)
            throw std::invalid_argument("char_poly: variable '" + tvar + "' is not fresh");
    std::vector<MultiPoly> c = char_poly_coeffs(m);
    std::vector<std::string> ext = m.vars();
    ext.push_back(tvar);
    std::size_t n = m.rows();
    std::size_t tidx = ext.size() - 1;

    MultiPoly out(ext);
    MultiPoly::Expo lead(ext.size(), 0);
    lead[tidx] = static_cast<unsigned>(n);
    out.add_term(lead, 1);
    for (std::size_t k = 1; k <= n; ++k)
        for (const auto& [e, q] : c[k - 1].terms()) {
            MultiPoly::Expo ee(ext.size(), 0);
            std::copy(e.begin(), e.end(), ee.begin());
            ee[tidx] = static_cast<unsigned>(n - k);
            out.add_term(ee, q);
        }
    return out;
}

}  // namespace nilorb
