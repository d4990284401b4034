#include "nilorb/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace nilorb {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in -");
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in *");
    RationalMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += x * o.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator*(const Rat& c) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    RationalMatrix acc = identity(rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Rat RationalMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Echelon RationalMatrix::rref() const {
    Echelon e;
    e.entries = a_;
    e.cols = cols_;
    auto at = [&](std::size_t i, std::size_t j) -> Rat& { return e.entries[i * cols_ + j]; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
        Rat inv = 1 / at(r, c);
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            Rat f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t RationalMatrix::rank() const { return rref().pivots.size(); }

std::vector<std::vector<Rat>> RationalMatrix::nullspace() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    RationalMatrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    Echelon e = aug.rref();
    if (e.pivots.size() < rows_ || (rows_ > 0 && e.pivots.back() >= cols_))
        throw std::domain_error("matrix is singular");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = e.at(i, cols_ + j);
    return out;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rat> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

std::string RationalMatrix::str() const {
    std::vector<std::string> cells(rows_ * cols_);
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cells[i * cols_ + j] = at(i, j).get_str();
            width[j] = std::max(width[j], cells[i * cols_ + j].size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::string& s = cells[i * cols_ + j];
            out << std::string(width[j] - s.size(), ' ') << s;
            out << (j + 1 < cols_ ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

bool solve_linear(const RationalMatrix& a, const std::vector<Rat>& b, std::vector<Rat>& x) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = aug.rref();
    for (std::size_t c : e.pivots)
        if (c == a.cols()) return false;
    x.assign(a.cols(), Rat(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.at(r, a.cols());
    return true;
}

bool in_column_span(const RationalMatrix& basis, const std::vector<Rat>& v) {
    std::vector<Rat> x;
    return solve_linear(basis, v, x);
}

}  // namespace nilorb
