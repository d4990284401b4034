#include "nilorb/lie_slice.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nilorb {

SliceChart slodowy_slice(const Partition& mu) {
    if (mu.n() < 2) throw std::invalid_argument("slodowy_slice: need n >= 2");
    std::size_t n = static_cast<std::size_t>(mu.n());
    Sl2Triple triple = sl2_triple(mu);

    // Kernel of Z -> [Z, Y] intersected with trace zero.
    RationalMatrix op(n * n + 1, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                op.at(row, i * n + k) += triple.Y.at(k, j);
                op.at(row, k * n + j) -= triple.Y.at(i, k);
            }
        }
    for (std::size_t d = 0; d < n; ++d) op.at(n * n, d * n + d) = 1;

    std::vector<std::vector<Rat>> kernel = op.nullspace();
    std::vector<std::string> vars;
    for (std::size_t j = 0; j < kernel.size(); ++j)
        vars.push_back("a" + std::to_string(j + 1));

    PolyMatrix chart = PolyMatrix::from_rational(triple.X, vars);
    std::vector<RationalMatrix> basis;
    for (std::size_t j = 0; j < kernel.size(); ++j) {
        RationalMatrix z(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) z.at(i, k) = kernel[j][i * n + k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (z.at(i, k) != 0)
                    chart.at(i, k) =
                        chart.at(i, k) + MultiPoly::variable(vars, j) * z.at(i, k);
        basis.push_back(std::move(z));
    }
    return SliceChart{std::move(triple), std::move(basis), std::move(chart)};
}

std::vector<MultiPoly> chi_invariants(const PolyMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 2)
        throw std::invalid_argument("chi_invariants: need a square matrix of size >= 2");
    if (!m.trace().is_zero())
        throw std::domain_error("chi_invariants: matrix has nonzero trace");
    std::vector<MultiPoly> c = char_poly_coeffs(m);
    // det(tI-M) = t^n + c_1 t^{n-1} + ... + c_n and c_1 = 0 here;
    // chi_i is (-1)^{i+1} times the coefficient of t^{n-i-1}, i.e. of c_{i+1}.
    std::vector<MultiPoly> chi;
    for (std::size_t i = 1; i + 1 <= c.size(); ++i) {
        MultiPoly v = c[i];
        if (i % 2 == 1) chi.push_back(v);       // i+1 even: sign +
        else chi.push_back(-v);
    }
    return chi;
}

std::vector<MultiPoly> slice_nilpotent_equations(const Partition& mu) {
    return chi_invariants(slodowy_slice(mu).chart);
}

KleinianType make_kleinian(char letter, int index) {
    bool ok = (letter == 'A' && index >= 1) || (letter == 'D' && index >= 4) ||
              (letter == 'E' && index >= 6 && index <= 8);
    if (!ok)
        throw std::invalid_argument("invalid Kleinian type " + std::string(1, letter) + "_" +
                                    std::to_string(index));
    return KleinianType{letter, index};
}

MultiPoly kleinian_equation(const KleinianType& k) {
    make_kleinian(k.letter, k.index);
    std::vector<std::string> vars{"x", "y", "z"};
    MultiPoly x = MultiPoly::variable(vars, 0);
    MultiPoly y = MultiPoly::variable(vars, 1);
    MultiPoly z = MultiPoly::variable(vars, 2);
    switch (k.letter) {
        case 'A':
            return x.pow(static_cast<unsigned>(k.index + 1)) + y * z;
        case 'D':
            return x.pow(static_cast<unsigned>(k.index - 1)) + x * y * y + z * z;
        default:
            if (k.index == 6) return x.pow(4) + y.pow(3) + z * z;
            if (k.index == 7) return x.pow(3) * y + y.pow(3) + z * z;
            return x.pow(5) + y.pow(3) + z * z;
    }
}

MultiPoly semiuniversal_typeA_generic(int ell) {
    if (ell < 1) throw std::invalid_argument("semiuniversal_typeA: ell must be positive");
    std::vector<std::string> vars{"x", "y", "z"};
    for (int i = 1; i <= ell; ++i) vars.push_back("u" + std::to_string(i));
    MultiPoly x = MultiPoly::variable(vars, 0);
    MultiPoly y = MultiPoly::variable(vars, 1);
    MultiPoly z = MultiPoly::variable(vars, 2);
    MultiPoly f = x.pow(static_cast<unsigned>(ell + 1)) + y * z;
    for (int i = 1; i <= ell; ++i)
        f = f + MultiPoly::variable(vars, static_cast<std::size_t>(2 + i)) *
                    x.pow(static_cast<unsigned>(ell - i));
    return f;
}

MultiPoly semiuniversal_typeA(int ell, const std::vector<Rat>& u) {
    if (static_cast<int>(u.size()) != ell)
        throw std::invalid_argument("semiuniversal_typeA: expected " + std::to_string(ell) +
                                    " deformation parameters");
    MultiPoly generic = semiuniversal_typeA_generic(ell);
    std::vector<std::string> vars{"x", "y", "z"};
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(MultiPoly::variable(vars, i));
    for (const Rat& ui : u) images.push_back(MultiPoly::constant(vars, ui));
    return generic.substitute(vars, images);
}

SlodowyPair slodowy_pair(char letter, int index) {
    switch (letter) {
        case 'B':
            if (index < 2) break;
            return SlodowyPair{make_kleinian('A', 2 * index - 1), make_kleinian('D', index + 2),
                               "S_2"};
        case 'C':
            if (index < 3) break;
            return SlodowyPair{make_kleinian('D', index + 1), make_kleinian('D', 2 * index),
                               "S_2"};
        case 'F':
            if (index != 4) break;
            return SlodowyPair{make_kleinian('E', 6), make_kleinian('E', 7), "S_2"};
        case 'G':
            if (index != 2) break;
            return SlodowyPair{make_kleinian('D', 4), make_kleinian('E', 7), "S_3"};
        default:
            break;
    }
    throw std::invalid_argument("slodowy_pair: invalid type " + std::string(1, letter) + "_" +
                                std::to_string(index));
}

PolyMatrix load_poly_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        lines.push_back(line);
    }
    if (lines.size() < 2) throw std::runtime_error("truncated fixture " + path);

    std::istringstream head(lines[0]);
    std::string kw;
    head >> kw;
    if (kw != "vars") throw std::runtime_error("fixture must start with a vars line");
    std::vector<std::string> vars;
    std::string v;
    while (head >> v) vars.push_back(v);

    std::istringstream dims(lines[1]);
    std::size_t rows, cols;
    if (!(dims >> rows >> cols)) throw std::runtime_error("bad dimension line in " + path);
    if (lines.size() != 2 + rows) throw std::runtime_error("wrong row count in " + path);

    PolyMatrix m(rows, cols, vars);
    for (std::size_t i = 0; i < rows; ++i) {
        std::istringstream row(lines[2 + i]);
        std::string cell;
        std::size_t j = 0;
        while (std::getline(row, cell, ';')) {
            if (j >= cols) throw std::runtime_error("too many entries in row of " + path);
            m.at(i, j++) = MultiPoly::parse(vars, cell);
        }
        if (j != cols) throw std::runtime_error("too few entries in row of " + path);
    }
    return m;
}

}  // namespace nilorb
