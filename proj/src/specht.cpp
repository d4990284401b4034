#include "nilorb/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nilorb {

namespace {

std::vector<std::string> x_vars(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

MultiPoly vandermonde(const std::vector<std::string>& vars, const std::vector<int>& block) {
    MultiPoly f = MultiPoly::constant(vars, 1);
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j) {
            MultiPoly diff = MultiPoly::variable(vars, static_cast<std::size_t>(block[i])) -
                             MultiPoly::variable(vars, static_cast<std::size_t>(block[j]));
            f = f * diff;
        }
    return f;
}

MultiPoly permuted_pi(const Partition& lambda, const std::vector<std::string>& vars,
                      const std::vector<int>& perm) {
    MultiPoly f = MultiPoly::constant(vars, 1);
    std::size_t pos = 0;
    for (int part : lambda.parts()) {
        std::vector<int> block(perm.begin() + pos, perm.begin() + pos + part);
        f = f * vandermonde(vars, block);
        pos += static_cast<std::size_t>(part);
    }
    return f;
}

using Row = std::map<MultiPoly::Expo, Int, MultiPoly::GrlexDesc>;

Row to_row(const MultiPoly& f) {
    Row r;
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() != 1)
            throw std::logic_error("specht: non-integer coefficient in spanning polynomial");
        r[e] = c.get_num();
    }
    return r;
}

void axpy(Row& dst, const Int& f, const Row& src) {
    for (const auto& [e, c] : src) {
        auto it = dst.find(e);
        if (it == dst.end()) {
            if (f * c != 0) dst[e] = f * c;
        } else {
            it->second += f * c;
            if (it->second == 0) dst.erase(it);
        }
    }
}

MultiPoly row_to_poly(const std::vector<std::string>& vars, const Row& r) {
    MultiPoly f(vars);
    for (const auto& [e, c] : r) f.add_term(e, Rat(c));
    return f;
}

// Integer row echelon of the lattice spanned by the rows, processed column by
// column under the term order with unimodular operations only (swap, integer
// axpy, negation). Pivots stay positive; rows above a pivot are not reduced.
std::vector<Row> lattice_echelon(std::vector<Row> rows) {
    MultiPoly::GrlexDesc before;
    std::vector<Row> basis;
    std::size_t start = 0;
    while (true) {
        // Smallest remaining leading monomial position = next pivot column.
        const MultiPoly::Expo* col = nullptr;
        for (std::size_t i = start; i < rows.size(); ++i)
            if (!rows[i].empty()) {
                const MultiPoly::Expo& lead = rows[i].begin()->first;
                if (!col || before(lead, *col)) col = &lead;
            }
        if (!col) break;
        MultiPoly::Expo pivot_col = *col;

        while (true) {
            std::size_t best = rows.size();
            Int best_abs;
            std::size_t carriers = 0;
            for (std::size_t i = start; i < rows.size(); ++i) {
                auto it = rows[i].find(pivot_col);
                if (it == rows[i].end()) continue;
                ++carriers;
                Int a = abs(it->second);
                if (best == rows.size() || a < best_abs) {
                    best = i;
                    best_abs = a;
                }
            }
            std::swap(rows[start], rows[best]);
            if (carriers == 1) break;
            const Int p = rows[start].at(pivot_col);
            for (std::size_t i = start + 1; i < rows.size(); ++i) {
                auto it = rows[i].find(pivot_col);
                if (it == rows[i].end()) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), p.get_mpz_t());
                axpy(rows[i], -q, rows[start]);
            }
        }
        if (rows[start].at(pivot_col) < 0)
            for (auto& [e, c] : rows[start]) c = -c;
        basis.push_back(rows[start]);
        ++start;
    }
    return basis;
}

}  // namespace

MultiPoly pi_polynomial(const Partition& lambda) {
    if (lambda.n() < 1) throw std::invalid_argument("pi_polynomial: empty partition");
    std::vector<int> identity(lambda.n());
    std::iota(identity.begin(), identity.end(), 0);
    return permuted_pi(lambda, x_vars(lambda.n()), identity);
}

Int specht_pairing(const MultiPoly& f, const MultiPoly& g) {
    if (f.vars() != g.vars())
        throw std::invalid_argument("specht_pairing: different variable lists");
    Rat acc = 0;
    for (const auto& [e, c] : f.terms()) acc += c * g.coeff(e);
    if (acc.get_den() != 1) throw std::logic_error("specht_pairing: non-integer value");
    return acc.get_num();
}

SpechtModule specht_module(const Partition& lambda, int max_n) {
    int n = lambda.n();
    if (n < 1) throw std::invalid_argument("specht_module: empty partition");
    if (n > max_n)
        throw std::invalid_argument("specht_module: n = " + std::to_string(n) +
                                    " exceeds the factorial enumeration bound " +
                                    std::to_string(max_n));
    std::vector<std::string> vars = x_vars(n);

    std::vector<Row> rows;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        rows.push_back(to_row(permuted_pi(lambda, vars, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    SpechtModule mod;
    mod.lambda = lambda;
    for (const Row& r : lattice_echelon(std::move(rows)))
        mod.basis.push_back(row_to_poly(vars, r));

    std::size_t k = mod.basis.size();
    mod.gram.assign(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Int b = specht_pairing(mod.basis[i], mod.basis[j]);
            mod.gram[i][j] = b;
            mod.gram[j][i] = b;
        }
    return mod;
}

bool specht_lattice_contains(const SpechtModule& mod, const MultiPoly& f) {
    for (const auto& [e, c] : f.terms()) {
        (void)e;
        if (c.get_den() != 1) return false;
    }
    Row target = to_row(f);
    for (const MultiPoly& b : mod.basis) {
        Row row = to_row(b);
        const MultiPoly::Expo& pivot = row.begin()->first;
        auto it = target.find(pivot);
        if (it == target.end()) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), it->second.get_mpz_t(),
                    row.begin()->second.get_mpz_t());
        if (rem != 0) return false;
        axpy(target, -q, row);
    }
    return target.empty();
}

Int gram_determinant(const Partition& lambda, int max_n) {
    SpechtModule mod = specht_module(lambda, max_n);
    std::size_t k = mod.gram.size();
    // Fraction-free is unnecessary at these sizes; rational elimination and a
    // final integrality check keep it simple.
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(mod.gram[i][j]);
    Rat det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) return Int(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < k; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < k; ++j) a[i][j] -= f * a[c][j];
        }
    }
    if (det.get_den() != 1) throw std::logic_error("gram_determinant: non-integer determinant");
    return det.get_num();
}

long dim_irreducible_mod_p(const Partition& mu, long p, int max_n) {
    if (!is_prime(p)) throw std::invalid_argument("dim_irreducible_mod_p: p must be prime");
    if (!is_p_restricted(mu, p))
        throw std::invalid_argument("dim_irreducible_mod_p: mu is not p-restricted");
    SpechtModule mod = specht_module(mu, max_n);
    std::size_t k = mod.gram.size();
    std::vector<std::vector<long>> a(k, std::vector<long>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int m = mod.gram[i][j] % p;
            long v = m.get_si();
            a[i][j] = ((v % p) + p) % p;
        }
    long rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < k; ++c) {
        std::size_t piv = r;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) continue;
        std::swap(a[piv], a[r]);
        // modular inverse by Fermat
        long inv = 1, base = a[r][c] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = 0; j < k; ++j) a[r][j] = a[r][j] * inv % p;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || a[i][c] == 0) continue;
            long f = a[i][c];
            for (std::size_t j = 0; j < k; ++j)
                a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++rank;
        ++r;
    }
    return rank;
}

}  // namespace nilorb
