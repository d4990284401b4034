#pragma once

#include <gmpxx.h>
#include <random>
#include <stdexcept>
#include <string>

namespace nilorb {

// Exact scalar types. All arithmetic in this library is exact; nothing
// floating-point is ever computed or printed.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), e);
    mpz_set_ui(num.get_den_mpz_t(), 1);
    mpz_set_ui(den.get_den_mpz_t(), 1);
    Rat out = num / den;
    out.canonicalize();
    return out;
}

// Uniform integer in [lo, hi], deterministic for a given engine state.
inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng);
}

// Random rational of bounded height: numerator in [-h, h], denominator in [1, h].
inline Rat rand_rational(std::mt19937_64& rng, long h) {
    Rat q(rand_int(rng, -h, h), rand_int(rng, 1, h));
    q.canonicalize();
    return q;
}

}  // namespace nilorb
