#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

// Sparse multivariate polynomial over the rationals. Every polynomial carries
// an ordered variable list; operations require identical lists. Terms are kept
// under graded-lexicographic order (variables in declaration order), largest
// term first, which fixes the canonical printed form.
class MultiPoly {
public:
    using Expo = std::vector<unsigned>;

    struct GrlexDesc {
        bool operator()(const Expo& a, const Expo& b) const;
    };
    using TermMap = std::map<Expo, Rat, GrlexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t idx);
    // Accepts sums of terms like "-3*a^2 - 1/2*b + 4"; no parentheses.
    static MultiPoly parse(const std::vector<std::string>& vars, const std::string& text);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Expo& e) const;
    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous(int degree) const;
    unsigned degree_in(std::size_t var) const;

    MultiPoly& add_term(const Expo& e, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact evaluation; the assignment must cover every variable.
    Rat eval(const std::vector<Rat>& point) const;

    MultiPoly derivative(std::size_t var) const;

    // Polynomial in the remaining variables multiplying var^power.
    MultiPoly coeff_of(std::size_t var, unsigned power) const;

    // Reinterpret over a sub-list of the variables; throws if a dropped
    // variable occurs with nonzero exponent.
    MultiPoly restrict_to(const std::vector<std::string>& subset) const;

    // Simultaneous substitution: variable i is replaced by images[i], all of
    // which live over target_vars.
    MultiPoly substitute(const std::vector<std::string>& target_vars,
                         const std::vector<MultiPoly>& images) const;

    // Relabel variable i as variable perm[i], keeping the variable list.
    MultiPoly permute_variables(const std::vector<std::size_t>& perm) const;

    std::string str() const;

private:
    void check_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace nilorb
