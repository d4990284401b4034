#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

// Dimension data for the quiver presentation of a slice: r is a rearrangement
// of the column lengths of lambda padded with zeros (length m), w the part
// multiplicities of mu, and v the node dimensions.
struct QuiverData {
    int m = 0;
    std::vector<int> r;  // length m
    std::vector<int> v;  // length m-1
    std::vector<int> w;  // length m-1

    std::string to_json_text() const;
    static QuiverData from_json_text(const std::string& text);
    bool operator==(const QuiverData& o) const {
        return m == o.m && r == o.r && v == o.v && w == o.w;
    }
};

// Default r: decreasing column lengths padded with zeros so that
// m = max(lambda_1, mu_1 + 1). An explicit r must be a rearrangement of the
// column lengths (plus zeros) with length > mu_1.
QuiverData maffei_dims(const Partition& lambda, const Partition& mu,
                       const std::optional<std::vector<int>>& r = std::nullopt);

// A_i: v_i -> v_{i+1} and B_i: v_{i+1} -> v_i for 1 <= i <= m-2;
// Gamma_i: w_i -> v_i and Delta_i: v_i -> w_i for 1 <= i <= m-1.
struct QuiverPoint {
    QuiverData data;
    std::vector<RationalMatrix> A, B, Gamma, Delta;

    std::string to_json_text() const;
    static QuiverPoint from_json_text(const std::string& text);
};

void validate_dimensions(const QuiverPoint& p);

// A_{i-1}B_{i-1} + Gamma_i Delta_i = B_i A_i for 1 <= i <= m-1, with
// A_0, B_0, A_{m-1}, B_{m-1} read as zero.
bool check_relations(const QuiverPoint& p);

// No proper graded subspace contains every im(Gamma_i) and is closed under
// all A_i, B_i; decided by growing the span to a fixed point.
bool is_stable(const QuiverPoint& p);

// The surjectivity criterion for mu-trivial points: Gamma_1 and every A_i
// surjective. Agrees with is_stable on relation-satisfying points.
bool is_stable_surjective(const QuiverPoint& p);

bool is_mu_trivial(const QuiverData& d);

// Delta_1 * Gamma_1 as an n x n matrix (the B_0 A_0 of the projection);
// requires a mu-trivial relation-satisfying point. The result is checked to
// be traceless and nilpotent before being returned.
RationalMatrix kp_project(const QuiverPoint& p);

struct FlagData {
    RationalMatrix X;
    // subspaces[i] has r_1+...+r_{i+1} columns forming a basis of U_{i+1};
    // the last entry is the full space.
    std::vector<RationalMatrix> subspaces;
};

// U_i = ker(A_{i-1} ... A_1 Gamma_1); requires relations and stability.
FlagData flag_from_point(const QuiverPoint& p);

// Seeded sampler of mu-trivial relation-satisfying points: arrow maps A are
// drawn freely and each B is solved from the relation chain, retrying on
// inconsistency. Deterministic for a fixed engine state.
QuiverPoint random_relation_point(const QuiverData& d, std::mt19937_64& rng, long height = 3);

}  // namespace nilorb
