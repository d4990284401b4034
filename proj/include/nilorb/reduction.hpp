#pragma once

#include <string>
#include <vector>

#include "nilorb/orbit_poset.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

// A pair of partitions of one n with mu dominated by lambda; indexes the
// slice variety through a point of the mu orbit inside the lambda closure.
struct OrbitPair {
    Partition lambda, mu;

    OrbitPair() = default;
    OrbitPair(Partition lambda_, Partition mu_);

    bool operator==(const OrbitPair& o) const { return lambda == o.lambda && mu == o.mu; }
    bool operator<(const OrbitPair& o) const {
        return lambda != o.lambda ? lambda < o.lambda : mu < o.mu;
    }
    std::string str() const;
};

// Requires lambda_1 = mu_1; drops the shared first row from both.
OrbitPair delete_first_row(const OrbitPair& p);

// Requires equal part counts; subtracts 1 from every part of both.
OrbitPair delete_first_column(const OrbitPair& p);

struct ReductionStep {
    std::string move;  // "row" or "column"
    OrbitPair result;
};

// Greedy row/column deletion until neither applies; the endpoint does not
// depend on the interleaving.
OrbitPair canonicalize(const OrbitPair& p, std::vector<ReductionStep>* trace = nullptr);

// Complements in a t x m rectangle, rotated back to partition orientation.
OrbitPair complement(const OrbitPair& p, int t, int m);

// Label of a minimal degeneration read off its canonical pair: single-part
// lambda* gives Kleinian data, mu* = (1,...,1) gives minimal-singularity data.
DegenerationLabel implied_label(const OrbitPair& canonical);

// Reachability under canonicalization and bounded-rectangle complements.
// bound_used reports the rectangle bound the search explored.
bool same_slice_class(const OrbitPair& p, const OrbitPair& q, int* bound_used = nullptr);

}  // namespace nilorb
