#include <doctest.h>

#include "nilorb/reduction.hpp"

using namespace nilorb;

TEST_CASE("orbit pair invariants") {
    CHECK_NOTHROW(OrbitPair(Partition({5, 4, 4, 3}), Partition({4, 4, 4, 4})));
    CHECK_THROWS(OrbitPair(Partition({2, 1}), Partition({3})));
    CHECK_THROWS(OrbitPair(Partition({3}), Partition({2})));
}

TEST_CASE("row deletion") {
    OrbitPair p{Partition({3, 3}), Partition({3, 1, 1, 1})};
    OrbitPair q = delete_first_row(p);
    CHECK(q.lambda == Partition({3}));
    CHECK(q.mu == Partition({1, 1, 1}));

    OrbitPair eq{Partition({2, 2}), Partition({2, 2})};
    OrbitPair r = delete_first_row(delete_first_row(eq));
    CHECK(r.lambda.empty());
    CHECK(r.mu.empty());

    CHECK_THROWS(delete_first_row(OrbitPair{Partition({3, 1}), Partition({2, 2})}));
}

TEST_CASE("column deletion") {
    OrbitPair p{Partition({5, 4, 4, 3}), Partition({4, 4, 4, 4})};
    OrbitPair q = delete_first_column(p);
    CHECK(q.lambda == Partition({4, 3, 3, 2}));
    CHECK(q.mu == Partition({3, 3, 3, 3}));

    OrbitPair eq{Partition({1, 1}), Partition({1, 1})};
    OrbitPair r = delete_first_column(eq);
    CHECK(r.lambda.empty());

    CHECK_THROWS(delete_first_column(OrbitPair{Partition({3}), Partition({2, 1})}));
}

TEST_CASE("canonicalization of the (5,4,4,3) degenerations") {
    // Kleinian side: all three common rows go, leaving the subregular pair of
    // sl_3 whose slice singularity is the A_2 surface.
    std::vector<ReductionStep> trace;
    OrbitPair kle = canonicalize(
        OrbitPair{Partition({5, 4, 4, 3}), Partition({5, 4, 4, 2, 1})}, &trace);
    CHECK(kle.lambda == Partition({3}));
    CHECK(kle.mu == Partition({2, 1}));
    CHECK(trace.size() == 3);
    CHECK(trace[0].move == "row");
    CHECK(implied_label(kle) == make_label(SingKind::KleinianA, 2));
    CHECK(implied_label(kle).codim == 2);

    // Minimal side: columns strip down to the minimal orbit of sl_4.
    OrbitPair min = canonicalize(OrbitPair{Partition({5, 4, 4, 3}), Partition({4, 4, 4, 4})});
    CHECK(min.lambda == Partition({2, 1, 1}));
    CHECK(min.mu == Partition({1, 1, 1, 1}));
    CHECK(implied_label(min) == make_label(SingKind::MinimalA, 3));
    CHECK(implied_label(min).codim == 6);

    OrbitPair empty = canonicalize(OrbitPair{Partition({3, 2}), Partition({3, 2})});
    CHECK(empty.lambda.empty());
    CHECK(empty.mu.empty());
}

TEST_CASE("implied label rejects non-degeneration pairs") {
    CHECK_THROWS(implied_label(OrbitPair{Partition({3, 1}), Partition({2, 2})}));
    CHECK_THROWS(implied_label(OrbitPair{Partition({2, 2}), Partition({1, 1, 1, 1})}));
}

TEST_CASE("complement of (5,4,4,3) against (3,3,3,3,2,2)") {
    OrbitPair p{Partition({5, 4, 4, 3}), Partition({3, 3, 3, 3, 2, 2})};
    OrbitPair c = complement(p, 6, 5);
    CHECK(c.lambda == Partition({5, 5, 2, 1, 1}));
    CHECK(c.mu == Partition({3, 3, 2, 2, 2, 2}));
    // involution
    OrbitPair back = complement(c, 6, 5);
    CHECK(back == p);
    // exact-fit rectangle empties lambda
    OrbitPair full{Partition({2, 2}), Partition({2, 2})};
    OrbitPair fc = complement(full, 2, 2);
    CHECK(fc.lambda.empty());
    CHECK(fc.mu.empty());
    CHECK_THROWS(complement(p, 5, 5));
    CHECK_THROWS(complement(p, 6, 4));
}

TEST_CASE("slice class equivalence") {
    OrbitPair p{Partition({5, 4, 4, 3}), Partition({3, 3, 3, 3, 2, 2})};
    OrbitPair q{Partition({5, 5, 2, 1, 1}), Partition({3, 3, 2, 2, 2, 2})};
    int bound = 0;
    CHECK(same_slice_class(p, q, &bound));
    CHECK(bound >= 6);
    CHECK(same_slice_class(p, p));
    CHECK_FALSE(same_slice_class(OrbitPair{Partition({2}), Partition({1, 1})},
                                 OrbitPair{Partition({3}), Partition({1, 1, 1})}));
}
