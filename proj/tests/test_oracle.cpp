#include <doctest.h>

#include <random>

#include "nilorb/matrix_oracle.hpp"

using namespace nilorb;

TEST_CASE("jordan_nilpotent") {
    RationalMatrix j2 = jordan_nilpotent(Partition({2}));
    CHECK(j2.at(0, 1) == 1);
    CHECK(j2.rank() == 1);
    CHECK(jordan_nilpotent(Partition({1, 1, 1})).is_zero());
    RationalMatrix j21 = jordan_nilpotent(Partition({2, 1}));
    CHECK(j21.at(0, 1) == 1);
    CHECK(j21.rank() == 1);
    CHECK(j21.rows() == 3);
}

TEST_CASE("jordan_type") {
    CHECK(jordan_type(jordan_nilpotent(Partition({5, 4, 4, 3}))) == Partition({5, 4, 4, 3}));
    CHECK(jordan_type(RationalMatrix(4, 4)) == Partition({1, 1, 1, 1}));
    RationalMatrix notnil = RationalMatrix::identity(3);
    CHECK_THROWS(jordan_type(notnil));

    // a fixed conjugate of J_(3,1)
    RationalMatrix g(4, 4);
    std::mt19937_64 rng(5);
    do {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) g.at(i, j) = rand_int(rng, -3, 3);
    } while (g.rank() < 4);
    RationalMatrix x = g * jordan_nilpotent(Partition({3, 1})) * g.inverse();
    CHECK(jordan_type(x) == Partition({3, 1}));
}

TEST_CASE("in_orbit_closure") {
    CHECK(in_orbit_closure(jordan_nilpotent(Partition({4, 4, 4, 4})), Partition({5, 4, 4, 3})));
    CHECK(in_orbit_closure(RationalMatrix(3, 3), Partition({2, 1})));
    CHECK_FALSE(in_orbit_closure(jordan_nilpotent(Partition({3})), Partition({2, 1})));
    CHECK_THROWS(in_orbit_closure(RationalMatrix(2, 2), Partition({3})));
    CHECK_THROWS(in_orbit_closure(RationalMatrix::identity(3), Partition({2, 1})));
}

TEST_CASE("sl2_triple small cases") {
    Sl2Triple t3 = sl2_triple(Partition({3}));
    CHECK(t3.Y.at(1, 0) == 2);
    CHECK(t3.Y.at(2, 1) == 2);
    CHECK(t3.Y.at(2, 0) == 0);

    Sl2Triple t2 = sl2_triple(Partition({2}));
    CHECK(t2.Y.at(1, 0) == 1);
    CHECK(t2.Y.at(0, 1) == 0);

    Sl2Triple t21 = sl2_triple(Partition({2, 1}));
    CHECK(t21.Y.at(1, 0) == 1);
    RationalMatrix expected(3, 3);
    expected.at(1, 0) = 1;
    CHECK(t21.Y == expected);
}

TEST_CASE("sl2_triple relations (n <= 6)") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            Sl2Triple t = sl2_triple(lam);
            CHECK(commutator(t.H, t.X) == t.X * Rat(2));
            CHECK(commutator(t.H, t.Y) == t.Y * Rat(-2));
            CHECK(t.H.trace() == 0);
            CHECK(is_nilpotent(t.Y));
        }
}

TEST_CASE("centralizer dimension matches the transpose-square count (n <= 5)") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            long expect = 0;
            Partition tr = transpose(lam);
            for (int c : tr.parts()) expect += static_cast<long>(c) * c;
            CHECK(centralizer_dimension_gl(jordan_nilpotent(lam)) == expect);
        }
}
