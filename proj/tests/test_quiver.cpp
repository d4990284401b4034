#include <doctest.h>

#include <random>

#include "nilorb/matrix_oracle.hpp"
#include "nilorb/quiver.hpp"

using namespace nilorb;

namespace {

// v = (1), w = (n): Gamma_1 a row vector, Delta_1 a column vector.
QuiverPoint rank_one_point(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::size_t n = a.size();
    QuiverPoint p;
    p.data.m = 2;
    p.data.r = {static_cast<int>(n) - 1, 1};
    p.data.v = {1};
    p.data.w = {static_cast<int>(n)};
    RationalMatrix gamma(1, n), delta(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        gamma.at(0, i) = a[i];
        delta.at(i, 0) = b[i];
    }
    p.Gamma = {gamma};
    p.Delta = {delta};
    return p;
}

}  // namespace

TEST_CASE("maffei dimension vectors") {
    QuiverData d = maffei_dims(Partition({3}), Partition({2, 1}), std::vector<int>{1, 1, 1});
    CHECK(d.m == 3);
    CHECK(d.r == std::vector<int>{1, 1, 1});
    CHECK(d.v == std::vector<int>{1, 1});
    CHECK(d.w == std::vector<int>{1, 1});
    // the default r for this pair is the same arrangement
    CHECK(maffei_dims(Partition({3}), Partition({2, 1})) == d);

    QuiverData same = maffei_dims(Partition({2, 1}), Partition({2, 1}), std::vector<int>{2, 1, 0});
    CHECK(same.v == std::vector<int>{0, 0});

    for (int n = 2; n <= 8; ++n) {
        std::vector<int> ones(n, 1);
        for (const auto& lam : partitions_of(n)) {
            QuiverData q = maffei_dims(lam, Partition(ones));
            int rsum = 0;
            for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(q.m); ++i) {
                rsum += q.r[i];
                CHECK(q.v[i] == n - rsum);
            }
        }
    }

    CHECK_THROWS(maffei_dims(Partition({2, 1}), Partition({3})));          // not dominated
    CHECK_THROWS(maffei_dims(Partition({3}), Partition({2, 1}),
                             std::vector<int>{1, 1}));                     // m <= mu_1
    CHECK_THROWS(maffei_dims(Partition({3}), Partition({2, 1}),
                             std::vector<int>{2, 1, 0}));                  // not a rearrangement
}

TEST_CASE("relation checking") {
    // all-zero maps on a two-node shape
    QuiverData d = maffei_dims(Partition({2, 2}), Partition({1, 1, 1, 1}),
                               std::vector<int>{2, 2, 0});
    QuiverPoint zero;
    zero.data = d;
    zero.A = {RationalMatrix(d.v[1], d.v[0])};
    zero.B = {RationalMatrix(d.v[0], d.v[1])};
    zero.Gamma = {RationalMatrix(d.v[0], d.w[0]), RationalMatrix(d.v[1], d.w[1])};
    zero.Delta = {RationalMatrix(d.w[0], d.v[0]), RationalMatrix(d.w[1], d.v[1])};
    CHECK(check_relations(zero));

    // rank-one with a.b = 0
    QuiverPoint good = rank_one_point({Rat(1), Rat(2), Rat(0)}, {Rat(2), Rat(-1), Rat(7)});
    CHECK(check_relations(good));
    QuiverPoint bad = rank_one_point({Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)});
    CHECK_FALSE(check_relations(bad));

    // v = w = (1,1) instance and its one-unit violation
    QuiverPoint p;
    p.data.m = 3;
    p.data.r = {1, 1, 1};
    p.data.v = {1, 1};
    p.data.w = {1, 1};
    auto one = [](Rat x) {
        RationalMatrix m(1, 1);
        m.at(0, 0) = x;
        return m;
    };
    p.A = {one(1)};
    p.B = {one(1)};
    p.Gamma = {one(1), one(1)};
    p.Delta = {one(1), one(-1)};
    CHECK(check_relations(p));  // Gamma1 Delta1 = B1 A1 and A1 B1 + Gamma2 Delta2 = 0
    p.Delta[0] = one(2);
    CHECK_FALSE(check_relations(p));

    QuiverPoint malformed = good;
    malformed.Gamma[0] = RationalMatrix(2, 2);
    CHECK_THROWS(check_relations(malformed));
}

TEST_CASE("stability") {
    // v = 0: no proper subspaces at all
    QuiverData d0 = maffei_dims(Partition({2, 1}), Partition({2, 1}), std::vector<int>{2, 1, 0});
    QuiverPoint p0;
    p0.data = d0;
    p0.A = {RationalMatrix(0, 0)};
    p0.B = {RationalMatrix(0, 0)};
    p0.Gamma = {RationalMatrix(0, 1), RationalMatrix(0, 1)};
    p0.Delta = {RationalMatrix(1, 0), RationalMatrix(1, 0)};
    CHECK(is_stable(p0));

    QuiverPoint gone = rank_one_point({Rat(0), Rat(0)}, {Rat(0), Rat(0)});
    CHECK_FALSE(is_stable(gone));
    CHECK_FALSE(is_stable_surjective(gone));

    QuiverPoint live = rank_one_point({Rat(1), Rat(0)}, {Rat(0), Rat(5)});
    CHECK(is_stable(live));
    CHECK(is_stable_surjective(live));
}

TEST_CASE("kp projection") {
    QuiverPoint zero = rank_one_point({Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)});
    CHECK(kp_project(zero).is_zero());

    std::vector<Rat> a{Rat(1), Rat(0), Rat(0), Rat(0)};
    std::vector<Rat> b{Rat(0), Rat(1), Rat(0), Rat(0)};
    QuiverPoint e21 = rank_one_point(a, b);
    RationalMatrix x = kp_project(e21);
    RationalMatrix expected(4, 4);
    expected.at(1, 0) = 1;
    CHECK(x == expected);
    CHECK(jordan_type(x) == Partition({2, 1, 1}));

    QuiverPoint bad = rank_one_point({Rat(1), Rat(0)}, {Rat(1), Rat(0)});
    CHECK_THROWS(kp_project(bad));  // relations violated

    // wrong w shape
    QuiverPoint p;
    p.data.m = 3;
    p.data.r = {1, 1, 1};
    p.data.v = {1, 1};
    p.data.w = {1, 1};
    p.A = {RationalMatrix(1, 1)};
    p.B = {RationalMatrix(1, 1)};
    p.Gamma = {RationalMatrix(1, 1), RationalMatrix(1, 1)};
    p.Delta = {RationalMatrix(1, 1), RationalMatrix(1, 1)};
    CHECK_THROWS(kp_project(p));
}

TEST_CASE("flag extraction on the rank-one instance") {
    std::vector<Rat> a{Rat(1), Rat(2), Rat(-1)};
    std::vector<Rat> b{Rat(2), Rat(1), Rat(4)};  // a.b = 0
    QuiverPoint p = rank_one_point(a, b);
    REQUIRE(check_relations(p));
    REQUIRE(is_stable(p));
    FlagData flag = flag_from_point(p);
    REQUIRE(flag.subspaces.size() == 2);
    CHECK(flag.subspaces[0].cols() == 2);  // ker of the covector, dimension n-1
    CHECK(flag.subspaces[1] == RationalMatrix::identity(3));
    // X(C^n) inside U_1 and X(U_1) = 0
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Rat> col(3);
        for (std::size_t i = 0; i < 3; ++i) col[i] = flag.X.at(i, j);
        CHECK(in_column_span(flag.subspaces[0], col));
    }
    CHECK((flag.X * flag.subspaces[0]).is_zero());

    QuiverPoint unstable = rank_one_point({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS(flag_from_point(unstable));
}

TEST_CASE("random relation points satisfy the relations deterministically") {
    std::mt19937_64 rng(99);
    QuiverData d = maffei_dims(Partition({2, 2}), Partition({1, 1, 1, 1}));
    QuiverPoint p = random_relation_point(d, rng);
    CHECK(check_relations(p));
    std::mt19937_64 rng2(99);
    QuiverPoint q = random_relation_point(d, rng2);
    CHECK(p.to_json_text() == q.to_json_text());
}

TEST_CASE("invariants of the (1,1) quiver satisfy the A_2 surface equation") {
    // On points of the two-node shape with one-dimensional framing, the
    // invariant scalars a = Delta1*Gamma1, b = Delta1*B1*Gamma2 and
    // c = Delta2*A1*Gamma1 obey a^3 + b*c = 0 and a = -Delta2*Gamma2.
    std::mt19937_64 rng(123);
    auto scalar = [](Rat x) {
        RationalMatrix m(1, 1);
        m.at(0, 0) = x;
        return m;
    };
    for (int trial = 0; trial < 60; ++trial) {
        Rat g1 = rand_rational(rng, 5), a1 = rand_rational(rng, 5), b1 = rand_rational(rng, 5);
        Rat g2 = rand_rational(rng, 5);
        if (g1 == 0 || g2 == 0) continue;
        Rat d1 = b1 * a1 / g1;    // Gamma1 Delta1 = B1 A1
        Rat d2 = -a1 * b1 / g2;   // A1 B1 + Gamma2 Delta2 = 0
        QuiverPoint p;
        p.data.m = 3;
        p.data.r = {1, 1, 1};
        p.data.v = {1, 1};
        p.data.w = {1, 1};
        p.A = {scalar(a1)};
        p.B = {scalar(b1)};
        p.Gamma = {scalar(g1), scalar(g2)};
        p.Delta = {scalar(d1), scalar(d2)};
        REQUIRE(check_relations(p));
        Rat a = d1 * g1;
        Rat b = d1 * b1 * g2;
        Rat c = d2 * a1 * g1;
        CHECK(a * a * a + b * c == 0);
        CHECK(a == -(d2 * g2));
    }
}

TEST_CASE("quiver JSON round trips") {
    QuiverData d = maffei_dims(Partition({3, 1}), Partition({2, 1, 1}));
    CHECK(QuiverData::from_json_text(d.to_json_text()) == d);

    std::mt19937_64 rng(5);
    std::vector<int> ones(4, 1);
    QuiverData dd = maffei_dims(Partition({2, 2}), Partition(ones));
    QuiverPoint p = random_relation_point(dd, rng);
    QuiverPoint q = QuiverPoint::from_json_text(p.to_json_text());
    CHECK(q.data == p.data);
    CHECK(check_relations(q));
    CHECK(q.to_json_text() == p.to_json_text());
}
