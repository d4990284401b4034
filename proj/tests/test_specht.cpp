#include <doctest.h>

#include "nilorb/specht.hpp"

using namespace nilorb;

TEST_CASE("pi polynomials for n = 3") {
    CHECK(pi_polynomial(Partition({1, 1, 1})).str() == "1");
    CHECK(pi_polynomial(Partition({2, 1})).str() == "x1 - x2");
    std::vector<std::string> vars{"x1", "x2", "x3"};
    MultiPoly expected = MultiPoly::parse(vars, "x1 - x2") *
                         MultiPoly::parse(vars, "x1 - x3") *
                         MultiPoly::parse(vars, "x2 - x3");
    CHECK(pi_polynomial(Partition({3})) == expected);
}

TEST_CASE("specht modules for n = 3") {
    SpechtModule triv = specht_module(Partition({1, 1, 1}));
    REQUIRE(triv.basis.size() == 1);
    CHECK(triv.basis[0].str() == "1");
    CHECK(triv.gram == std::vector<std::vector<Int>>{{Int(1)}});

    SpechtModule refl = specht_module(Partition({2, 1}));
    REQUIRE(refl.basis.size() == 2);
    CHECK(refl.basis[0].str() == "x1 - x2");
    CHECK(refl.basis[1].str() == "x2 - x3");
    CHECK(refl.gram == std::vector<std::vector<Int>>{{Int(2), Int(-1)}, {Int(-1), Int(2)}});

    SpechtModule sign = specht_module(Partition({3}));
    REQUIRE(sign.basis.size() == 1);
    CHECK(sign.gram == std::vector<std::vector<Int>>{{Int(6)}});
}

TEST_CASE("gram determinants") {
    CHECK(gram_determinant(Partition({2, 1})) == 3);
    CHECK(gram_determinant(Partition({3})) == 6);
    CHECK(gram_determinant(Partition({1, 1, 1})) == 1);
    CHECK(gram_determinant(Partition({1, 1, 1, 1, 1})) == 1);
}

TEST_CASE("irreducible dimensions mod p") {
    CHECK(dim_irreducible_mod_p(Partition({2, 1}), 3) == 1);
    CHECK(dim_irreducible_mod_p(Partition({2, 1}), 5) == 2);
    CHECK(dim_irreducible_mod_p(Partition({1, 1, 1}), 2) == 1);
    CHECK_THROWS(dim_irreducible_mod_p(Partition({3}), 2));   // not 2-restricted
    CHECK_THROWS(dim_irreducible_mod_p(Partition({2, 1}), 6));  // not prime
}

TEST_CASE("resource bound") {
    std::vector<int> ones(8, 1);
    CHECK_THROWS(specht_module(Partition(ones)));
    CHECK_NOTHROW(specht_module(Partition(ones), 8));
}

TEST_CASE("lattice membership") {
    SpechtModule refl = specht_module(Partition({2, 1}));
    std::vector<std::string> vars{"x1", "x2", "x3"};
    CHECK(specht_lattice_contains(refl, MultiPoly::parse(vars, "x1 - x3")));
    CHECK(specht_lattice_contains(refl, MultiPoly::parse(vars, "2*x1 - x2 - x3")));
    CHECK_FALSE(specht_lattice_contains(refl, MultiPoly::parse(vars, "x1")));
    CHECK_FALSE(specht_lattice_contains(refl, MultiPoly(vars) + MultiPoly::parse(vars, "x1 - x2") * Rat(1, 2)));
}

TEST_CASE("characteristic zero dimensions square-sum to n! (n <= 4)") {
    long factorial = 1;
    for (int n = 1; n <= 4; ++n) {
        factorial *= n;
        long total = 0;
        for (const auto& lam : partitions_of(n)) {
            long d = static_cast<long>(specht_module(lam).basis.size());
            total += d * d;
        }
        CHECK(total == factorial);
    }
}
