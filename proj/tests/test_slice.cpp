#include <doctest.h>

#include <random>

#include "nilorb/lie_slice.hpp"
#include "nilorb/orbit_poset.hpp"

using namespace nilorb;

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

// Coordinates of a slice member in the chart, via the affine linear system.
std::vector<Rat> chart_coordinates(const SliceChart& chart, const RationalMatrix& z) {
    std::size_t n = z.rows();
    RationalMatrix sys(n * n, chart.basis.size());
    std::vector<Rat> rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < chart.basis.size(); ++k)
                sys.at(i * n + j, k) = chart.basis[k].at(i, j);
            rhs[i * n + j] = z.at(i, j) - chart.triple.X.at(i, j);
        }
    std::vector<Rat> x;
    REQUIRE(solve_linear(sys, rhs, x));
    REQUIRE(chart.chart.eval(x) == z);
    return x;
}

}  // namespace

TEST_CASE("slice chart parameter counts") {
    CHECK(slodowy_slice(Partition({2, 1})).basis.size() == 4);
    CHECK(slodowy_slice(Partition({3})).basis.size() == 2);
    SliceChart full = slodowy_slice(Partition({1, 1, 1, 1}));
    CHECK(full.basis.size() == 15);
    CHECK(full.triple.X.is_zero());
    CHECK_THROWS(slodowy_slice(Partition({1})));
}

TEST_CASE("chi invariants on the reference slice matrices") {
    auto reg = chi_invariants(load_poly_matrix(fixture("sl3_regular.txt")));
    REQUIRE(reg.size() == 2);
    CHECK(reg[0].str() == "-2*a");
    CHECK(reg[1].str() == "b");

    auto sub3 = chi_invariants(load_poly_matrix(fixture("sl3_subregular.txt")));
    REQUIRE(sub3.size() == 2);
    CHECK(sub3[0].str() == "-3*a^2 - b");
    CHECK(sub3[1].str() == "-2*a^3 + 2*a*b + c*d");

    auto sub4 = chi_invariants(load_poly_matrix(fixture("sl4_subregular.txt")));
    REQUIRE(sub4.size() == 3);
    CHECK(sub4[0].str() == "-6*a^2 - 2*b");
    CHECK(sub4[1].str() == "-8*a^3 + 4*a*b + c");
    CHECK(sub4[2].str() == "-3*a^4 + 6*a^2*b - 3*a*c - d*e");
}

TEST_CASE("chi rejects nonzero trace") {
    std::vector<std::string> a{"a"};
    PolyMatrix m(2, 2, a);
    m.at(0, 0) = MultiPoly::variable(a, 0);
    CHECK_THROWS(chi_invariants(m));
}

TEST_CASE("subregular sl3 equations cut out the A_2 surface") {
    // The fixture parametrizes the same slice in different coordinates:
    // its points satisfy the generated equations exactly when 8a^3 = cd.
    SliceChart chart = slodowy_slice(Partition({2, 1}));
    auto eqs = slice_nilpotent_equations(Partition({2, 1}));
    REQUIRE(eqs.size() == 2);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Rat a = rand_rational(rng, 4);
        Rat c = rand_rational(rng, 4);
        while (c == 0) c = rand_rational(rng, 4);
        bool on_surface = trial % 2 == 0;
        Rat d = on_surface ? Rat(8 * a * a * a / c) : Rat(8 * a * a * a / c + 1);
        RationalMatrix z(3, 3);
        z.at(0, 0) = a;
        z.at(0, 1) = 1;
        z.at(1, 0) = -3 * a * a;
        z.at(1, 1) = a;
        z.at(1, 2) = c;
        z.at(2, 0) = d;
        z.at(2, 2) = -2 * a;
        std::vector<Rat> coords = chart_coordinates(chart, z);
        bool vanish = true;
        for (const auto& f : eqs) vanish &= f.eval(coords) == 0;
        CHECK(vanish == on_surface);
    }
}

TEST_CASE("full sl2 slice carries the nilpotent-cone quadric") {
    auto eqs = slice_nilpotent_equations(Partition({1, 1}));
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0].is_homogeneous(2));
    SliceChart chart = slodowy_slice(Partition({1, 1}));
    REQUIRE(chart.basis.size() == 3);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> point{rand_rational(rng, 4), rand_rational(rng, 4),
                               rand_rational(rng, 4)};
        RationalMatrix z = chart.chart.eval(point);
        CHECK((eqs[0].eval(point) == 0) == is_nilpotent(z));
    }
}

TEST_CASE("regular sl3 equations vanish only at the base point") {
    auto eqs = slice_nilpotent_equations(Partition({3}));
    REQUIRE(eqs.size() == 2);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> point{rand_rational(rng, 5), rand_rational(rng, 5)};
        bool vanish = true;
        for (const auto& f : eqs) vanish &= f.eval(point) == 0;
        CHECK(vanish == (point[0] == 0 && point[1] == 0));
    }
}

TEST_CASE("kleinian equations") {
    CHECK(kleinian_equation(make_kleinian('A', 2)).str() == "x^3 + y*z");
    CHECK(kleinian_equation(make_kleinian('A', 1)).str() == "x^2 + y*z");
    CHECK(kleinian_equation(make_kleinian('E', 8)).str() == "x^5 + y^3 + z^2");
    CHECK(kleinian_equation(make_kleinian('E', 7)).str() == "x^3*y + y^3 + z^2");
    CHECK(kleinian_equation(make_kleinian('E', 6)).str() == "x^4 + y^3 + z^2");
    CHECK(kleinian_equation(make_kleinian('D', 4)).str() == "x^3 + x*y^2 + z^2");
    CHECK_THROWS(make_kleinian('D', 3));
    CHECK_THROWS(make_kleinian('E', 5));
    CHECK_THROWS(make_kleinian('A', 0));
}

TEST_CASE("semiuniversal type A family") {
    CHECK(semiuniversal_typeA(3, {Rat(0), Rat(0), Rat(0)}) ==
          kleinian_equation(make_kleinian('A', 3)));
    CHECK(semiuniversal_typeA_generic(2).str() == "x^3 + x*u1 + y*z + u2");
    CHECK(semiuniversal_typeA(2, {Rat(5), Rat(-1, 2)}).str() == "x^3 + y*z + 5*x - 1/2");
    CHECK_THROWS(semiuniversal_typeA(2, {Rat(1)}));
}

TEST_CASE("sl4 subregular family matches the semiuniversal deformation") {
    // Eliminate b and c from chi_1 = u1, chi_2 = u2 and push into chi_3 = u3;
    // the resulting hypersurface is the semiuniversal A_3 family under
    // x -> 3a, y -> d, z -> e with unchanged parameters.
    PolyMatrix m = load_poly_matrix(fixture("sl4_subregular.txt"));
    auto chi = chi_invariants(m);
    std::vector<std::string> full{"a", "b", "c", "d", "e", "u1", "u2", "u3"};
    auto lift = [&](const MultiPoly& p) {
        std::vector<MultiPoly> images;
        for (std::size_t i = 0; i < 5; ++i) images.push_back(MultiPoly::variable(full, i));
        return p.substitute(full, images);
    };
    MultiPoly u1 = MultiPoly::variable(full, 5);
    MultiPoly u2 = MultiPoly::variable(full, 6);
    MultiPoly u3 = MultiPoly::variable(full, 7);
    // chi_1 = -6a^2 - 2b = u1  =>  b = -(u1 + 6a^2)/2
    MultiPoly a = MultiPoly::variable(full, 0);
    MultiPoly b_sol = (u1 + a * a * Rat(6)) * Rat(-1, 2);
    // chi_2 = -8a^3 + 4ab + c = u2  =>  c = u2 + 8a^3 - 4a*b
    MultiPoly c_sol = u2 + a.pow(3) * Rat(8) - a * b_sol * Rat(4);
    std::vector<MultiPoly> images;
    images.push_back(a);
    images.push_back(b_sol);
    images.push_back(c_sol);
    for (std::size_t i = 3; i < 8; ++i) images.push_back(MultiPoly::variable(full, i));
    MultiPoly family = lift(chi[2]).substitute(full, images) - u3;

    MultiPoly generic = semiuniversal_typeA_generic(3);
    std::vector<MultiPoly> change{a * Rat(3), MultiPoly::variable(full, 3),
                                  MultiPoly::variable(full, 4), u1, u2, u3};
    MultiPoly matched = generic.substitute(full, change);
    CHECK(family + matched == MultiPoly(full));
}

TEST_CASE("slodowy pairs") {
    SlodowyPair b2 = slodowy_pair('B', 2);
    CHECK(b2.gamma.str() == "A_3");
    CHECK(b2.gamma_prime.str() == "D_4");
    CHECK(b2.quotient == "S_2");

    SlodowyPair g2 = slodowy_pair('G', 2);
    CHECK(g2.gamma.str() == "D_4");
    CHECK(g2.gamma_prime.str() == "E_7");
    CHECK(g2.quotient == "S_3");

    SlodowyPair f4 = slodowy_pair('F', 4);
    CHECK(f4.gamma.str() == "E_6");
    CHECK(f4.gamma_prime.str() == "E_7");
    CHECK(f4.quotient == "S_2");

    SlodowyPair c3 = slodowy_pair('C', 3);
    CHECK(c3.gamma.str() == "D_4");
    CHECK(c3.gamma_prime.str() == "D_6");

    CHECK_THROWS(slodowy_pair('B', 1));
    CHECK_THROWS(slodowy_pair('C', 2));
    CHECK_THROWS(slodowy_pair('F', 5));
    CHECK_THROWS(slodowy_pair('G', 3));
    CHECK_THROWS(slodowy_pair('A', 1));
}

TEST_CASE("fixture charts agree with our slices up to coordinates") {
    // The fixture matrices parametrize the same affine subspaces as the
    // generated charts: same base point, same linear span.
    struct Case {
        const char* file;
        Partition mu;
    } cases[] = {{"sl3_regular.txt", Partition({3})},
                 {"sl3_subregular.txt", Partition({2, 1})}};
    for (const auto& c : cases) {
        PolyMatrix fix = load_poly_matrix(fixture(c.file));
        SliceChart ours = slodowy_slice(c.mu);
        std::size_t k = fix.vars().size();
        REQUIRE(ours.basis.size() == k);
        // sample fixture points, solve for our chart coordinates
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> p;
            for (std::size_t i = 0; i < k; ++i) p.push_back(rand_rational(rng, 5));
            chart_coordinates(ours, fix.eval(p));  // REQUIREs solvability
        }
    }
}
