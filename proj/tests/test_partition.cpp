#include <doctest.h>

#include "nilorb/partition.hpp"

using namespace nilorb;

TEST_CASE("partition parsing and printing") {
    CHECK(Partition::parse("5,4,4,3").parts() == std::vector<int>{5, 4, 4, 3});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("7").n() == 7);
    CHECK(Partition({5, 4, 4, 3}).str() == "5,4,4,3");
    CHECK(Partition().str() == "");
    CHECK_THROWS(Partition::parse("3,4"));
    CHECK_THROWS(Partition::parse("2,0"));
    CHECK_THROWS(Partition::parse("a"));
    CHECK_THROWS(Partition({1, 2}));
    CHECK(Partition({3, 2, 0, 0}).parts() == std::vector<int>{3, 2});
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition({5, 4, 4, 3})) == Partition({4, 4, 4, 3, 1}));
    CHECK(transpose(Partition({6})) == Partition({1, 1, 1, 1, 1, 1}));
    CHECK(transpose(Partition()) == Partition());
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("dominance") {
    CHECK(dominates(Partition({4, 4, 4, 4}), Partition({5, 4, 4, 3})));
    CHECK(dominates(Partition({3, 2, 1}), Partition({3, 2, 1})));
    CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK_THROWS(dominates(Partition({2}), Partition({1, 1, 1})));
}

TEST_CASE("multiplicity vector") {
    CHECK(multiplicity_vector(Partition({2, 1}), 3) == std::vector<int>{1, 1});
    CHECK(multiplicity_vector(Partition({1, 1, 1, 1}), 4) == std::vector<int>{4, 0, 0});
    CHECK(multiplicity_vector(Partition({3}), 4) == std::vector<int>{0, 0, 1});
    CHECK_THROWS(multiplicity_vector(Partition({3}), 3));
}

TEST_CASE("corner boxes") {
    using Cell = std::pair<int, int>;
    CHECK(corner_boxes(Partition({5, 4, 4, 3})) ==
          std::vector<Cell>{{1, 5}, {3, 4}, {4, 3}});
    CHECK(corner_boxes(Partition({6})) == std::vector<Cell>{{1, 6}});
    CHECK(corner_boxes(Partition({2, 2, 2})) == std::vector<Cell>{{3, 2}});
    CHECK(corner_boxes(Partition()).empty());
}

TEST_CASE("p-restrictedness") {
    CHECK_FALSE(is_p_restricted(Partition({3}), 2));
    CHECK_FALSE(is_p_restricted(Partition({3}), 3));
    CHECK(is_p_restricted(Partition({1, 1, 1}), 2));
    CHECK(is_p_restricted(Partition({3}), 5));
    CHECK_THROWS(is_p_restricted(Partition({2, 1}), 4));
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(3) ==
          std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(9).size() == 30);
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
}
