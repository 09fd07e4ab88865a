#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "zsum/group.hpp"

using namespace zsum;

TEST_CASE("parsing and canonicalization") {
    CHECK(Group::parse("C2xC4").invariant_factors() == std::vector<long long>{2, 4});
    CHECK(Group::parse("C2x4").invariant_factors() == std::vector<long long>{2, 4});
    CHECK(Group::parse("2,4").invariant_factors() == std::vector<long long>{2, 4});
    // out-of-order and non-chain factors normalize through the structure theorem
    CHECK(Group::parse("C4xC2").invariant_factors() == std::vector<long long>{2, 4});
    CHECK(Group::parse("C2xC3").invariant_factors() == std::vector<long long>{6});
    CHECK(Group::parse("C6xC4").invariant_factors() == std::vector<long long>{2, 12});
    CHECK_THROWS_AS(Group::parse("C1"), ParseError);
    CHECK_THROWS_AS(Group::parse(""), ParseError);
    CHECK_THROWS_AS(Group::parse("Cx"), ParseError);
    CHECK(Group::parse("C2xC4").spec_string() == "C2xC4");
}

TEST_CASE("element ids, arithmetic and order") {
    Group g({2, 4});
    CHECK(g.id_of({0, 0}) == 0);
    CHECK(g.element_of(g.id_of({1, 3})) == Element{1, 3});
    CHECK(g.id_of({3, 7}) == g.id_of({1, 3}));  // reduction
    CHECK(g.add(g.id_of({1, 3}), g.id_of({1, 2})) == g.id_of({0, 1}));
    CHECK(g.neg(g.id_of({1, 1})) == g.id_of({1, 3}));
    CHECK(g.scale(3, g.id_of({1, 1})) == g.id_of({1, 3}));
    CHECK(order_of({0, 0}, g) == 1);
    CHECK(order_of({0, 1}, g) == 4);
    Group big({4, 8});
    CHECK(order_of({1, 1}, big) == 8);

    // order invariants across a few groups
    for (const Group& h : all_groups_up_to(24)) {
        for (int id = 0; id < h.count(); ++id) {
            long long ord = h.order_of(id);
            CHECK(h.exponent() % ord == 0);
            CHECK(h.scale(ord, id) == 0);
            if (id != 0) CHECK(h.scale(ord - 1, id) != 0);
        }
    }
}

TEST_CASE("subgroups") {
    Group g({2, 4});
    Subgroup whole = subgroup_generated({g.id_of({1, 0}), g.id_of({0, 1})}, g);
    CHECK(whole.order() == 8);
    CHECK(whole.rank() == 2);
    CHECK(whole.invariant_factors == std::vector<long long>{2, 4});

    Subgroup small = subgroup_generated({g.id_of({0, 2})}, g);
    CHECK(small.order() == 2);
    CHECK(small.invariant_factors == std::vector<long long>{2});

    Subgroup trivial = subgroup_generated({}, g);
    CHECK(trivial.order() == 1);
    CHECK(trivial.rank() == 0);

    // |elements| always matches the product of the reported invariant factors,
    // and regenerating from the element set is idempotent
    for (const Group& h : all_groups_up_to(16)) {
        for (int a = 0; a < h.count(); ++a)
            for (int b = a; b < h.count(); ++b) {
                Subgroup s = subgroup_generated({a, b}, h);
                long long prod = 1;
                for (long long f : s.invariant_factors) prod *= f;
                CHECK(prod == s.order());
                Subgroup again = subgroup_generated(s.elements, h);
                CHECK(again.elements == s.elements);
                CHECK(again.invariant_factors == s.invariant_factors);
            }
    }
}

TEST_CASE("scaled subgroup") {
    Group g({2, 4});
    CHECK(scaled_subgroup(g, 2).order() == 2);
    CHECK(scaled_subgroup(g, 1).order() == 8);
    Group c6({6});
    CHECK(scaled_subgroup(c6, 6).order() == 1);
    CHECK(scaled_subgroup(c6, 2).invariant_factors == std::vector<long long>{3});
}

TEST_CASE("cyclic intersection matches the gcd law in cyclic groups") {
    for (long long n : {4, 6, 8, 9, 10, 12, 15}) {
        Group g({n});
        for (int a = 0; a < g.count(); ++a)
            for (int b = 0; b < g.count(); ++b) {
                bool trivial = cyclic_intersection_trivial(a, b, g);
                bool coprime = std::gcd(g.order_of(a), g.order_of(b)) == 1;
                CHECK(trivial == coprime);
            }
    }
    Group v({2, 2});
    CHECK(cyclic_intersection_trivial(v.id_of({1, 0}), v.id_of({0, 1}), v));
    CHECK(!cyclic_intersection_trivial(v.id_of({1, 0}), v.id_of({1, 0}), v));
}

TEST_CASE("number-theoretic helpers") {
    CHECK(d_star({2, 2}) == 3);
    CHECK(d_star({}) == 1);
    CHECK(d_star({4, 8}) == 11);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(36) == 12);
    CHECK(prime_omega(6) == 2);
    CHECK(prime_omega(8) == 1);
    CHECK(least_prime_divisor(15) == 3);
    CHECK(is_prime_power(27));
    CHECK(!is_prime_power(12));
    CHECK(coprime_split_count(12) == 2);
    CHECK(coprime_split_count(8) == 1);
    CHECK_THROWS(coprime_split_count(1));
    for (long long d = 2; d <= 10'000; ++d)
        REQUIRE(coprime_split_count(d) == oracle::scan_coprime_splits(d));
}

TEST_CASE("binomials and subset streams") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(count_subsets_up_to(4, 3) == 4 + 6 + 4);
    CHECK(count_subsets_up_to(9, 3) == 9 + 36 + 84);

    auto subsets = subsets_up_to(4, 3);
    CHECK(Int(subsets.size()) == count_subsets_up_to(4, 3));
    // distinct, sorted tuples, and a deterministic restartable order
    for (const auto& s : subsets) CHECK(std::is_sorted(s.begin(), s.end()));
    auto again = subsets_up_to(4, 3);
    CHECK(subsets == again);
    std::sort(subsets.begin(), subsets.end());
    CHECK(std::adjacent_find(subsets.begin(), subsets.end()) == subsets.end());
}

TEST_CASE("group enumeration by order") {
    auto groups = all_groups_up_to(16);
    int order8 = 0, order16 = 0;
    for (const Group& g : groups) {
        // each reported factor list is a genuine divisibility chain
        const auto& f = g.invariant_factors();
        for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
        if (g.order() == 8) ++order8;
        if (g.order() == 16) ++order16;
    }
    CHECK(order8 == 3);    // C8, C2xC4, C2^3
    CHECK(order16 == 5);   // C16, C2xC8, C4xC4, C2xC2xC4, C2^4
}
