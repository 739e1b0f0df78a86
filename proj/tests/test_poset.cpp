#include "doctest.h"

#include <random>

#include "ics/poset.hpp"
#include "fixture.hpp"

using namespace ics;

TEST_CASE("chain is totally ordered and ranked") {
    Poset p = chain(5);
    CHECK(p.size() == 5);
    CHECK(p.covers().size() == 4);
    CHECK(p.leq(0, 4));
    CHECK_FALSE(p.leq(4, 0));
    CHECK(p.is_ranked());
    CHECK(p.rank(2) == 2);
    CHECK(p.height() == 4);
    CHECK(chain(1).covers().empty());
    CHECK_THROWS_AS(chain(0), std::invalid_argument);
}

TEST_CASE("antichain has no relations") {
    Poset p = antichain(4);
    CHECK(p.size() == 4);
    CHECK(p.covers().empty());
    CHECK(p.incomparable(0, 1));
    CHECK(p.rank(3) == 0);
    CHECK(structurally_equal(antichain(1), chain(1)));
    CHECK_THROWS_AS(antichain(0), std::invalid_argument);
}

TEST_CASE("from_covers validates its input") {
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    // (0,2) is implied by (0,1),(1,2)
    CHECK_THROWS_AS(Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("from_leq derives the covers by transitive reduction") {
    std::vector<std::vector<bool>> leq(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) leq[i][j] = true;
    CHECK(structurally_equal(Poset::from_leq(3, leq), chain(3)));
    leq[0][0] = false;
    CHECK_THROWS_AS(Poset::from_leq(3, leq), std::invalid_argument);
}

TEST_CASE("ordinal sum layers are completely related") {
    Poset p = ordinal_sum({antichain(2), antichain(3)});
    CHECK(p.size() == 5);
    CHECK(p.covers().size() == 6);
    CHECK(p.leq(0, 4));
    CHECK(p.incomparable(0, 1));
    CHECK(structurally_equal(ordinal_sum({chain(2), chain(2)}), chain(4)));
    CHECK(structurally_equal(ordinal_sum_of_antichains({1, 1, 1, 1}), chain(4)));
    CHECK(p.label(2) == "(2,1)");
}

TEST_CASE("disjoint union keeps parts unrelated") {
    Poset p = disjoint_union({chain(2), chain(2)});
    CHECK(p.size() == 4);
    CHECK(p.covers().size() == 2);
    CHECK(p.incomparable(0, 2));
    CHECK(structurally_equal(disjoint_union({antichain(1), antichain(1)}), antichain(2)));
}

TEST_CASE("product is ordered componentwise") {
    Poset d = product(chain(2), chain(2));
    CHECK(d.size() == 4);
    CHECK(d.covers().size() == 4);
    CHECK(d.is_ranked());
    CHECK(d.rank(3) == 2);
    CHECK(d.label(1) == "(1,2)");

    Poset g = product(chain(4), chain(5));
    CHECK(g.size() == 20);
    // (a,b) index is (a-1)*5 + (b-1)
    CHECK(g.leq(0, 7));
    CHECK(g.incomparable(4, 5));

    // the largest antichain of [2]x[n] has two elements
    Poset p = product(chain(2), chain(6));
    CHECK(p.is_antichain(p.subset_of({1, 6})));
    bool triple_antichain = false;
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y)
            for (int z = y + 1; z < p.size(); ++z)
                if (p.incomparable(x, y) && p.incomparable(x, z) && p.incomparable(y, z))
                    triple_antichain = true;
    CHECK_FALSE(triple_antichain);
}

TEST_CASE("stacked diamonds alternate singleton and wide layers") {
    CHECK(structurally_equal(stacked_diamond(3, 2), ordinal_sum_of_antichains({1, 2, 1})));
    CHECK(stacked_diamond(5, 2).size() == 7);
    CHECK(stacked_diamond(7, 3).size() == 13);
    CHECK_THROWS_AS(stacked_diamond(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(stacked_diamond(3, 1), std::invalid_argument);
}

TEST_CASE("divisor posets are products of chains with divisor labels") {
    CHECK(structurally_equal(divisor_poset(48), product(chain(2), chain(5))));
    CHECK(structurally_equal(divisor_poset(7), chain(2)));
    CHECK(structurally_equal(divisor_poset(6), product(chain(2), chain(2))));
    Poset p = divisor_poset(12);
    CHECK(p.find_label("12") == p.size() - 1);
    CHECK(p.find_label("1") == 0);
    CHECK_THROWS_AS(divisor_poset(1), std::invalid_argument);
}

TEST_CASE("dual reverses the order and is an involution") {
    CHECK(structurally_equal(dual(chain(3)).dual(), chain(3)));
    // dual keeps element identity, so the reversed chain runs top to bottom
    Poset rc = chain(3).dual();
    CHECK(rc.leq(2, 0));
    CHECK_FALSE(rc.leq(0, 2));
    Poset layered = ordinal_sum({antichain(2), antichain(3)}).dual();
    CHECK(layered.minimal_elements().count() == 3);
    CHECK(layered.maximal_elements().count() == 2);
    Poset p = fixture::worked_example();
    Poset d = p.dual();
    Subset s = fixture::labeled(p, {5, 8, 9, 10, 11, 16});
    CHECK(d.adopt(p.filter_closure(s)) == d.ideal_closure(d.adopt(s)));
}

TEST_CASE("closures are idempotent, monotone and extensive") {
    Poset p = fixture::worked_example();
    Subset s = fixture::labeled(p, {5, 8, 9, 10, 11, 16});
    Subset down = p.ideal_closure(s);
    CHECK(down == fixture::labeled(p, {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 16}));
    CHECK(p.filter_closure(s) ==
          fixture::labeled(p, {5, 8, 9, 10, 11, 14, 15, 16, 17, 19, 20}));
    CHECK(p.ideal_closure(down) == down);
    CHECK(down.contains(s));
    Subset smaller = fixture::labeled(p, {5, 8});
    CHECK(down.contains(p.ideal_closure(smaller)));
    CHECK(p.ideal_closure(p.empty_subset()).empty());
    CHECK(p.filter_closure(p.empty_subset()).empty());
}

TEST_CASE("extremal elements of a subset form antichains") {
    Poset p = fixture::worked_example();
    Subset s = fixture::labeled(p, {5, 8, 9, 10, 11, 16});
    CHECK(p.maximal_of(s) == fixture::labeled(p, {8, 16}));
    CHECK(p.minimal_of(s) == fixture::labeled(p, {5, 8, 11}));
    CHECK(p.is_antichain(p.maximal_of(s)));
    CHECK(p.is_antichain(p.minimal_of(s)));
    Subset single = fixture::labeled(p, {10});
    CHECK(p.maximal_of(single) == single);
    CHECK(p.minimal_of(single) == single);
    Poset c = chain(6);
    CHECK(c.maximal_of(c.full_subset()) == c.subset_of({5}));
}

TEST_CASE("linear extensions respect all covers") {
    CHECK(chain(3).linear_extension() == std::vector<int>{0, 1, 2});
    CHECK(antichain(2).linear_extension() == std::vector<int>{0, 1});
    Poset p = fixture::worked_example();
    auto ext = p.linear_extension();
    CHECK(p.is_linear_extension(ext));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto random_ext = p.linear_extension([&](int k) {
            return static_cast<int>(rng() % static_cast<unsigned>(k));
        });
        CHECK(p.is_linear_extension(random_ext));
    }
    auto bad = ext;
    std::swap(bad[0], bad.back());
    CHECK_FALSE(p.is_linear_extension(bad));
}

TEST_CASE("subsets of different posets do not mix") {
    Poset a = chain(3), b = chain(3);
    CHECK_THROWS_AS(a.ideal_closure(b.empty_subset()), std::invalid_argument);
    CHECK_THROWS_AS((void)(a.full_subset() | b.full_subset()), std::invalid_argument);
    CHECK(a.ideal_closure(a.adopt(b.full_subset())) == a.full_subset());
}

TEST_CASE("json round trip preserves structure and labels") {
    Poset p = product(chain(2), chain(3));
    Poset q = Poset::from_json(p.to_json());
    CHECK(structurally_equal(p, q));
    CHECK(q.label(5) == "(2,3)");
}

TEST_CASE("dot export lists every element and cover") {
    Poset p = product(chain(2), chain(2));
    std::string dot = p.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"(1,1)\"") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("rank detection") {
    Poset p = Poset::from_covers(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    CHECK(p.is_ranked());
    // Ranks are measured from rank 0 at the minimal elements, so a cover
    // from a minimal element into rank 2 makes the poset unranked.
    Poset q = Poset::from_covers(4, {{0, 1}, {1, 3}, {2, 3}});
    CHECK_FALSE(q.is_ranked());
    CHECK_THROWS_AS(q.rank(0), std::logic_error);
    CHECK_THROWS_AS(q.height(), std::logic_error);
}
