#include "doctest.h"
#include "qv/perm.hpp"

#include <numeric>

using namespace qv;

TEST_CASE("perm basics") {
    Perm t = Perm::parse("(01)"), c = Perm::parse("(012345)");
    CHECK(t.sign() == -1);
    CHECK(c.sign() == -1);
    CHECK(c.order() == 6);
    CHECK((c * t)(0) == c(t(0)));
    CHECK((c * c.inverse()).is_identity());
    CHECK(Perm::parse("(012)(34)").cycle_type() == std::vector<int>{3, 2});
    CHECK(Perm::parse("(012)(34)").str() == "(012)(34)");
    for (int i = 0; i < kS6Order; ++i) CHECK(Perm::from_index(i).index() == i);
    CHECK_THROWS(Perm::parse("(01"));
}

TEST_CASE("generation") {
    CHECK(PermGroup::generate({Perm::parse("(01)"), Perm::parse("(012345)")}).order() == 720);
    CHECK(PermGroup::generate({Perm::parse("(012)"), Perm::parse("(12345)")}).order() == 360);
    CHECK(PermGroup::generate({}).order() == 1);
}

TEST_CASE("conjugacy classes of S6 and A6") {
    auto cs = conjugacy_classes(named_group("S6"));
    CHECK(cs.size() == 11);
    int total = 0;
    for (const auto& c : cs) {
        CHECK(720 % c.size() == 0);
        total += c.size();
    }
    CHECK(total == 720);

    auto ca = conjugacy_classes(named_group("A6"));
    CHECK(ca.size() == 7);
    for (const auto& c : ca)
        if (c.label.cycle_type == std::vector<int>{2, 2}) CHECK(c.size() == 45);
    // The 5-cycles split into two A6-classes of 72.
    int fives = 0;
    for (const auto& c : ca)
        if (c.label.cycle_type == std::vector<int>{5}) {
            CHECK(c.size() == 72);
            CHECK(c.label.split > 0);
            ++fives;
        }
    CHECK(fives == 2);
}

TEST_CASE("nonstandard S5") {
    PermGroup s5 = nonstandard_s5();
    CHECK(s5.order() == 120);
    CHECK(s5.is_transitive());
    CHECK_FALSE(s5.has_fixed_point());
    PermGroup f20 = s5.stabilizer(0);
    CHECK(f20.order() == 20);
    bool has_odd = false;
    for (const Perm& p : s5.elements()) has_odd |= p.sign() == -1;
    CHECK(has_odd);
    // Transpositions of S5 act as products of three transpositions.
    CHECK(sylow5_action(Perm::parse("(01)")).cycle_type() == std::vector<int>{2, 2, 2});
    CHECK(sylow5_action(Perm::parse("(01234)")).cycle_type() == std::vector<int>{5});
    CHECK(sylow5_action(Perm::parse("(0123)")).cycle_type() == std::vector<int>{4});
    CHECK(sylow5_action(Perm::parse("(012)(34)")).cycle_type() == std::vector<int>{6});
    // The named table uses the same construction.
    CHECK(named_group("S5nst") == s5);
}

TEST_CASE("named groups are consistent") {
    for (const auto& spec : named_group_table()) {
        const PermGroup& g = named_group(spec.name);
        CAPTURE(spec.name);
        CHECK(g.order() == spec.order);
        int total = 0;
        for (const auto& c : conjugacy_classes(g)) {
            CHECK(g.order() % c.size() == 0);
            total += c.size();
        }
        CHECK(total == g.order());
    }
    const PermGroup& s5n = named_group("S5nst");
    const PermGroup& f20 = named_group("F20");
    int fixed = f20.orbits().front().size() == 1 ? f20.orbits().front().front() : -1;
    for (const auto& o : f20.orbits())
        if (o.size() == 1) fixed = o.front();
    REQUIRE(fixed >= 0);
    CHECK(f20 == s5n.stabilizer(fixed));
    CHECK(named_group("A5nst") == s5n.even_part());
    CHECK(named_group("F36") == PermGroup::generate({Perm::parse("(012)"), Perm::parse("(01)"), Perm::parse("(345)"),
                                                    Perm::parse("(03)(14)(25)")})
                                    .even_part());
    CHECK_THROWS(named_group("nope"));
}

TEST_CASE("subgroup classes") {
    // Known counts of conjugacy classes of subgroups.
    CHECK(subgroup_classes(named_group("A5st")).size() == 9);
    CHECK(subgroup_classes(named_group("S5st")).size() == 19);
    CHECK(subgroup_classes(named_group("A6")).size() == 22);
    CHECK(cyclic_subgroup_classes(named_group("A5nst")).size() == 3);
    auto big = subgroup_classes(named_group("A5nst"), 4);
    std::vector<int> orders;
    for (const auto& h : big) orders.push_back(h.order());
    CHECK(orders == std::vector<int>{60, 12, 10, 6, 5, 4});
}

TEST_CASE("fusion counts and cosets") {
    auto cs = conjugacy_classes(named_group("S6"));
    auto counts = fusion_counts(cs, named_group("A5nst"));
    CHECK(std::accumulate(counts.begin(), counts.end(), 0) == 60);
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i].label.cycle_type == std::vector<int>{2, 2}) CHECK(counts[i] == 15);
    auto reps = named_group("A6").left_coset_reps(named_group("A5st"));
    CHECK(reps.size() == 6);
    CHECK(reps.front().is_identity());
    CHECK_THROWS(named_group("A5st").left_coset_reps(named_group("A6")));
}
