#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semideco/errors.hpp"
#include "semideco/finite_space.hpp"

using namespace semideco;

TEST_SUITE_BEGIN("finite_space");

TEST_CASE("build_space closes generators") {
    SUBCASE("one-point space") {
        FiniteSpace s = FiniteSpace::build({"a"}, {});
        CHECK(s.size() == 1);
        CHECK(s.le(0, 0));
    }
    SUBCASE("chain infers transitivity") {
        FiniteSpace s = FiniteSpace::build({"c", "p", "r"}, {{"c", "p"}, {"p", "r"}});
        CHECK(s.le(s.require_index("c"), s.require_index("r")));
        CHECK_FALSE(s.le(s.require_index("r"), s.require_index("c")));
    }
    SUBCASE("arc keeps s and t incomparable") {
        FiniteSpace s = fixtures::arc_space();
        const int si = s.require_index("s"), ti = s.require_index("t"), oi = s.require_index("o");
        CHECK(s.le(si, oi));
        CHECK(s.le(ti, oi));
        CHECK_FALSE(s.le(si, ti));
        CHECK_FALSE(s.le(ti, si));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(FiniteSpace::build({"a", "a"}, {}), input_error);
        CHECK_THROWS_AS(FiniteSpace::build({"a"}, {{"a", "zz"}}), input_error);
    }
}

TEST_CASE("closure is the down-closure") {
    FiniteSpace arc = fixtures::arc_space();
    const int si = arc.require_index("s"), ti = arc.require_index("t"), oi = arc.require_index("o");
    CHECK(closure(arc, PointSet({oi})) == PointSet({si, ti, oi}));
    CHECK(closure(arc, PointSet({si})) == PointSet({si}));

    FiniteSpace chain = fixtures::chain_space();
    const int ci = chain.require_index("c"), pi = chain.require_index("p");
    CHECK(closure(chain, PointSet({pi})) == PointSet({ci, pi}));
}

TEST_CASE("connected_components on the comparability graph") {
    FiniteSpace arc = fixtures::arc_space();
    const int si = arc.require_index("s"), ti = arc.require_index("t"), oi = arc.require_index("o");
    CHECK(connected_components(arc, PointSet({si, ti})).size() == 2);
    CHECK(connected_components(arc, PointSet({si, ti, oi})).size() == 1);
    CHECK(connected_components(arc, PointSet{}).empty());
}

TEST_CASE("quotient") {
    SUBCASE("collapse a chain to a point") {
        FiniteSpace s = FiniteSpace::build({"c", "p"}, {{"c", "p"}});
        QuotientMap q = quotient(s, {PointSet({0, 1})});
        CHECK(q.target.size() == 1);
        CHECK(q.project == std::vector<int>{0, 0});
    }
    SUBCASE("circle model quotients to a 2-chain") {
        FiniteSpace s = FiniteSpace::build(
            {"u", "v", "e1", "e2"},
            {{"u", "e1"}, {"v", "e1"}, {"u", "e2"}, {"v", "e2"}});
        QuotientMap q = quotient(
            s, {PointSet({s.require_index("u"), s.require_index("v")}),
                PointSet({s.require_index("e1"), s.require_index("e2")})});
        CHECK(q.target.size() == 2);
        CHECK(q.target.le(0, 1));
        CHECK_FALSE(q.target.le(1, 0));
    }
    SUBCASE("identity partition is isomorphic to the source") {
        FiniteSpace s = fixtures::arc_space();
        std::vector<PointSet> parts;
        for (int i = 0; i < s.size(); ++i) parts.push_back(PointSet({i}));
        QuotientMap q = quotient(s, parts);
        CHECK(is_homeomorphic(q.target, s).has_value());
    }
    SUBCASE("errors") {
        FiniteSpace s = fixtures::arc_space();
        CHECK_THROWS_AS(quotient(s, {PointSet({0})}), input_error);
        CHECK_THROWS_AS(quotient(s, {PointSet({0, 1}), PointSet({1, 2})}), input_error);
    }
}

TEST_CASE("is_homeomorphic basics") {
    FiniteSpace two_chain = FiniteSpace::build({"a", "b"}, {{"a", "b"}});
    FiniteSpace two_anti = FiniteSpace::build({"x", "y"}, {});
    CHECK_FALSE(is_homeomorphic(two_chain, two_anti).has_value());

    FiniteSpace arc = fixtures::arc_space();
    auto self = is_homeomorphic(arc, arc);
    REQUIRE(self.has_value());
    for (int i = 0; i < arc.size(); ++i)
        for (int j = 0; j < arc.size(); ++j)
            CHECK(arc.le(i, j) == arc.le((*self)[i], (*self)[j]));

    // non-T0: two equivalent points vs a genuine chain
    FiniteSpace fuzz = FiniteSpace::build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK_FALSE(is_homeomorphic(fuzz, two_chain).has_value());
    CHECK(is_homeomorphic(fuzz, fuzz).has_value());
}

TEST_CASE("is_homeomorphic agrees with exhaustive search on <= 4 points") {
    for (int n = 1; n <= 4; ++n) {
        const auto rels = oracles::all_preorders(n);
        std::vector<FiniteSpace> spaces;
        spaces.reserve(rels.size());
        for (const auto& rel : rels) spaces.push_back(oracles::space_of(rel));
        for (std::size_t i = 0; i < spaces.size(); ++i)
            for (std::size_t j = i; j < spaces.size(); ++j) {
                const bool fast = is_homeomorphic(spaces[i], spaces[j]).has_value();
                const bool slow =
                    oracles::brute_force_isomorphism(spaces[i], spaces[j]).has_value();
                if (fast != slow) {
                    CAPTURE(i);
                    CAPTURE(j);
                    REQUIRE(fast == slow);
                }
            }
    }
}

TEST_CASE("witness returned by is_homeomorphic is an order isomorphism") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FiniteSpace a = oracles::random_space(rng, 6);
        // relabelled shuffle of a
        std::vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        RelMatrix rel(a.size(), std::vector<bool>(a.size(), false));
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) rel[perm[i]][perm[j]] = a.le(i, j);
        std::vector<std::string> names;
        for (int i = 0; i < a.size(); ++i) names.push_back("q" + std::to_string(i));
        FiniteSpace b = FiniteSpace::from_relation(std::move(names), std::move(rel));

        auto witness = is_homeomorphic(a, b);
        REQUIRE(witness.has_value());
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j)
                CHECK(a.le(i, j) == b.le((*witness)[i], (*witness)[j]));
    }
}

TEST_CASE("closure laws and component structure on random spaces") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        FiniteSpace s = oracles::random_space(rng, 7);
        const int n = s.size();
        std::vector<int> av, bv;
        for (int i = 0; i < n; ++i) {
            if (rng() % 2) av.push_back(i);
            if (rng() % 2) bv.push_back(i);
        }
        PointSet a{av}, b{bv};

        CHECK(closure(s, closure(s, a)) == closure(s, a));
        CHECK(closure(s, set_union(a, b)) == set_union(closure(s, a), closure(s, b)));
        CHECK(is_subset(a, closure(s, a)));
        CHECK(is_closed_set(s, closure(s, a)));

        // components partition a, are internally connected, and have no
        // comparable cross pairs
        auto comps = connected_components(s, a);
        PointSet all;
        for (const auto& c : comps) {
            CHECK(!c.empty());
            CHECK(set_intersection(all, c).empty());
            all = set_union(all, c);
            CHECK(connected_components(s, c).size() == 1);
        }
        CHECK(all == a);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                for (int x : comps[i].items())
                    for (int y : comps[j].items()) {
                        CHECK_FALSE(s.le(x, y));
                        CHECK_FALSE(s.le(y, x));
                    }
    }
}

TEST_CASE("comparability connectedness equals open-set connectedness on <= 3 points") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& rel : oracles::all_preorders(n)) {
            FiniteSpace s = oracles::space_of(rel);
            for (const PointSet& a : oracles::all_subsets(n)) {
                const bool comparability = connected_components(s, a).size() <= 1;
                CHECK(comparability == oracles::open_split_connected(s, a));
            }
        }
    }
}

TEST_CASE("quotient target satisfies the space invariants") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        FiniteSpace s = oracles::random_space(rng, 7);
        const int n = s.size();
        std::vector<int> cls(n);
        const int k = 1 + static_cast<int>(rng() % n);
        for (int i = 0; i < n; ++i) cls[i] = static_cast<int>(rng() % k);
        std::vector<std::vector<int>> members(k);
        for (int i = 0; i < n; ++i) members[cls[i]].push_back(i);
        std::vector<PointSet> parts;
        for (auto& m : members)
            if (!m.empty()) parts.emplace_back(std::move(m));
        QuotientMap q = quotient(s, parts);
        CHECK(is_reflexive(q.target.relation()));
        CHECK(is_transitive(q.target.relation()));
        for (int i = 0; i < n; ++i) CHECK(q.classes[q.project[i]].contains(i));
    }
}

TEST_SUITE_END();
