#include "ccrgraph/errors.hpp"
#include "ccrgraph/family_io.hpp"
#include "ccrgraph/ginf.hpp"
#include "ccrgraph/setfam.hpp"
#include "ccrgraph/switching.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ccrgraph;
using setfam::FinitePair;
using setfam::SetFamily;

namespace {

using Members = std::vector<std::vector<std::size_t>>;

FinitePair make_pair(const SetFamily& fam, std::vector<std::size_t> f, std::vector<std::size_t> g)
{
    return {BitVector::from_indices(fam.size(), f), BitVector::from_indices(fam.universe_size(), g)};
}

graph::Graph extension_graph(const SetFamily& fam, const setfam::Extension& ext)
{
    std::vector<std::size_t> vertices = ext.elements;
    for (std::size_t x : ext.members)
        vertices.push_back(fam.universe_size() + x);
    return setfam::bipartite_graph(fam).induced(vertices);
}

} // namespace

TEST_CASE("family construction and format")
{
    const SetFamily power = SetFamily::power_set(3);
    CHECK(power.size() == 8);
    CHECK(power.member(5).indices() == std::vector<std::size_t>{0, 2});
    const SetFamily nonempty = SetFamily::nonempty_subsets(3);
    CHECK(nonempty.size() == 7);
    CHECK(nonempty.member(0).indices() == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(SetFamily(2, Members{{0, 2}}), InvalidArgument);

    const SetFamily fam(4, Members{{0, 1}, {}, {3}, {0, 1}});
    CHECK(setfam::parse_family(setfam::format_family(fam)) == fam);
    CHECK(setfam::parse_family("m=3\n# comment\n0,2\n\n1\n") == SetFamily(3, Members{{0, 2}, {}, {1}}));
    CHECK(fam.deduplicated().size() == 3);
    CHECK_THROWS_AS(setfam::parse_family("0,1\n"), ParseError);
    CHECK_THROWS_AS(setfam::parse_family("m=2\n0,2\n"), ParseError);
    CHECK_THROWS_AS(setfam::parse_family("m=2\n0,\n"), ParseError);
}

TEST_CASE("independence examples")
{
    const auto singles = setfam::is_independent(SetFamily::singletons(2), 2);
    CHECK_FALSE(singles.independent);
    REQUIRE(singles.counterexample);
    CHECK(singles.counterexample->f == std::vector<std::size_t>{0, 1});

    CHECK(setfam::is_independent(SetFamily(4, Members{{0, 1}, {0, 2}}), 2).independent);
    CHECK(setfam::is_independent(setfam::fk_family(3).family, 4).independent);
    CHECK_THROWS_AS(setfam::is_independent(SetFamily::singletons(2), 3), InvalidArgument);
}

TEST_CASE("independence agrees with ternary enumeration")
{
    std::mt19937_64 rng(1);
    for (std::size_t trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t members = 1 + rng() % 6;
        const SetFamily fam = SetFamily::random(m, members, 0.5, rng);
        const std::size_t cap = 1 + rng() % members;
        const auto result = setfam::is_independent(fam, cap);
        REQUIRE(result.independent == oracle::independent(fam, cap));
        if (result.counterexample) {
            // The reported selection really has an empty Boolean combination.
            BitVector inter(m);
            for (std::size_t e = 0; e < m; ++e)
                inter.set(e);
            for (std::size_t x : result.counterexample->f)
                inter &= fam.member(x);
            for (std::size_t x : result.counterexample->g)
                inter.and_not(fam.member(x));
            CHECK(inter.none());
        }
    }
}

TEST_CASE("separation and noncover")
{
    CHECK(setfam::is_separating(SetFamily::singletons(4)));
    CHECK_FALSE(setfam::is_separating(SetFamily(3, Members{{0, 1, 2}})));
    CHECK(setfam::is_separating(SetFamily::power_set(4)));
    CHECK_THROWS_AS(setfam::is_separating(SetFamily::singletons(13)), LimitExceeded);

    CHECK(setfam::is_noncovered(SetFamily::singletons(3)).noncovered);
    const auto covered = setfam::is_noncovered(SetFamily(2, Members{{0, 1}, {0}, {1}}));
    CHECK_FALSE(covered.noncovered);
    CHECK(covered.covered_member == 0);
    CHECK(setfam::is_noncovered(setfam::fk_family(2).family).noncovered);

    std::mt19937_64 rng(2);
    for (std::size_t trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 7;
        const SetFamily fam = SetFamily::random(m, 1 + rng() % 9, 0.5, rng);
        CHECK(setfam::is_separating(fam) == oracle::separating(fam, m));
        const std::size_t bound = 1 + rng() % m;
        const auto bounded = setfam::separation(fam, bound);
        CHECK(bounded.separating == oracle::separating(fam, bound));
        CHECK(bounded.witnessed <= bounded.total);
        CHECK(setfam::is_noncovered(fam).noncovered == oracle::noncovered(fam));
    }
}

TEST_CASE("duality")
{
    CHECK(setfam::dual(SetFamily::singletons(3)) == SetFamily::singletons(3));
    const SetFamily single(2, Members{{0, 1}});
    CHECK(setfam::dual(single) == SetFamily(1, Members{{0}, {0}}));

    std::mt19937_64 rng(3);
    for (std::size_t trial = 0; trial < 100; ++trial) {
        const SetFamily fam = SetFamily::random(1 + rng() % 6, 1 + rng() % 6, 0.5, rng);
        const SetFamily d = setfam::dual(fam);
        CHECK(setfam::dual(d) == fam);
        const bool both = setfam::is_separating(fam) && setfam::is_noncovered(fam).noncovered;
        const bool both_dual = setfam::is_separating(d) && setfam::is_noncovered(d).noncovered;
        CHECK(both == both_dual);
        CHECK(graph::graphs_isomorphic(setfam::bipartite_graph(fam), setfam::bipartite_graph(d)));
    }
}

TEST_CASE("almost disjoint")
{
    CHECK(setfam::is_almost_disjoint(SetFamily::singletons(4), 0));
    CHECK_FALSE(setfam::is_almost_disjoint(SetFamily(4, Members{{0, 1, 2}, {0, 1, 3}}), 1));

    // Branches of the depth-3 binary tree, nodes numbered heap-style.
    Members branches;
    for (std::size_t leaf = 0; leaf < 8; ++leaf) {
        std::vector<std::size_t> path;
        std::size_t node = 7 + leaf;
        while (true) {
            path.push_back(node);
            if (node == 0)
                break;
            node = (node - 1) / 2;
        }
        branches.push_back(path);
    }
    CHECK(setfam::is_almost_disjoint(SetFamily(15, branches), 3));
    CHECK_FALSE(setfam::is_almost_disjoint(SetFamily(15, branches), 2));
}

TEST_CASE("finite independent family on level sets")
{
    const auto zero = setfam::fk_family(0);
    CHECK(zero.family.universe_size() == 2);
    REQUIRE(zero.family.size() == 1);
    CHECK(zero.family.member(0).indices() == std::vector<std::size_t>{1});
    CHECK(zero.legend[0].to_string() == "{}");
    CHECK(zero.legend[1].to_string() == "{ε}");

    const auto three = setfam::fk_family(3);
    CHECK(three.family.size() == 8);
    CHECK(three.family.universe_size() == 2 + 4 + 16 + 256);
    CHECK_THROWS_AS(setfam::fk_family(4), LimitExceeded);

    // Independently rebuild X_f from the legend strings.
    for (std::size_t f = 0; f < 8; ++f) {
        const auto& x = three.family.member(f);
        for (std::size_t e = 0; e < three.legend.size(); ++e) {
            const auto& t = three.legend[e];
            const std::uint64_t prefix = f >> (3 - t.level);
            CHECK(x.test(e) == (((t.strings >> prefix) & 1U) == 1));
            // The full level is in every member.
            if (t.strings == (std::uint64_t{1} << (std::uint64_t{1} << t.level)) - 1)
                CHECK(x.test(e));
        }
    }
    CHECK(three.legend[2].to_string() == "{}");
    CHECK(three.legend[3].to_string() == "{0}");
    CHECK(three.legend[5].to_string() == "{0,1}");
    CHECK(three.legend[6 + 0b1010].to_string() == "{01,11}");
    CHECK(oracle::independent(three.family, 4));
}

TEST_CASE("bipartite graphs")
{
    const auto matching = setfam::bipartite_graph(SetFamily::singletons(3));
    CHECK(matching.edge_count() == 3);
    CHECK(graph::classify(matching).k == 3);
    CHECK(graph::classify(matching).simple);
    CHECK(setfam::bipartite_graph(SetFamily(3)).edge_count() == 0);
    CHECK(graph::classify(setfam::bipartite_graph(SetFamily::power_set(2))).k == 2);
}

TEST_CASE("extension to a full matrix algebra")
{
    const SetFamily fam = SetFamily::nonempty_subsets(4);
    // Member index 2 is {0,1}.
    const auto ext = setfam::extend_to_full_matrix(fam, make_pair(fam, {2}, {}));
    CHECK(ext.members.size() == 2);
    CHECK(ext.elements.size() == 2);
    CHECK(ext.pair.f.test(2));
    CHECK(setfam::has_pairing_pattern(fam, ext));
    CHECK(graph::classify(extension_graph(fam, ext)).l == 0);

    const auto again = setfam::extend_to_full_matrix(fam, ext.pair);
    CHECK(setfam::has_pairing_pattern(fam, again));
    CHECK(ext.pair.f.is_subset_of(again.pair.f));

    const SetFamily lonely(3, Members{{0}});
    CHECK_THROWS_AS(setfam::extend_to_full_matrix(lonely, make_pair(lonely, {0}, {1, 2})), ResourceExhausted);
    CHECK_THROWS_AS(setfam::extend_to_full_matrix(lonely, make_pair(fam, {0}, {})), InvalidArgument);

    std::mt19937_64 rng(4);
    const SetFamily five = SetFamily::nonempty_subsets(5);
    for (std::size_t trial = 0; trial < 100; ++trial) {
        std::vector<std::size_t> f;
        std::vector<std::size_t> g;
        for (std::size_t c = rng() % 3; c > 0; --c)
            f.push_back(rng() % five.size());
        for (std::size_t c = rng() % 3; c > 0; --c)
            g.push_back(rng() % 5);
        const FinitePair pair = make_pair(five, f, g);
        try {
            const auto e = setfam::extend_to_full_matrix(five, pair);
            CHECK(setfam::has_pairing_pattern(five, e));
            CHECK(pair.f.is_subset_of(e.pair.f));
            CHECK(pair.g.is_subset_of(e.pair.g));
            CHECK(graph::classify(extension_graph(five, e)).l == 0);
        } catch (const ResourceExhausted&) {
            // Some pairs admit no extension at all, e.g. nested members.
        }
    }
}

TEST_CASE("densify")
{
    const SetFamily separating = SetFamily::power_set(3);
    const auto same = setfam::densify(separating, 5);
    CHECK(same.family == separating);
    CHECK(same.report.edits.empty());

    const SetFamily fk2 = setfam::fk_family(2).family;
    const auto none = setfam::densify(fk2, 0);
    CHECK(none.family == fk2);
    CHECK(none.report.witnessed_after == none.report.witnessed_before);

    const auto improved = setfam::densify(fk2, 6);
    CHECK(improved.report.witnessed_after > improved.report.witnessed_before);
    CHECK(improved.report.budget_used <= 6);
    CHECK(improved.report.budget_used == improved.report.edits.size());
    CHECK(setfam::is_independent(improved.family, 4).independent);
    CHECK(setfam::separation(improved.family, 2).witnessed == improved.report.witnessed_after);
}
