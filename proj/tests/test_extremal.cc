/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support/support.hh"

#include <revex/error.hh>
#include <revex/extremal.hh>
#include <revex/gallery.hh>
#include <revex/io.hh>
#include <revex/morphism.hh>

#include <doctest.h>

#include <map>
#include <string>

using namespace revex;
using namespace revex::testing;

namespace
{
    auto linear3() -> Structure
    {
        return make_binary(3, { { 0, 1 }, { 0, 2 }, { 1, 2 } });
    }

    auto out_degree_at_most(const Structure & s, int d) -> bool
    {
        for (int x = 0 ; x < s.domain() ; ++x) {
            int count = 0;
            for (int y = 0 ; y < s.domain() ; ++y)
                count += s.contains(0, { x, y });
            if (count > d)
                return false;
        }
        return true;
    }

    auto every_triple_has_one_or_two_edges(const Structure & g) -> bool
    {
        return ! brute_has_clique(g, 3) && ! brute_has_independent(g, 3);
    }

    /// A class given two ways: as a specification and as a direct predicate.
    struct Case
    {
        std::string name;
        ClassSpec spec;
        Predicate holds;
        int largest;
    };

    auto cases() -> std::vector<Case>
    {
        std::vector<Case> result;
        auto graph = graph_spec();

        result.push_back({ "triangle-free", triangle_free_spec(),
                [] (const Structure & s) { return brute_graph(s) && ! brute_has_clique(s, 3); }, 4 });

        auto no_e3 = graph;
        no_e3.forbidden = { gallery::empty(3) };
        result.push_back({ "no independent triple", no_e3,
                [] (const Structure & s) { return brute_graph(s) && ! brute_has_independent(s, 3); }, 4 });

        result.push_back({ "poset", poset_spec(), brute_strict_order, 3 });

        auto matching = graph;
        matching.degree_max = 1;
        result.push_back({ "matching", matching,
                [] (const Structure & s) { return brute_graph(s) && brute_max_degree(s) <= 1; }, 4 });

        auto ramsey = graph;
        ramsey.local_bounds[3] = { LocalBound{ 2, 4 } };
        result.push_back({ "local bounds", ramsey,
                [] (const Structure & s) { return brute_graph(s) && every_triple_has_one_or_two_edges(s); }, 4 });

        ClassSpec no_empty_pair;
        no_empty_pair.forbidden = { Structure(Signature::binary(), 2) };
        result.push_back({ "omit empty pair", no_empty_pair, [] (const Structure & s) {
                    for (int x = 0 ; x < s.domain() ; ++x)
                        for (int y = x + 1 ; y < s.domain() ; ++y)
                            if (! s.contains(0, { x, y }) && ! s.contains(0, { y, x }) && ! s.contains(0, { x, x })
                                    && ! s.contains(0, { y, y }))
                                return false;
                    return true;
                }, 3 });

        ClassSpec serial;
        serial.axioms = { parse_formula("A v0 . E v1 . R0(v0,v1)") };
        result.push_back({ "serial", serial, [] (const Structure & s) {
                    for (int x = 0 ; x < s.domain() ; ++x) {
                        bool any = false;
                        for (int y = 0 ; y < s.domain() ; ++y)
                            any = any || s.contains(0, { x, y });
                        if (! any)
                            return false;
                    }
                    return true;
                }, 3 });

        auto connected = graph;
        connected.builtins.push_back(Builtin::connected);
        result.push_back({ "connected graph", connected,
                [] (const Structure & s) { return brute_graph(s) && brute_connected(s); }, 4 });

        ClassSpec partial_function;
        partial_function.defbounds = { DefBound{ parse_formula("R0(v0,v1)"), 1, 1, 1 } };
        result.push_back({ "partial function", partial_function,
                [] (const Structure & s) { return out_degree_at_most(s, 1); }, 3 });

        ClassSpec reflexive_no_clique;
        reflexive_no_clique.builtins = { Builtin::reflexive, Builtin::symmetric };
        reflexive_no_clique.forbidden = { Structure::full(Signature::binary(), 3) };
        result.push_back({ "reflexive, no full triple", reflexive_no_clique, [] (const Structure & s) {
                    if (! brute_reflexive(s) || ! brute_symmetric(s))
                        return false;
                    Structure loopless = s;
                    for (int x = 0 ; x < s.domain() ; ++x)
                        loopless.erase(0, { x, x });
                    return ! brute_has_clique(loopless, 3);
                }, 4 });

        ClassSpec mixed;
        mixed.builtins = { Builtin::irreflexive };
        mixed.axioms = { parse_formula("A v0 . A v1 . (~R0(v0,v1) | E v2 . (R0(v1,v2) & ~v2 = v0))") };
        result.push_back({ "mixed axiom", mixed, [] (const Structure & s) {
                    if (! brute_irreflexive(s))
                        return false;
                    for (int x = 0 ; x < s.domain() ; ++x)
                        for (int y = 0 ; y < s.domain() ; ++y) {
                            if (! s.contains(0, { x, y }))
                                continue;
                            bool any = false;
                            for (int z = 0 ; z < s.domain() ; ++z)
                                any = any || (z != x && s.contains(0, { y, z }));
                            if (! any)
                                return false;
                        }
                    return true;
                }, 3 });

        return result;
    }

    auto sorted(std::vector<Structure> v) -> std::vector<Structure>
    {
        std::sort(v.begin(), v.end());
        return v;
    }
}

TEST_CASE("membership examples")
{
    auto tf = triangle_free_spec();
    CHECK(member(gallery::cycle(5), tf));
    CHECK_FALSE(member(gallery::complete(3), tf));
    CHECK(member(linear3(), poset_spec()));
    CHECK_THROWS_AS(member(Structure(Signature({ 1 }), 3), tf), MismatchError);

    CompiledSpec compiled(tf, 3);
    CHECK(compiled.violations(gallery::complete(3)).size() == 1);
    CHECK(compiled.violations(gallery::cycle(3)).size() == 1);
    CHECK(compiled.violations(gallery::empty(3)).empty());
}

TEST_CASE("membership agrees with direct predicates")
{
    for (auto & c : cases()) {
        INFO(c.name);
        for (int n = 1 ; n <= c.largest ; ++n) {
            CompiledSpec compiled(c.spec, n);
            for (auto & s : all_structures(Signature::binary(), n))
                CHECK(compiled.member(s) == c.holds(s));
        }
    }
}

TEST_CASE("validation")
{
    ClassSpec free_axiom;
    free_axiom.axioms = { parse_formula("R0(v0,v1)") };
    CHECK_THROWS_AS(validate(free_axiom), PreconditionError);

    ClassSpec wide_bounds;
    wide_bounds.local_bounds[2] = { LocalBound{ 0, 5 } };
    CHECK_THROWS_AS(validate(wide_bounds), PreconditionError);
    wide_bounds.local_bounds[2] = { LocalBound{ 3, 2 } };
    CHECK_THROWS_AS(validate(wide_bounds), PreconditionError);

    ClassSpec ternary;
    ternary.signature = Signature({ 3 });
    ternary.builtins = { Builtin::symmetric };
    CHECK_THROWS_AS(validate(ternary), PreconditionError);

    ClassSpec wrong_pattern;
    wrong_pattern.forbidden = { Structure(Signature({ 1 }), 2) };
    CHECK_THROWS_AS(validate(wrong_pattern), MismatchError);

    ClassSpec bad_axiom;
    bad_axiom.axioms = { parse_formula("A v0 . R3(v0,v0)") };
    CHECK_THROWS_AS(validate(bad_axiom), PreconditionError);
}

TEST_CASE("closure tags")
{
    auto graph = graph_spec();
    CHECK(forbidden_closure(gallery::complete(3), graph) == Closure::down);
    CHECK(forbidden_closure(gallery::empty(3), graph) == Closure::up);
    CHECK(forbidden_closure(gallery::path(3), graph) == Closure::neither);
    CHECK(forbidden_closure(diagonal(2), graph) == Closure::both);

    ClassSpec plain;
    CHECK(forbidden_closure(Structure::full(Signature::binary(), 2), plain) == Closure::down);
    CHECK(forbidden_closure(Structure(Signature::binary(), 2), plain) == Closure::up);
    CHECK(forbidden_closure(gallery::complete(2), plain) == Closure::neither);

    // every tag is checked against single moves on small domains
    for (auto & c : cases())
        for (int n = 1 ; n <= std::min(c.largest, 3) ; ++n) {
            CompiledSpec compiled(c.spec, n);
            auto & lattice = compiled.lattice();
            for (auto & k : compiled.constraints())
                for (auto & s : all_structures(Signature::binary(), n)) {
                    if (! lattice.consistent() || lattice.to_structure(lattice.to_mask(s)) != s || ! k.holds(s))
                        continue;
                    for (int i = 0 ; i < lattice.size() ; ++i) {
                        Structure t = s;
                        bool present = lattice.has_cell(s, i);
                        lattice.set_cell(t, i, ! present);
                        bool down = present, up = ! present;
                        INFO(c.name, " ", k.description);
                        if ((k.closure == Closure::down || k.closure == Closure::both) && down)
                            CHECK(k.holds(t));
                        if ((k.closure == Closure::up || k.closure == Closure::both) && up)
                            CHECK(k.holds(t));
                    }
                }
        }
}

TEST_CASE("extremality examples")
{
    auto poset = poset_spec();
    auto r = is_maximal(linear3(), poset);
    CHECK(r.certified());
    CHECK_FALSE(r.witness);

    auto partial = make_binary(3, { { 0, 1 } });
    auto s = is_maximal(partial, poset);
    CHECK(s.verdict == Verdict::refuted);
    REQUIRE(s.witness);
    CHECK(brute_subset(partial, *s.witness));
    CHECK(*s.witness != partial);
    CHECK(brute_strict_order(*s.witness));

    auto empty = Structure(Signature::binary(), 3);
    CHECK(is_minimal(empty, poset).certified());
    CompiledSpec compiled(poset, 3);
    CensusOptions min_only;
    min_only.what = CensusWhat::minimal;
    CHECK(census(3, poset, min_only) == std::vector<Structure>{ empty });

    CHECK_THROWS_AS(is_maximal(gallery::complete(3), triangle_free_spec()), PreconditionError);

    // local mode on a class with a constraint of no closure says only what it knows
    auto local = is_maximal(linear3(), poset, SearchMode::local);
    CHECK(local.verdict == Verdict::locally_extreme);

    // a budget too small for the exact search is reported as such
    auto order4 = make_binary(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } });
    CHECK(is_maximal(order4, poset, SearchMode::exact, 10).verdict == Verdict::inconclusive);
    CHECK(is_maximal(order4, poset, SearchMode::exact).certified());

    // single moves decide for a downward-closed class
    auto tf = is_maximal(gallery::cycle(5), triangle_free_spec(), SearchMode::local);
    CHECK(tf.certified());
}

TEST_CASE("extremality agrees with brute force")
{
    for (auto & c : cases()) {
        INFO(c.name);
        for (int n = 1 ; n <= std::min(c.largest, 3) ; ++n)
            for (auto & s : all_structures(Signature::binary(), n)) {
                if (! c.holds(s))
                    continue;
                for (bool maximal : { true, false }) {
                    auto r = is_extreme(s, c.spec, maximal ? Extreme::maximal : Extreme::minimal, SearchMode::exact);
                    REQUIRE(r.verdict != Verdict::inconclusive);
                    CHECK(r.certified() == brute_extreme(s, c.holds, maximal));
                    if (r.certified()) {
                        CHECK_FALSE(r.witness);
                        CHECK(is_reversible(s));
                    }
                    else {
                        REQUIRE(r.witness);
                        CHECK(c.holds(*r.witness));
                        CHECK((maximal ? brute_subset(s, *r.witness) : brute_subset(*r.witness, s)));
                    }
                    auto local = is_extreme(s, c.spec, maximal ? Extreme::maximal : Extreme::minimal, SearchMode::local);
                    if (local.verdict == Verdict::refuted)
                        CHECK_FALSE(r.certified());
                    if (local.verdict == Verdict::certified)
                        CHECK(r.certified());
                }
            }
    }
}

TEST_CASE("maximal and minimal members are closed under isomorphism")
{
    auto tf = triangle_free_spec();
    for (auto & g : all_graphs(5)) {
        if (! member(g, tf) || ! is_maximal(g, tf).certified())
            continue;
        for (auto & h : iso_class(g))
            CHECK(is_maximal(h, tf).certified());
    }
}

TEST_CASE("saturation")
{
    auto poset = poset_spec();
    auto empty4 = Structure(Signature::binary(), 4);
    auto up = saturate(empty4, poset, Extreme::maximal);
    CHECK(brute_strict_linear_order(up));

    auto one = make_binary(3, { { 0, 1 } });
    auto ext = saturate(one, poset, Extreme::maximal);
    CHECK(brute_strict_linear_order(ext));
    CHECK(ext.contains(0, { 0, 1 }));

    auto tf = triangle_free_spec();
    auto g = saturate(gallery::empty(5), tf, Extreme::maximal);
    CHECK(is_maximal(g, tf, SearchMode::exact).certified());
    for (auto & h : all_graphs(5))
        if (h != g && brute_subset(g, h))
            CHECK(brute_has_clique(h, 3));

    CHECK_THROWS_AS(saturate(gallery::complete(3), tf, Extreme::maximal), PreconditionError);

    // seeded runs are reproducible, and every result contains its input
    Rng rng(41);
    for (int i = 0 ; i < 200 ; ++i) {
        auto p = random_partial_order(rng, uniform(rng, 1, 6));
        std::uint64_t seed = rng();
        auto a = saturate(p, poset, Extreme::maximal, seed);
        CHECK(a == saturate(p, poset, Extreme::maximal, seed));
        CHECK(brute_subset(p, a));
        CHECK(brute_strict_linear_order(a));
        auto b = saturate(p, poset, Extreme::minimal, seed);
        CHECK(b == Structure(Signature::binary(), p.domain()));
    }
}

TEST_CASE("complement duality")
{
    auto tf = triangle_free_spec();
    auto dual = complement_dual(tf);
    CHECK(dual.has(Builtin::reflexive));
    CHECK(dual.has(Builtin::symmetric));
    CHECK_FALSE(dual.has(Builtin::irreflexive));
    REQUIRE(dual.forbidden.size() == 1);
    CHECK(dual.forbidden[0] == diagonal(3));
    CHECK(complement_dual(dual) == normalize(tf));

    auto connected = graph_spec();
    connected.builtins.push_back(Builtin::connected);
    CHECK_THROWS_AS(complement_dual(connected), PreconditionError);
    CHECK_THROWS_AS(complement_dual(poset_spec()), PreconditionError);

    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & g : all_graphs(n)) {
            bool max = member(g, tf) && is_maximal(g, tf).certified();
            auto co = complement(g);
            bool min = member(co, dual) && is_minimal(co, dual).certified();
            CHECK(max == min);
        }

    for (auto & c : cases()) {
        ClassSpec d;
        try {
            d = complement_dual(c.spec);
        }
        catch (const PreconditionError &) {
            continue;
        }
        INFO(c.name);
        CHECK(complement_dual(d) == normalize(c.spec));
        for (int n = 1 ; n <= 3 ; ++n) {
            CensusOptions max_only, min_only;
            max_only.what = CensusWhat::maximal;
            min_only.what = CensusWhat::minimal;
            std::vector<Structure> mapped;
            for (auto & s : census(n, c.spec, max_only))
                mapped.push_back(complement(s));
            CHECK(sorted(mapped) == census(n, d, min_only));
        }
    }
}

TEST_CASE("census examples")
{
    CensusOptions iso_max;
    iso_max.what = CensusWhat::maximal;
    iso_max.up_to_iso = true;
    CHECK(census(3, poset_spec(), iso_max).size() == 1);

    ClassSpec ramsey = graph_spec();
    ramsey.local_bounds[3] = { LocalBound{ 2, 4 } };
    CHECK(census(6, ramsey).empty());
    auto five = census(5, ramsey);
    CHECK(std::find(five.begin(), five.end(), gallery::cycle(5)) != five.end());
    CHECK(five.size() == 12);

    ClassSpec plain;
    CensusOptions tiny;
    tiny.budget = 1000;
    CHECK_THROWS_AS(census(4, plain, tiny), BudgetExceeded);
}

TEST_CASE("census agrees with brute force")
{
    for (auto & c : cases()) {
        INFO(c.name);
        for (int n = 1 ; n <= c.largest ; ++n) {
            std::vector<Structure> members, maximal, minimal;
            for (auto & s : all_structures(Signature::binary(), n))
                if (c.holds(s))
                    members.push_back(s);
            std::set<Structure> member_set(members.begin(), members.end());
            for (auto & s : members) {
                bool is_max = true, is_min = true;
                for (auto & t : members) {
                    if (t == s)
                        continue;
                    if (brute_subset(s, t))
                        is_max = false;
                    if (brute_subset(t, s))
                        is_min = false;
                }
                if (is_max)
                    maximal.push_back(s);
                if (is_min)
                    minimal.push_back(s);
            }

            for (auto [what, expected] : { std::pair{ CensusWhat::all, members },
                    std::pair{ CensusWhat::maximal, maximal }, std::pair{ CensusWhat::minimal, minimal } }) {
                CensusOptions options;
                options.what = what;
                CHECK(census(n, c.spec, options) == sorted(expected));
                options.workers = 3;
                CHECK(census(n, c.spec, options) == sorted(expected));

                options.up_to_iso = true;
                auto iso = census(n, c.spec, options);
                auto canon = brute_canonical_set(expected);
                CHECK(iso == std::vector<Structure>(canon.begin(), canon.end()));
            }
        }
    }
}

TEST_CASE("chains")
{
    auto poset = poset_spec();
    std::vector<Structure> orders{ make_binary(3, { { 0, 1 } }), make_binary(3, { { 0, 1 }, { 0, 2 } }), linear3() };
    CHECK(chain_union_test(orders, poset));
    CHECK(chain_union_test(orders, poset, ChainOperation::intersection));

    auto connected = graph_spec();
    connected.builtins.push_back(Builtin::connected);
    std::vector<Structure> graphs{ gallery::path(4), gallery::cycle(4), gallery::complete(4) };
    CHECK(chain_union_test(graphs, connected));

    // nested connected graphs G_k: a path on 0..5 with 6 joined to k..5
    std::vector<Structure> nested;
    for (int k = 0 ; k <= 5 ; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i < 5 ; ++i)
            edges.emplace_back(i, i + 1);
        for (int j = k ; j <= 5 ; ++j)
            edges.emplace_back(6, j);
        nested.push_back(make_graph(7, edges));
    }
    // a finite chain meets in its least member, so this stays connected; only the infinite chain disconnects
    CHECK(chain_union_test(nested, connected, ChainOperation::intersection));

    std::vector<Structure> not_chain{ make_binary(3, { { 0, 1 } }), make_binary(3, { { 1, 2 } }) };
    CHECK_THROWS_AS(chain_union_test(not_chain, poset), PreconditionError);
    std::vector<Structure> with_outsider{ make_binary(3, { { 0, 1 } }), make_binary(3, { { 0, 1 }, { 1, 2 } }) };
    CHECK_THROWS_AS(chain_union_test(with_outsider, poset), PreconditionError);
}

TEST_CASE("class specification files round-trip")
{
    for (auto & c : cases()) {
        auto text = canonical_text(spec_to_json(c.spec));
        CHECK(spec_from_json(Json::parse(text)) == c.spec);
    }
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"builtins": ["acyclic"]})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"axioms": ["A v0 . R0(v0"]})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"local_bounds": {"x": [[0, 1]]}})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"extra": 1})")), FormatError);
}
