/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <sys/wait.h>

using namespace revex;
using namespace revex::testing;

namespace
{
    auto all_tuples(int n, int arity) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        std::vector<int> t(arity, 0);
        while (true) {
            result.push_back(t);
            int j = arity - 1;
            while (j >= 0 && ++t[j] == n)
                t[j--] = 0;
            if (j < 0)
                return result;
        }
    }

    auto random_variable(Rng & rng, const FormulaOptions & o) -> int
    {
        return uniform(rng, 0, o.variables - 1);
    }

    auto random_atom(Rng & rng, const FormulaOptions & o) -> Formula
    {
        if (o.equality && uniform(rng, 0, 3) == 0)
            return Formula::equals(random_variable(rng, o), random_variable(rng, o));
        int symbol = uniform(rng, 0, o.signature.size() - 1);
        std::vector<int> args;
        for (int i = 0 ; i < o.signature.arity(symbol) ; ++i)
            args.push_back(random_variable(rng, o));
        return Formula::relation(symbol, args);
    }

    auto random_formula_at(Rng & rng, const FormulaOptions & o, int depth) -> Formula
    {
        if (depth == 0)
            return random_atom(rng, o);

        while (true) {
            switch (uniform(rng, 0, 7)) {
                case 0:
                    return random_atom(rng, o);
                case 1:
                    if (! o.negation)
                        continue;
                    return Formula::negation(random_formula_at(rng, o, depth - 1));
                case 2:
                case 3: {
                    std::vector<Formula> parts;
                    int count = uniform(rng, 2, 3);
                    for (int i = 0 ; i < count ; ++i)
                        parts.push_back(random_formula_at(rng, o, depth - 1));
                    return uniform(rng, 0, 1) ? Formula::conjunction(parts) : Formula::disjunction(parts);
                }
                case 4:
                case 5:
                    return Formula::forall(random_variable(rng, o), random_formula_at(rng, o, depth - 1));
                case 6:
                    return Formula::exists(random_variable(rng, o), random_formula_at(rng, o, depth - 1));
                case 7: {
                    if (! o.at_most)
                        continue;
                    std::vector<int> block{ random_variable(rng, o) };
                    if (o.variables > 1 && uniform(rng, 0, 1)) {
                        int w = random_variable(rng, o);
                        if (w != block[0])
                            block.push_back(w);
                    }
                    return Formula::at_most(uniform(rng, 0, 2), block, random_formula_at(rng, o, depth - 1));
                }
            }
        }
    }
}

auto revex::testing::uniform(Rng & rng, int low, int high) -> int
{
    return std::uniform_int_distribution<int>(low, high)(rng);
}

auto revex::testing::random_structure(Rng & rng, const Signature & signature, int n, double density) -> Structure
{
    Structure s(signature, n);
    std::bernoulli_distribution coin(density);
    for (int i = 0 ; i < signature.size() ; ++i)
        for (auto & t : all_tuples(n, signature.arity(i)))
            if (coin(rng))
                s.insert(i, t);
    return s;
}

auto revex::testing::random_graph(Rng & rng, int n, double density) -> Structure
{
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return make_graph(n, edges);
}

auto revex::testing::random_permutation(Rng & rng, int n) -> DomainMap
{
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 0);
    std::shuffle(values.begin(), values.end(), rng);
    return DomainMap(n, values);
}

auto revex::testing::random_map(Rng & rng, int from, int to) -> DomainMap
{
    std::vector<int> values(from);
    for (auto & v : values)
        v = uniform(rng, 0, to - 1);
    return DomainMap(to, values);
}

auto revex::testing::random_partial_order(Rng & rng, int n, double density) -> Structure
{
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            less[i][j] = coin(rng);
    for (int k = 0 ; k < n ; ++k)
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < n ; ++j)
                if (less[i][k] && less[k][j])
                    less[i][j] = true;
    Structure s(Signature::binary(), n);
    for (int i = 0 ; i < n ; ++i)
        for (int j = 0 ; j < n ; ++j)
            if (less[i][j])
                s.insert(0, { label[i], label[j] });
    return s;
}

auto revex::testing::random_valuation(Rng & rng, int n, int variables) -> Valuation
{
    Valuation v(variables);
    for (auto & x : v)
        x = uniform(rng, 0, n - 1);
    return v;
}

auto revex::testing::random_formula(Rng & rng, const FormulaOptions & options) -> Formula
{
    return random_formula_at(rng, options, uniform(rng, 0, options.depth));
}

auto revex::testing::random_sentence(Rng & rng, const FormulaOptions & options) -> Formula
{
    while (true) {
        auto f = random_formula(rng, options);
        if (is_sentence(f))
            return f;
    }
}

auto revex::testing::all_structures(const Signature & signature, int n) -> std::vector<Structure>
{
    std::vector<std::pair<int, std::vector<int>>> slots;
    for (int i = 0 ; i < signature.size() ; ++i)
        for (auto & t : all_tuples(n, signature.arity(i)))
            slots.emplace_back(i, t);
    if (slots.size() > 20)
        throw std::logic_error("all_structures: too many interpretations");

    std::vector<Structure> result;
    for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << slots.size()) ; ++mask) {
        Structure s(signature, n);
        for (std::size_t b = 0 ; b < slots.size() ; ++b)
            if ((mask >> b) & 1)
                s.insert(slots[b].first, slots[b].second);
        result.push_back(std::move(s));
    }
    return result;
}

auto revex::testing::all_graphs(int n) -> std::vector<Structure>
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            pairs.emplace_back(i, j);
    std::vector<Structure> result;
    for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << pairs.size()) ; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0 ; b < pairs.size() ; ++b)
            if ((mask >> b) & 1)
                edges.push_back(pairs[b]);
        result.push_back(make_graph(n, edges));
    }
    return result;
}

auto revex::testing::permuted(const Structure & s, const std::vector<int> & perm) -> Structure
{
    Structure result(s.signature(), s.domain());
    for (int i = 0 ; i < s.signature().size() ; ++i)
        for (auto t : s.tuples(i)) {
            for (auto & x : t)
                x = perm[x];
            result.insert(i, t);
        }
    return result;
}

auto revex::testing::brute_orbit(const Structure & s) -> std::set<Structure>
{
    std::vector<int> perm(s.domain());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Structure> orbit;
    do
        orbit.insert(permuted(s, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return orbit;
}

auto revex::testing::brute_isomorphic(const Structure & a, const Structure & b) -> bool
{
    if (a.domain() != b.domain() || ! (a.signature() == b.signature()))
        return false;
    return brute_orbit(a).contains(b);
}

auto revex::testing::brute_subset(const Structure & a, const Structure & b) -> bool
{
    for (int i = 0 ; i < a.signature().size() ; ++i)
        for (auto & t : a.tuples(i))
            if (! b.contains(i, t))
                return false;
    return true;
}

auto revex::testing::brute_extreme(const Structure & s, const Predicate & p, bool maximal) -> bool
{
    for (auto & t : all_structures(s.signature(), s.domain())) {
        if (t == s)
            continue;
        bool comparable = maximal ? brute_subset(s, t) : brute_subset(t, s);
        if (comparable && p(t))
            return false;
    }
    return true;
}

auto revex::testing::brute_irreflexive(const Structure & s) -> bool
{
    for (int x = 0 ; x < s.domain() ; ++x)
        if (s.contains(0, { x, x }))
            return false;
    return true;
}

auto revex::testing::brute_reflexive(const Structure & s) -> bool
{
    for (int x = 0 ; x < s.domain() ; ++x)
        if (! s.contains(0, { x, x }))
            return false;
    return true;
}

auto revex::testing::brute_symmetric(const Structure & s) -> bool
{
    for (int x = 0 ; x < s.domain() ; ++x)
        for (int y = 0 ; y < s.domain() ; ++y)
            if (s.contains(0, { x, y }) != s.contains(0, { y, x }))
                return false;
    return true;
}

auto revex::testing::brute_transitive(const Structure & s) -> bool
{
    int n = s.domain();
    for (int x = 0 ; x < n ; ++x)
        for (int y = 0 ; y < n ; ++y)
            for (int z = 0 ; z < n ; ++z)
                if (s.contains(0, { x, y }) && s.contains(0, { y, z }) && ! s.contains(0, { x, z }))
                    return false;
    return true;
}

auto revex::testing::brute_graph(const Structure & s) -> bool
{
    return brute_irreflexive(s) && brute_symmetric(s);
}

auto revex::testing::brute_strict_order(const Structure & s) -> bool
{
    return brute_irreflexive(s) && brute_transitive(s);
}

auto revex::testing::brute_strict_linear_order(const Structure & s) -> bool
{
    if (! brute_strict_order(s))
        return false;
    for (int x = 0 ; x < s.domain() ; ++x)
        for (int y = x + 1 ; y < s.domain() ; ++y)
            if (! s.contains(0, { x, y }) && ! s.contains(0, { y, x }))
                return false;
    return true;
}

namespace
{
    auto uniform_subset(const Structure & g, int k, bool edges) -> bool
    {
        int n = g.domain();
        if (k > n)
            return false;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<int> chosen;
            for (int i = 0 ; i < n ; ++i)
                if (pick[i])
                    chosen.push_back(i);
            bool ok = true;
            for (std::size_t a = 0 ; a < chosen.size() && ok ; ++a)
                for (std::size_t b = a + 1 ; b < chosen.size() && ok ; ++b)
                    ok = g.contains(0, { chosen[a], chosen[b] }) == edges;
            if (ok)
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    }
}

auto revex::testing::brute_has_clique(const Structure & g, int k) -> bool
{
    return uniform_subset(g, k, true);
}

auto revex::testing::brute_has_independent(const Structure & g, int k) -> bool
{
    return uniform_subset(g, k, false);
}

auto revex::testing::brute_max_degree(const Structure & g) -> int
{
    int best = 0;
    for (int x = 0 ; x < g.domain() ; ++x) {
        int d = 0;
        for (int y = 0 ; y < g.domain() ; ++y)
            d += g.contains(0, { x, y });
        best = std::max(best, d);
    }
    return best;
}

auto revex::testing::brute_connected(const Structure & g) -> bool
{
    int n = g.domain();
    std::vector<int> component(n);
    std::iota(component.begin(), component.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y)
                if ((g.contains(0, { x, y }) || g.contains(0, { y, x })) && component[x] != component[y]) {
                    int low = std::min(component[x], component[y]);
                    component[x] = component[y] = low;
                    changed = true;
                }
    }
    return std::all_of(component.begin(), component.end(), [] (int c) { return c == 0; });
}

auto revex::testing::brute_edge_count(const Structure & g) -> int
{
    int count = 0;
    for (int x = 0 ; x < g.domain() ; ++x)
        for (int y = x + 1 ; y < g.domain() ; ++y)
            count += g.contains(0, { x, y });
    return count;
}

auto revex::testing::brute_canonical_set(const std::vector<Structure> & family) -> std::set<Structure>
{
    std::set<Structure> result;
    for (auto & s : family)
        result.insert(*brute_orbit(s).begin());
    return result;
}

auto revex::testing::graph_spec() -> ClassSpec
{
    ClassSpec spec;
    spec.builtins = { Builtin::irreflexive, Builtin::symmetric };
    return spec;
}

auto revex::testing::triangle_free_spec() -> ClassSpec
{
    auto spec = graph_spec();
    spec.forbidden = { make_graph(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } }) };
    return spec;
}

auto revex::testing::poset_spec() -> ClassSpec
{
    ClassSpec spec;
    spec.builtins = { Builtin::irreflexive, Builtin::transitive };
    return spec;
}

auto revex::testing::run_command(const std::string & command) -> CommandResult
{
    FILE * pipe = ::popen(command.c_str(), "r");
    if (! pipe)
        throw std::runtime_error("cannot run '" + command + "'");

    CommandResult result{ -1, "" };
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);

    int raw = ::pclose(pipe);
    if (raw != -1 && WIFEXITED(raw))
        result.status = WEXITSTATUS(raw);
    return result;
}
