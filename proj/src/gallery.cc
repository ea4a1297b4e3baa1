/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/gallery.hh>
#include <revex/extremal.hh>

#include <algorithm>
#include <functional>
#include <random>
#include <string>

using namespace revex;
using namespace revex::gallery;

namespace
{
    auto require_graph(const Structure & g, const char * what) -> void
    {
        if (! is_graph(g))
            throw PreconditionError(std::string(what) + ": input is not a graph");
    }

    auto adjacent(const Structure & g, int x, int y) -> bool
    {
        return g.contains(0, { x, y });
    }

    /// Is there a clique of the given size among candidates (in increasing order)?
    auto clique_in(const Structure & g, const std::vector<int> & candidates, int size) -> bool
    {
        if (size <= 0)
            return true;
        if (int(candidates.size()) < size)
            return false;
        for (std::size_t i = 0 ; i < candidates.size() ; ++i) {
            std::vector<int> rest;
            for (std::size_t j = i + 1 ; j < candidates.size() ; ++j)
                if (adjacent(g, candidates[i], candidates[j]))
                    rest.push_back(candidates[j]);
            if (clique_in(g, rest, size - 1))
                return true;
        }
        return false;
    }

    auto common_neighbours(const Structure & g, const std::vector<int> & of) -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0 ; v < g.domain() ; ++v)
            if (std::all_of(of.begin(), of.end(), [&] (int x) { return x != v && adjacent(g, x, v); }))
                result.push_back(v);
        return result;
    }

    /// The criterion itself, also meaningful for n = 2.
    auto maximal_knfree_criterion(const Structure & g, int n) -> bool
    {
        int size = g.domain();
        if (size < n) {
            for (int x = 0 ; x < size ; ++x)
                for (int y = x + 1 ; y < size ; ++y)
                    if (! adjacent(g, x, y))
                        return false;
            return true;
        }
        for (int x = 0 ; x < size ; ++x)
            for (int y = x + 1 ; y < size ; ++y)
                if (! adjacent(g, x, y) && ! clique_in(g, common_neighbours(g, { x, y }), n - 2))
                    return false;
        return true;
    }

    auto require_knfree(const Structure & g, int n, const char * what) -> void
    {
        require_graph(g, what);
        if (n < 3)
            throw PreconditionError(std::string(what) + ": n must be at least 3");
        if (has_clique(g, n))
            throw PreconditionError(std::string(what) + ": graph contains K_" + std::to_string(n));
    }

    auto for_each_subset(int n, int m, const std::function<bool (const std::vector<int> &)> & f) -> bool
    {
        if (m > n || m < 0)
            return true;
        std::vector<int> subset(m);
        for (int i = 0 ; i < m ; ++i)
            subset[i] = i;
        while (true) {
            if (! f(subset))
                return false;
            int i = m - 1;
            while (i >= 0 && subset[i] == n - m + i)
                --i;
            if (i < 0)
                return true;
            ++subset[i];
            for (int j = i + 1 ; j < m ; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }

    auto for_each_tuple(const std::vector<int> & of, int arity, const std::function<void (const std::vector<int> &)> & f) -> void
    {
        int m = int(of.size());
        if (m == 0)
            return;
        std::vector<int> index(arity, 0), tuple(arity);
        while (true) {
            for (int j = 0 ; j < arity ; ++j)
                tuple[j] = of[index[j]];
            f(tuple);
            int j = arity - 1;
            while (j >= 0 && ++index[j] == m)
                index[j--] = 0;
            if (j < 0)
                return;
        }
    }

    auto single_relation(const Structure & s, const char * what) -> int
    {
        if (s.signature().size() != 1)
            throw PreconditionError(std::string(what) + ": needs a single relation symbol");
        return s.signature().arity(0);
    }

    /// For each tuple in (out of) rho, some m-set K sees only that tuple (only that non-tuple) in K^arity.
    auto witness_criterion(const Structure & s, int m, bool present) -> bool
    {
        int arity = s.signature().arity(0);
        for (std::uint64_t code = 0 ; code < s.space(0) ; ++code) {
            if (s.contains_code(0, code) != present)
                continue;
            auto tuple = s.decode(0, code);
            bool found = ! for_each_subset(s.domain(), m, [&] (const std::vector<int> & K) {
                    for (auto x : tuple)
                        if (! std::binary_search(K.begin(), K.end(), x))
                            return true;
                    bool only = true;
                    for_each_tuple(K, arity, [&] (const std::vector<int> & t) {
                            if (only && s.contains(0, t) == present && t != tuple)
                                only = false;
                            });
                    return ! only;
                    });
            if (! found)
                return false;
        }
        return true;
    }

    /// Does some m-set K have K^arity entirely outside rho (present = false) or inside it?
    auto has_uniform_set(const Structure & s, int m, bool present) -> bool
    {
        int arity = s.signature().arity(0);
        return ! for_each_subset(s.domain(), m, [&] (const std::vector<int> & K) {
                bool uniform = true;
                for_each_tuple(K, arity, [&] (const std::vector<int> & t) {
                        if (uniform && s.contains(0, t) != present)
                            uniform = false;
                        });
                return ! uniform;
                });
    }
}

auto revex::gallery::cycle(int n) -> Structure
{
    if (n < 3)
        throw PreconditionError("cycles need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0 ; i < n ; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

auto revex::gallery::path(int n) -> Structure
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0 ; i + 1 < n ; ++i)
        edges.emplace_back(i, i + 1);
    return make_graph(n, edges);
}

auto revex::gallery::complete(int n) -> Structure
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            edges.emplace_back(i, j);
    return make_graph(n, edges);
}

auto revex::gallery::empty(int n) -> Structure
{
    return Structure(Signature::binary(), n);
}

auto revex::gallery::blowup(const Structure & g, const std::vector<int> & sizes) -> Structure
{
    if (int(sizes.size()) != g.domain())
        throw MismatchError("blowup needs one cloud size per vertex");
    std::vector<int> owner;
    for (int x = 0 ; x < g.domain() ; ++x) {
        if (sizes[x] < 1)
            throw PreconditionError("cloud sizes must be positive");
        for (int i = 0 ; i < sizes[x] ; ++i)
            owner.push_back(x);
    }
    return inverse_image(DomainMap(g.domain(), owner), g);
}

auto revex::gallery::multipartite(const std::vector<int> & sizes) -> Structure
{
    if (sizes.empty())
        throw PreconditionError("multipartite graphs need at least one part");
    return blowup(complete(int(sizes.size())), sizes);
}

auto revex::gallery::tournament(int n, std::optional<std::uint64_t> seed) -> Structure
{
    Structure result(Signature::binary(), n);
    std::mt19937_64 rng(seed.value_or(0));
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j) {
            bool forward = seed ? (rng() & 1) == 0 : true;
            if (forward)
                result.insert(0, { i, j });
            else
                result.insert(0, { j, i });
        }
    return result;
}

auto revex::gallery::has_clique(const Structure & g, int size) -> bool
{
    std::vector<int> all(g.domain());
    for (int i = 0 ; i < g.domain() ; ++i)
        all[i] = i;
    return clique_in(g, all, size);
}

auto revex::gallery::is_maximal_knfree(const Structure & g, int n) -> bool
{
    require_knfree(g, n, "is_maximal_knfree");
    return maximal_knfree_criterion(g, n);
}

auto revex::gallery::every_vertex_in_kn1(const Structure & g, int n) -> bool
{
    require_knfree(g, n, "every_vertex_in_kn1");
    if (g.domain() < n - 1)
        throw PreconditionError("every_vertex_in_kn1: needs at least n - 1 vertices");
    if (! maximal_knfree_criterion(g, n))
        throw PreconditionError("every_vertex_in_kn1: graph is not maximal K_n-free");
    for (int x = 0 ; x < g.domain() ; ++x)
        if (! clique_in(g, common_neighbours(g, { x }), n - 2))
            return false;
    return true;
}

auto revex::gallery::blowup_preserves_maximality(const Structure & g, const std::vector<int> & sizes, int n) -> std::optional<bool>
{
    auto result = blowup(g, sizes);
    if (g.domain() < n - 1)
        return std::nullopt;
    require_knfree(result, n, "blowup_preserves_maximality");
    return maximal_knfree_criterion(result, n);
}

auto revex::gallery::knfree_duality(const Structure & g, int n) -> DualityReport
{
    require_graph(g, "knfree_duality");
    if (n < 3)
        throw PreconditionError("knfree_duality: n must be at least 3");

    DualityReport report{ false, false };
    report.maximal_knfree = ! has_clique(g, n) && maximal_knfree_criterion(g, n);

    ClassSpec spec;
    spec.builtins = { Builtin::irreflexive, Builtin::symmetric };
    spec.forbidden = { empty(n) };
    auto co = graph_complement(g);
    if (member(co, spec))
        report.complement_minimal_enfree = is_minimal(co, spec, SearchMode::exact).certified();
    return report;
}

auto revex::gallery::min_omit_empty_check(const Structure & s, int m) -> bool
{
    single_relation(s, "min_omit_empty_check");
    if (m < 1)
        throw PreconditionError("min_omit_empty_check: m must be positive");
    if (has_uniform_set(s, m, false))
        throw PreconditionError("min_omit_empty_check: structure contains an empty " + std::to_string(m) + "-set");
    return witness_criterion(s, m, true);
}

auto revex::gallery::max_omit_full_check(const Structure & s, int m) -> bool
{
    single_relation(s, "max_omit_full_check");
    if (m < 1)
        throw PreconditionError("max_omit_full_check: m must be positive");
    if (has_uniform_set(s, m, true))
        throw PreconditionError("max_omit_full_check: structure contains a full " + std::to_string(m) + "-set");
    return witness_criterion(s, m, false);
}

auto revex::gallery::decompose_min_binary(const Structure & s, int m) -> MinBinaryDecomposition
{
    if (! (s.signature() == Signature::binary()))
        throw PreconditionError("decompose_min_binary: needs a single binary relation");
    int n = s.domain();
    if (m < 2 || n < m)
        throw PreconditionError("decompose_min_binary: needs |X| >= m >= 2");
    if (! min_omit_empty_check(s, m))
        throw PreconditionError("decompose_min_binary: structure is not minimal");

    MinBinaryDecomposition d{ { }, { }, Structure(s.signature(), n), Structure(s.signature(), 1), Structure(s.signature(), n) };
    for (int x = 0 ; x < n ; ++x)
        (s.contains(0, { x, x }) ? d.loops : d.rest).push_back(x);

    auto fail = [] (const std::string & why) {
        throw Error("decompose_min_binary: characterization violated: " + why);
    };

    if (int(d.rest.size()) < m - 1)
        fail("fewer than m - 1 loop-free points");

    for (auto r : d.loops)
        for (int y = 0 ; y < n ; ++y)
            if (y != r && (s.contains(0, { r, y }) || s.contains(0, { y, r })))
                fail("a loop vertex has a non-loop arc");

    for (auto x : d.rest)
        for (auto y : d.rest)
            if (s.contains(0, { x, y })) {
                if (s.contains(0, { y, x }))
                    fail("the loop-free part is not antisymmetric");
                d.orientation.insert(0, { x, y });
            }

    int size = int(d.rest.size());
    d.sparse_graph = Structure(s.signature(), size);
    for (int i = 0 ; i < size ; ++i)
        for (int j = 0 ; j < size ; ++j)
            if (i != j && ! s.contains(0, { d.rest[i], d.rest[j] }) && ! s.contains(0, { d.rest[j], d.rest[i] }))
                d.sparse_graph.insert(0, { i, j });

    if (has_clique(d.sparse_graph, m) || ! maximal_knfree_criterion(d.sparse_graph, m))
        fail("the complement of the symmetrised part is not maximal K_m-free");

    d.reconstruction = d.orientation;
    for (auto r : d.loops)
        d.reconstruction.insert(0, { r, r });
    if (d.reconstruction != s)
        fail("reconstruction differs from the input");
    return d;
}

auto revex::gallery::henson_defects(const Structure & g, int n, int cap) -> std::vector<HensonDefect>
{
    require_knfree(g, n, "henson_defects");
    if (cap < 0)
        throw PreconditionError("henson_defects: cap must be non-negative");

    std::vector<HensonDefect> result;
    int size = g.domain();
    for (int h = 0 ; h <= std::min(cap, size) ; ++h)
        for_each_subset(size, h, [&] (const std::vector<int> & H) {
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << h) ; ++mask) {
                std::vector<int> K;
                for (int i = 0 ; i < h ; ++i)
                    if ((mask >> i) & 1)
                        K.push_back(H[i]);
                if (clique_in(g, K, n - 1))
                    continue;

                bool witnessed = false;
                for (int v = 0 ; v < size && ! witnessed ; ++v) {
                    if (std::binary_search(H.begin(), H.end(), v))
                        continue;
                    bool ok = true;
                    for (auto x : H)
                        if (adjacent(g, x, v) != std::binary_search(K.begin(), K.end(), x)) {
                            ok = false;
                            break;
                        }
                    witnessed = ok;
                }
                if (! witnessed)
                    result.push_back(HensonDefect{ H, K });
            }
            return true;
        });
    return result;
}

auto revex::gallery::classify_max_deg2(const Structure & g) -> Deg2Classification
{
    require_graph(g, "classify_max_deg2");
    int n = g.domain();
    std::vector<int> degree(n, 0);
    for (int x = 0 ; x < n ; ++x)
        for (int y = 0 ; y < n ; ++y)
            degree[x] += adjacent(g, x, y);
    if (*std::max_element(degree.begin(), degree.end()) > 2)
        throw PreconditionError("classify_max_deg2: a vertex has degree above 2");

    for (int x = 0 ; x < n ; ++x)
        for (int y = x + 1 ; y < n ; ++y)
            if (degree[x] < 2 && degree[y] < 2 && ! adjacent(g, x, y))
                return Deg2Classification{ false, std::nullopt };

    // Maximal: components are cycles plus at most one path, which has at most two vertices.
    Deg2Decomposition d{ { }, Deg2Tail::none };
    std::vector<bool> seen(n, false);
    for (int start = 0 ; start < n ; ++start) {
        if (seen[start])
            continue;
        std::vector<int> stack{ start }, component;
        seen[start] = true;
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            component.push_back(x);
            for (int y = 0 ; y < n ; ++y)
                if (! seen[y] && adjacent(g, x, y)) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        bool is_cycle = std::all_of(component.begin(), component.end(), [&] (int x) { return degree[x] == 2; });
        if (is_cycle)
            d.cycles.push_back(int(component.size()));
        else if (component.size() == 1)
            d.tail = Deg2Tail::k1;
        else
            d.tail = Deg2Tail::k2;
    }
    std::sort(d.cycles.begin(), d.cycles.end());
    return Deg2Classification{ true, d };
}

auto revex::gallery::is_connected_graph(const Structure & g) -> bool
{
    require_graph(g, "is_connected_graph");
    int n = g.domain();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{ 0 };
    seen[0] = true;
    int reached = 1;
    while (! stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0 ; y < n ; ++y)
            if (! seen[y] && adjacent(g, x, y)) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == n;
}

auto revex::gallery::spanning_tree(const Structure & g) -> Structure
{
    if (! is_connected_graph(g))
        throw PreconditionError("spanning_tree: graph is not connected");
    int n = g.domain();
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> seen(n, false);
    std::vector<int> queue{ 0 };
    seen[0] = true;
    for (std::size_t head = 0 ; head < queue.size() ; ++head) {
        int x = queue[head];
        for (int y = 0 ; y < n ; ++y)
            if (! seen[y] && adjacent(g, x, y)) {
                seen[y] = true;
                edges.emplace_back(x, y);
                queue.push_back(y);
            }
    }
    return make_graph(n, edges);
}

auto revex::gallery::is_minimal_connected(const Structure & g) -> bool
{
    if (! is_connected_graph(g))
        throw PreconditionError("is_minimal_connected: graph is not connected");
    return g.relation_size(0) == 2 * std::size_t(g.domain() - 1);
}

auto revex::gallery::local_bounds_member(const Structure & g, const std::vector<int> & sizes, int k, int l) -> bool
{
    if (k < 0 || k > l)
        throw PreconditionError("local_bounds_member: bounds must satisfy 0 <= k <= l");
    for (auto m : sizes) {
        if (m < 1)
            throw PreconditionError("local_bounds_member: subset sizes must be positive");
        for (int i = 0 ; i < g.signature().size() ; ++i) {
            bool ok = for_each_subset(g.domain(), m, [&] (const std::vector<int> & K) {
                    int count = 0;
                    for_each_tuple(K, g.signature().arity(i), [&] (const std::vector<int> & t) {
                            count += g.contains(i, t);
                            });
                    return k <= count && count <= l;
                    });
            if (! ok)
                return false;
        }
    }
    return true;
}
