/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/morphism.hh>

#include <algorithm>
#include <thread>
#include <unordered_set>

using namespace revex;

namespace
{
    struct TupleCheck
    {
        int symbol;
        Tuple tuple;
        bool present;
    };

    auto incidence_counts(const Structure & s, bool complemented) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result(s.domain(), std::vector<int>(s.signature().size(), 0));
        std::vector<int> t(s.signature().max_arity());
        std::vector<bool> seen(s.domain());
        for (int k = 0 ; k < s.signature().size() ; ++k) {
            std::span<int> tuple(t.data(), s.signature().arity(k));
            for (std::uint64_t code = 0 ; code < s.space(k) ; ++code) {
                if (s.contains_code(k, code) == complemented)
                    continue;
                s.decode(k, code, tuple);
                std::fill(seen.begin(), seen.end(), false);
                for (auto x : tuple)
                    if (! seen[x]) {
                        seen[x] = true;
                        ++result[x][k];
                    }
            }
        }
        return result;
    }

    class Searcher
    {
        private:
            MorphismKind _kind;
            const Structure & _a;
            const Structure & _b;
            bool _injective, _strong;
            std::size_t _limit;

            std::vector<std::vector<TupleCheck>> _checks;
            std::vector<std::vector<int>> _inc_a, _inc_b, _comp_a, _comp_b;

            auto compatible(int x, int y) const -> bool
            {
                for (int k = 0 ; k < _a.signature().size() ; ++k) {
                    switch (_kind) {
                        case MorphismKind::homomorphism:
                            return true;
                        case MorphismKind::isomorphism:
                            if (_inc_a[x][k] != _inc_b[y][k])
                                return false;
                            break;
                        case MorphismKind::condensation:
                            if (_inc_a[x][k] > _inc_b[y][k])
                                return false;
                            break;
                        case MorphismKind::embedding:
                            if (_inc_a[x][k] > _inc_b[y][k] || _comp_a[x][k] > _comp_b[y][k])
                                return false;
                            break;
                    }
                }
                return true;
            }

            auto consistent(int v, const std::vector<int> & f) const -> bool
            {
                std::uint64_t nb = _b.domain();
                for (auto & c : _checks[v]) {
                    std::uint64_t code = 0;
                    for (auto x : c.tuple)
                        code = code * nb + std::uint64_t(f[x]);
                    if (_b.contains_code(c.symbol, code) != c.present)
                        if (c.present || _strong)
                            return false;
                }
                return true;
            }

            auto extend(int v, std::vector<int> & f, std::vector<bool> & used, std::vector<DomainMap> & out) const -> void
            {
                if (out.size() >= _limit)
                    return;
                if (v == _a.domain()) {
                    out.emplace_back(_b.domain(), f);
                    return;
                }
                for (int y = 0 ; y < _b.domain() && out.size() < _limit ; ++y)
                    try_value(v, y, f, used, out);
            }

        public:
            Searcher(MorphismKind kind, const Structure & a, const Structure & b, std::size_t limit) :
                _kind(kind),
                _a(a),
                _b(b),
                _injective(kind != MorphismKind::homomorphism),
                _strong(kind == MorphismKind::embedding || kind == MorphismKind::isomorphism),
                _limit(limit),
                _checks(a.domain())
            {
                std::vector<int> t(a.signature().max_arity());
                for (int k = 0 ; k < a.signature().size() ; ++k) {
                    std::span<int> tuple(t.data(), a.signature().arity(k));
                    for (std::uint64_t code = 0 ; code < a.space(k) ; ++code) {
                        bool present = a.contains_code(k, code);
                        if (! present && ! _strong)
                            continue;
                        a.decode(k, code, tuple);
                        int top = *std::max_element(tuple.begin(), tuple.end());
                        _checks[top].push_back(TupleCheck{ k, Tuple(tuple.begin(), tuple.end()), present });
                    }
                }

                if (_injective) {
                    _inc_a = incidence_counts(a, false);
                    _inc_b = incidence_counts(b, false);
                    if (kind == MorphismKind::embedding) {
                        _comp_a = incidence_counts(a, true);
                        _comp_b = incidence_counts(b, true);
                    }
                }
            }

            auto feasible() const -> bool
            {
                if (_injective && _a.domain() > _b.domain())
                    return false;
                for (int k = 0 ; k < _a.signature().size() ; ++k) {
                    if (_kind == MorphismKind::isomorphism && _a.relation_size(k) != _b.relation_size(k))
                        return false;
                    if (_kind == MorphismKind::condensation && _a.relation_size(k) > _b.relation_size(k))
                        return false;
                }
                return true;
            }

            auto try_value(int v, int y, std::vector<int> & f, std::vector<bool> & used, std::vector<DomainMap> & out) const -> void
            {
                if (_injective && (used[y] || ! compatible(v, y)))
                    return;
                f[v] = y;
                if (consistent(v, f)) {
                    if (_injective)
                        used[y] = true;
                    extend(v + 1, f, used, out);
                    if (_injective)
                        used[y] = false;
                }
            }

            auto run_root(int y) const -> std::vector<DomainMap>
            {
                std::vector<DomainMap> out;
                std::vector<int> f(_a.domain(), 0);
                std::vector<bool> used(_b.domain(), false);
                try_value(0, y, f, used, out);
                return out;
            }
    };

    auto check_shapes(MorphismKind kind, const Structure & a, const Structure & b) -> void
    {
        if (! (a.signature() == b.signature()))
            throw MismatchError("morphism between structures of different signatures");
        if ((kind == MorphismKind::condensation || kind == MorphismKind::isomorphism) && a.domain() != b.domain())
            throw MismatchError(to_string(kind) + " between domains of sizes " + std::to_string(a.domain())
                    + " and " + std::to_string(b.domain()));
    }
}

auto revex::to_string(MorphismKind kind) -> std::string
{
    switch (kind) {
        case MorphismKind::homomorphism: return "homomorphism";
        case MorphismKind::condensation: return "condensation";
        case MorphismKind::embedding:    return "embedding";
        case MorphismKind::isomorphism:  return "isomorphism";
    }
    return "?";
}

auto revex::is_morphism(MorphismKind kind, const DomainMap & f, const Structure & a, const Structure & b) -> bool
{
    check_shapes(kind, a, b);
    if (f.source_size() != a.domain() || f.target_size() != b.domain())
        throw MismatchError("map shape " + std::to_string(f.source_size()) + " -> " + std::to_string(f.target_size())
                + " does not fit structures on " + std::to_string(a.domain()) + " and " + std::to_string(b.domain())
                + " points");

    switch (kind) {
        case MorphismKind::homomorphism:
            return is_subinterpretation(direct_image(f, a), b);
        case MorphismKind::condensation:
            return f.is_bijective() && is_subinterpretation(direct_image(f, a), b);
        case MorphismKind::embedding:
            return f.is_injective() && inverse_image(f, b) == a;
        case MorphismKind::isomorphism:
            return f.is_bijective() && inverse_image(f, b) == a;
    }
    return false;
}

auto revex::enumerate_morphisms(MorphismKind kind, const Structure & a, const Structure & b,
        std::size_t limit, unsigned workers) -> std::vector<DomainMap>
{
    check_shapes(kind, a, b);
    std::vector<DomainMap> result;
    if (limit == 0)
        return result;

    Searcher searcher(kind, a, b, limit);
    if (! searcher.feasible())
        return result;

    int roots = b.domain();
    std::vector<std::vector<DomainMap>> per_root(roots);
    unsigned threads = std::max(1u, std::min<unsigned>(workers, unsigned(roots)));

    if (threads == 1) {
        for (int y = 0 ; y < roots && result.size() < limit ; ++y)
            for (auto & m : searcher.run_root(y))
                result.push_back(std::move(m));
    }
    else {
        std::vector<std::thread> pool;
        for (unsigned w = 0 ; w < threads ; ++w)
            pool.emplace_back([&, w] {
                for (int y = int(w) ; y < roots ; y += int(threads))
                    per_root[y] = searcher.run_root(y);
            });
        for (auto & t : pool)
            t.join();
        for (auto & maps : per_root)
            for (auto & m : maps)
                result.push_back(std::move(m));
    }

    if (result.size() > limit)
        result.erase(result.begin() + std::ptrdiff_t(limit), result.end());
    return result;
}

auto revex::find_morphism(MorphismKind kind, const Structure & a, const Structure & b) -> std::optional<DomainMap>
{
    auto maps = enumerate_morphisms(kind, a, b, 1);
    if (maps.empty())
        return std::nullopt;
    return maps.front();
}

auto revex::find_embedding(const Structure & pattern, const Structure & host) -> std::optional<DomainMap>
{
    if (! (pattern.signature() == host.signature()))
        throw MismatchError("find_embedding: signatures differ");
    if (pattern.domain() > host.domain())
        return std::nullopt;
    return find_morphism(MorphismKind::embedding, pattern, host);
}

auto revex::are_isomorphic(const Structure & a, const Structure & b) -> bool
{
    if (! (a.signature() == b.signature()) || a.domain() != b.domain())
        return false;
    return find_morphism(MorphismKind::isomorphism, a, b).has_value();
}

namespace
{
    auto require_cap(const Structure & s, int cap) -> void
    {
        if (s.domain() > cap)
            throw BudgetExceeded("orbit enumeration over Sym(" + std::to_string(s.domain())
                    + ") exceeds the cap of " + std::to_string(cap) + " points");
    }
}

auto revex::iso_class(const Structure & s, int cap) -> std::vector<Structure>
{
    require_cap(s, cap);
    std::vector<Structure> result;
    for_each_permutation(s.domain(), [&] (const DomainMap & f) {
        result.push_back(direct_image(f, s));
    });
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

auto revex::canonical_form(const Structure & s, int cap) -> Structure
{
    require_cap(s, cap);
    Structure best = s;
    for_each_permutation(s.domain(), [&] (const DomainMap & f) {
        auto image = direct_image(f, s);
        if (image < best)
            best = std::move(image);
    });
    return best;
}

auto revex::is_reversible(const Structure & s, int cap) -> bool
{
    require_cap(s, cap);
    bool result = true;
    for_each_permutation(s.domain(), [&] (const DomainMap & f) {
        if (! result)
            return;
        auto image = direct_image(f, s);
        if (image != s && is_subinterpretation(s, image))
            result = false;
    });
    return result;
}

auto revex::is_strongly_reversible(const Structure & s) -> bool
{
    // Adjacent transpositions generate Sym(n), so fixing each of them fixes the orbit.
    int n = s.domain();
    for (int i = 0 ; i + 1 < n ; ++i) {
        std::vector<int> values(n);
        for (int x = 0 ; x < n ; ++x)
            values[x] = x;
        std::swap(values[i], values[i + 1]);
        if (direct_image(DomainMap(n, values), s) != s)
            return false;
    }
    return true;
}

auto revex::is_weakly_reversible(const Structure & s, int cap) -> bool
{
    auto orbit = iso_class(s, cap);
    std::unordered_set<Structure, StructureHash> members(orbit.begin(), orbit.end());

    for (auto & low : orbit)
        for (auto & high : orbit) {
            if (low == high || ! is_subinterpretation(low, high))
                continue;

            std::vector<std::pair<int, std::uint64_t>> gap;
            for (int k = 0 ; k < s.signature().size() ; ++k) {
                Bitset diff = high.relation(k);
                diff.subtract(low.relation(k));
                diff.for_each([&] (std::size_t code) { gap.emplace_back(k, code); });
            }
            if (gap.size() > 24)
                throw BudgetExceeded("interval of 2^" + std::to_string(gap.size()) + " interpretations is too large to scan");

            for (std::uint64_t mask = 1 ; mask + 1 < (std::uint64_t{1} << gap.size()) ; ++mask) {
                Structure middle = low;
                for (std::size_t i = 0 ; i < gap.size() ; ++i)
                    if ((mask >> i) & 1)
                        middle.set_code(gap[i].first, gap[i].second);
                if (! members.contains(middle))
                    return false;
            }
        }
    return true;
}

auto revex::is_antichain(const std::vector<Structure> & family) -> bool
{
    for (std::size_t i = 0 ; i < family.size() ; ++i)
        for (std::size_t j = 0 ; j < family.size() ; ++j)
            if (i != j && family[i] != family[j] && is_subinterpretation(family[i], family[j]))
                return false;
    return true;
}
