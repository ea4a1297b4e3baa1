/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/structure.hh>

#include <algorithm>
#include <numeric>
#include <string>

using namespace revex;

namespace
{
    auto power_checked(int base, int exponent) -> std::uint64_t
    {
        std::uint64_t result = 1;
        for (int i = 0 ; i < exponent ; ++i) {
            result *= std::uint64_t(base);
            if (result > max_tuple_space)
                throw PreconditionError("relation over " + std::to_string(base) + "^" + std::to_string(exponent)
                        + " tuples exceeds the supported tuple space");
        }
        return result;
    }
}

Signature::Signature(std::vector<int> arities) :
    _arities(std::move(arities))
{
    if (_arities.empty())
        throw PreconditionError("a signature needs at least one relation symbol");
    for (auto a : _arities)
        if (a < 1)
            throw PreconditionError("relation arities must be positive");
}

auto Signature::binary() -> Signature
{
    return Signature{ { 2 } };
}

auto Signature::max_arity() const -> int
{
    return *std::max_element(_arities.begin(), _arities.end());
}

Structure::Structure(Signature signature, int domain) :
    _signature(std::move(signature)),
    _domain(domain)
{
    if (domain < 1)
        throw PreconditionError("domains must be non-empty");
    for (auto a : _signature.arities())
        _relations.emplace_back(power_checked(domain, a));
}

auto Structure::full(Signature signature, int domain) -> Structure
{
    Structure result(std::move(signature), domain);
    for (auto & r : result._relations)
        r = Bitset(r.size(), true);
    return result;
}

auto Structure::from_tuples(Signature signature, int domain, const std::vector<std::vector<Tuple>> & relations) -> Structure
{
    Structure result(std::move(signature), domain);
    if (int(relations.size()) != result._signature.size())
        throw MismatchError("expected " + std::to_string(result._signature.size()) + " relations, got "
                + std::to_string(relations.size()));

    for (int k = 0 ; k < result._signature.size() ; ++k) {
        for (auto & t : relations[k]) {
            if (int(t.size()) != result._signature.arity(k))
                throw MismatchError("tuple of length " + std::to_string(t.size()) + " in relation "
                        + std::to_string(k) + " of arity " + std::to_string(result._signature.arity(k)));
            for (auto x : t)
                if (x < 0 || x >= domain)
                    throw PreconditionError("tuple entry " + std::to_string(x) + " outside domain of size "
                            + std::to_string(domain));
            auto code = result.encode(k, t);
            if (result._relations[k].test(code))
                throw PreconditionError("duplicate tuple in relation " + std::to_string(k));
            result._relations[k].set(code);
        }
    }
    return result;
}

auto Structure::encode(int symbol, std::span<const int> tuple) const -> std::uint64_t
{
    std::uint64_t code = 0;
    for (auto x : tuple)
        code = code * std::uint64_t(_domain) + std::uint64_t(x);
    (void) symbol;
    return code;
}

auto Structure::decode(int symbol, std::uint64_t code, std::span<int> out) const -> void
{
    int arity = _signature.arity(symbol);
    for (int i = arity - 1 ; i >= 0 ; --i) {
        out[i] = int(code % std::uint64_t(_domain));
        code /= std::uint64_t(_domain);
    }
}

auto Structure::decode(int symbol, std::uint64_t code) const -> Tuple
{
    Tuple result(_signature.arity(symbol));
    decode(symbol, code, result);
    return result;
}

auto Structure::contains(int symbol, std::span<const int> tuple) const -> bool
{
    return _relations[symbol].test(encode(symbol, tuple));
}

namespace
{
    auto check_tuple(const Signature & signature, int domain, int symbol, std::span<const int> tuple) -> void
    {
        if (symbol < 0 || symbol >= signature.size())
            throw PreconditionError("relation symbol " + std::to_string(symbol) + " is not in the signature");
        if (int(tuple.size()) != signature.arity(symbol))
            throw PreconditionError("tuple of length " + std::to_string(tuple.size()) + " for a relation of arity "
                    + std::to_string(signature.arity(symbol)));
        for (auto x : tuple)
            if (x < 0 || x >= domain)
                throw PreconditionError("tuple entry " + std::to_string(x) + " outside the domain");
    }
}

auto Structure::insert(int symbol, std::span<const int> tuple) -> void
{
    check_tuple(_signature, _domain, symbol, tuple);
    _relations[symbol].set(encode(symbol, tuple));
}

auto Structure::erase(int symbol, std::span<const int> tuple) -> void
{
    check_tuple(_signature, _domain, symbol, tuple);
    _relations[symbol].reset(encode(symbol, tuple));
}

auto Structure::with_code(int symbol, std::uint64_t code) const -> Structure
{
    Structure result = *this;
    result.set_code(symbol, code, true);
    return result;
}

auto Structure::without_code(int symbol, std::uint64_t code) const -> Structure
{
    Structure result = *this;
    result.set_code(symbol, code, false);
    return result;
}

auto Structure::size() const -> std::size_t
{
    std::size_t result = 0;
    for (auto & r : _relations)
        result += r.count();
    return result;
}

auto Structure::empty() const -> bool
{
    return std::all_of(_relations.begin(), _relations.end(), [] (const Bitset & r) { return r.none(); });
}

auto Structure::tuples(int symbol) const -> std::vector<Tuple>
{
    std::vector<Tuple> result;
    _relations[symbol].for_each([&] (std::size_t code) { result.push_back(decode(symbol, code)); });
    return result;
}

auto Structure::operator== (const Structure & other) const -> bool
{
    return _domain == other._domain && _signature == other._signature && _relations == other._relations;
}

auto Structure::operator<=> (const Structure & other) const -> std::strong_ordering
{
    if (auto c = _domain <=> other._domain ; c != 0)
        return c;
    if (auto c = _signature.arities() <=> other._signature.arities() ; c != 0)
        return c;
    for (std::size_t k = 0 ; k < _relations.size() ; ++k)
        if (auto c = _relations[k] <=> other._relations[k] ; c != 0)
            return c;
    return std::strong_ordering::equal;
}

auto Structure::hash() const -> std::size_t
{
    std::size_t h = std::size_t(_domain) * 0x100000001b3ull;
    for (auto & r : _relations)
        h ^= r.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

DomainMap::DomainMap(int target_size, std::vector<int> values) :
    _target_size(target_size),
    _values(std::move(values))
{
    if (target_size < 1 || _values.empty())
        throw PreconditionError("domain maps need non-empty source and target");
    for (auto v : _values)
        if (v < 0 || v >= target_size)
            throw PreconditionError("domain map value " + std::to_string(v) + " outside target of size "
                    + std::to_string(target_size));
}

auto DomainMap::identity(int n) -> DomainMap
{
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 0);
    return DomainMap(n, std::move(values));
}

auto DomainMap::is_injective() const -> bool
{
    std::vector<bool> seen(_target_size, false);
    for (auto v : _values) {
        if (seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

auto DomainMap::is_surjective() const -> bool
{
    std::vector<bool> seen(_target_size, false);
    int hit = 0;
    for (auto v : _values)
        if (! seen[v]) {
            seen[v] = true;
            ++hit;
        }
    return hit == _target_size;
}

auto DomainMap::is_bijective() const -> bool
{
    return source_size() == _target_size && is_injective();
}

auto DomainMap::then(const DomainMap & next) const -> DomainMap
{
    if (next.source_size() != _target_size)
        throw MismatchError("cannot compose maps: target size " + std::to_string(_target_size)
                + " differs from source size " + std::to_string(next.source_size()));
    std::vector<int> values(_values.size());
    for (std::size_t i = 0 ; i < _values.size() ; ++i)
        values[i] = next(_values[i]);
    return DomainMap(next.target_size(), std::move(values));
}

auto DomainMap::inverse() const -> DomainMap
{
    if (! is_bijective())
        throw PreconditionError("only bijections have inverses");
    std::vector<int> values(_values.size());
    for (std::size_t i = 0 ; i < _values.size() ; ++i)
        values[_values[i]] = int(i);
    return DomainMap(_target_size, std::move(values));
}

auto revex::factorial(int n) -> std::uint64_t
{
    std::uint64_t result = 1;
    for (int i = 2 ; i <= n ; ++i)
        result *= std::uint64_t(i);
    return result;
}

auto revex::for_each_permutation(int n, const std::function<void (const DomainMap &)> & f) -> void
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        f(DomainMap(n, p));
    } while (std::next_permutation(p.begin(), p.end()));
}

auto revex::require_same_shape(const Structure & a, const Structure & b, const char * what) -> void
{
    if (! (a.signature() == b.signature()))
        throw MismatchError(std::string(what) + ": signatures differ");
    if (a.domain() != b.domain())
        throw MismatchError(std::string(what) + ": domain sizes differ (" + std::to_string(a.domain()) + " vs "
                + std::to_string(b.domain()) + ")");
}

auto revex::complement(const Structure & s) -> Structure
{
    Structure result = s;
    for (int k = 0 ; k < s.signature().size() ; ++k)
        result.relation(k).flip();
    return result;
}

auto revex::is_graph(const Structure & s) -> bool
{
    if (! (s.signature() == Signature::binary()))
        return false;
    int n = s.domain();
    for (int x = 0 ; x < n ; ++x) {
        if (s.contains(0, { x, x }))
            return false;
        for (int y = x + 1 ; y < n ; ++y)
            if (s.contains(0, { x, y }) != s.contains(0, { y, x }))
                return false;
    }
    return true;
}

auto revex::graph_complement(const Structure & s) -> Structure
{
    if (! is_graph(s))
        throw PreconditionError("graph_complement: input is not an irreflexive symmetric binary structure");
    Structure result = complement(s);
    for (int x = 0 ; x < s.domain() ; ++x)
        result.erase(0, std::vector<int>{ x, x });
    return result;
}

auto revex::unite(std::span<const Structure> family) -> Structure
{
    if (family.empty())
        throw PreconditionError("union of an empty family is undefined without a domain");
    Structure result = family.front();
    for (auto & s : family.subspan(1)) {
        require_same_shape(result, s, "union");
        for (int k = 0 ; k < s.signature().size() ; ++k)
            result.relation(k) |= s.relation(k);
    }
    return result;
}

auto revex::intersect(std::span<const Structure> family) -> Structure
{
    if (family.empty())
        throw PreconditionError("intersection of an empty family is undefined without a domain");
    Structure result = family.front();
    for (auto & s : family.subspan(1)) {
        require_same_shape(result, s, "intersection");
        for (int k = 0 ; k < s.signature().size() ; ++k)
            result.relation(k) &= s.relation(k);
    }
    return result;
}

auto revex::direct_image(const DomainMap & f, const Structure & s) -> Structure
{
    if (f.source_size() != s.domain())
        throw MismatchError("direct_image: map source size differs from structure domain");
    Structure result(s.signature(), f.target_size());
    std::vector<int> t(s.signature().max_arity());
    for (int k = 0 ; k < s.signature().size() ; ++k) {
        std::span<int> tuple(t.data(), s.signature().arity(k));
        s.relation(k).for_each([&] (std::size_t code) {
            s.decode(k, code, tuple);
            for (auto & x : tuple)
                x = f(x);
            result.insert(k, tuple);
        });
    }
    return result;
}

auto revex::inverse_image(const DomainMap & f, const Structure & s) -> Structure
{
    if (f.target_size() != s.domain())
        throw MismatchError("inverse_image: map target size differs from structure domain");
    Structure result(s.signature(), f.source_size());
    std::vector<int> t(s.signature().max_arity());
    for (int k = 0 ; k < s.signature().size() ; ++k) {
        std::span<int> tuple(t.data(), s.signature().arity(k));
        for (std::uint64_t code = 0 ; code < result.space(k) ; ++code) {
            result.decode(k, code, tuple);
            for (auto & x : tuple)
                x = f(x);
            if (s.contains(k, tuple))
                result.set_code(k, code);
        }
    }
    return result;
}

auto revex::is_subinterpretation(const Structure & a, const Structure & b) -> bool
{
    require_same_shape(a, b, "is_subinterpretation");
    for (int k = 0 ; k < a.signature().size() ; ++k)
        if (! a.relation(k).is_subset_of(b.relation(k)))
            return false;
    return true;
}

auto revex::diagonal(int n) -> Structure
{
    Structure result(Signature::binary(), n);
    for (int x = 0 ; x < n ; ++x)
        result.insert(0, { x, x });
    return result;
}

auto revex::make_graph(int n, const std::vector<std::pair<int, int>> & edges) -> Structure
{
    Structure result(Signature::binary(), n);
    for (auto [x, y] : edges) {
        if (x == y || x < 0 || y < 0 || x >= n || y >= n)
            throw PreconditionError("make_graph: bad edge");
        result.insert(0, { x, y });
        result.insert(0, { y, x });
    }
    return result;
}

auto revex::make_binary(int n, const std::vector<std::pair<int, int>> & pairs) -> Structure
{
    Structure result(Signature::binary(), n);
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= n || y >= n)
            throw PreconditionError("make_binary: pair outside domain");
        result.insert(0, { x, y });
    }
    return result;
}
