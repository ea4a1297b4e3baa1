/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_STRUCTURE_HH
#define REVEX_GUARD_REVEX_STRUCTURE_HH 1

#include <revex/bitset.hh>
#include <revex/error.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace revex
{
    /**
     * A finite relational language: one arity per relation symbol R_0, R_1, ...
     */
    class Signature
    {
        private:
            std::vector<int> _arities;

        public:
            explicit Signature(std::vector<int> arities);

            static auto binary() -> Signature;

            auto size() const -> int
            {
                return int(_arities.size());
            }

            auto arity(int symbol) const -> int
            {
                return _arities.at(symbol);
            }

            auto arities() const -> const std::vector<int> &
            {
                return _arities;
            }

            auto max_arity() const -> int;

            auto operator== (const Signature &) const -> bool = default;
    };

    using Tuple = std::vector<int>;

    /// Largest number of tuples a single relation may range over.
    inline constexpr std::uint64_t max_tuple_space = std::uint64_t{1} << 24;

    /**
     * An interpretation of a signature on the domain {0, ..., n-1}.
     *
     * Tuples of relation k are coded as base-n integers with the first
     * entry most significant, so code order is lexicographic tuple order.
     * Each relation is held as a bit set over its codes.
     */
    class Structure
    {
        private:
            Signature _signature;
            int _domain;
            std::vector<Bitset> _relations;

        public:
            Structure(Signature signature, int domain);

            static auto full(Signature signature, int domain) -> Structure;

            /// Validates arities and ranges; duplicate tuples are rejected.
            static auto from_tuples(Signature signature, int domain,
                    const std::vector<std::vector<Tuple>> & relations) -> Structure;

            auto signature() const -> const Signature &
            {
                return _signature;
            }

            auto domain() const -> int
            {
                return _domain;
            }

            auto space(int symbol) const -> std::uint64_t
            {
                return _relations[symbol].size();
            }

            auto encode(int symbol, std::span<const int> tuple) const -> std::uint64_t;
            auto decode(int symbol, std::uint64_t code) const -> Tuple;
            auto decode(int symbol, std::uint64_t code, std::span<int> out) const -> void;

            auto contains(int symbol, std::span<const int> tuple) const -> bool;
            auto contains(int symbol, std::initializer_list<int> tuple) const -> bool
            {
                return contains(symbol, std::span<const int>(tuple.begin(), tuple.size()));
            }

            auto contains_code(int symbol, std::uint64_t code) const -> bool
            {
                return _relations[symbol].test(code);
            }

            auto set_code(int symbol, std::uint64_t code, bool value = true) -> void
            {
                _relations[symbol].set(code, value);
            }

            auto insert(int symbol, std::span<const int> tuple) -> void;
            auto insert(int symbol, std::initializer_list<int> tuple) -> void
            {
                insert(symbol, std::span<const int>(tuple.begin(), tuple.size()));
            }

            auto erase(int symbol, std::span<const int> tuple) -> void;
            auto erase(int symbol, std::initializer_list<int> tuple) -> void
            {
                erase(symbol, std::span<const int>(tuple.begin(), tuple.size()));
            }

            auto with_code(int symbol, std::uint64_t code) const -> Structure;
            auto without_code(int symbol, std::uint64_t code) const -> Structure;

            auto relation(int symbol) const -> const Bitset &
            {
                return _relations[symbol];
            }

            auto relation(int symbol) -> Bitset &
            {
                return _relations[symbol];
            }

            auto relation_size(int symbol) const -> std::size_t
            {
                return _relations[symbol].count();
            }

            /// Total number of tuples over all relations.
            auto size() const -> std::size_t;

            auto empty() const -> bool;

            /// Tuples of one relation in lexicographic order.
            auto tuples(int symbol) const -> std::vector<Tuple>;

            auto operator== (const Structure & other) const -> bool;

            /// Relation by relation, each compared by Bitset ordering.
            auto operator<=> (const Structure & other) const -> std::strong_ordering;

            auto hash() const -> std::size_t;
    };

    struct StructureHash
    {
        auto operator() (const Structure & s) const -> std::size_t
        {
            return s.hash();
        }
    };

    /**
     * A total function {0..source_size-1} -> {0..target_size-1}.
     */
    class DomainMap
    {
        private:
            int _target_size;
            std::vector<int> _values;

        public:
            DomainMap(int target_size, std::vector<int> values);

            static auto identity(int n) -> DomainMap;

            auto source_size() const -> int
            {
                return int(_values.size());
            }

            auto target_size() const -> int
            {
                return _target_size;
            }

            auto operator() (int x) const -> int
            {
                return _values[x];
            }

            auto values() const -> const std::vector<int> &
            {
                return _values;
            }

            auto is_injective() const -> bool;
            auto is_surjective() const -> bool;
            auto is_bijective() const -> bool;

            /// The map x -> then(this(x)).
            auto then(const DomainMap & then) const -> DomainMap;

            auto inverse() const -> DomainMap;

            auto operator== (const DomainMap &) const -> bool = default;
            auto operator<=> (const DomainMap & other) const -> std::strong_ordering
            {
                if (auto c = _target_size <=> other._target_size ; c != 0)
                    return c;
                return _values <=> other._values;
            }
    };

    /// Calls f on every permutation of {0..n-1}, in lexicographic order.
    auto for_each_permutation(int n, const std::function<void (const DomainMap &)> & f) -> void;

    auto factorial(int n) -> std::uint64_t;

    auto complement(const Structure & s) -> Structure;

    auto is_graph(const Structure & s) -> bool;

    /// [X]^2 minus the edges of s, for an irreflexive symmetric binary s.
    auto graph_complement(const Structure & s) -> Structure;

    auto unite(std::span<const Structure> family) -> Structure;
    auto intersect(std::span<const Structure> family) -> Structure;

    auto direct_image(const DomainMap & f, const Structure & s) -> Structure;
    auto inverse_image(const DomainMap & f, const Structure & s) -> Structure;

    auto is_subinterpretation(const Structure & a, const Structure & b) -> bool;

    auto require_same_shape(const Structure & a, const Structure & b, const char * what) -> void;

    auto diagonal(int n) -> Structure;

    /// Undirected graph on n vertices from an edge list.
    auto make_graph(int n, const std::vector<std::pair<int, int>> & edges) -> Structure;

    /// Binary structure on n points from a list of ordered pairs.
    auto make_binary(int n, const std::vector<std::pair<int, int>> & pairs) -> Structure;
}

#endif
