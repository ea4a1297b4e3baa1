/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_MORPHISM_HH
#define REVEX_GUARD_REVEX_MORPHISM_HH 1

#include <revex/structure.hh>

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace revex
{
    enum class MorphismKind
    {
        homomorphism,
        condensation,
        embedding,
        isomorphism
    };

    auto to_string(MorphismKind kind) -> std::string;

    inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    /// Default largest domain for which orbits are enumerated through Sym(n).
    inline constexpr int default_orbit_cap = 8;

    /**
     * Condensations and isomorphisms relate structures on the same domain;
     * asking about either across different domain sizes is a mismatch, not
     * a false answer.
     */
    auto is_morphism(MorphismKind kind, const DomainMap & f, const Structure & a, const Structure & b) -> bool;

    /**
     * All maps of the given kind from a to b, in lexicographic order of
     * their value vectors, stopping after limit maps. The search is split on
     * the image of 0 across workers; the result does not depend on how many.
     */
    auto enumerate_morphisms(MorphismKind kind, const Structure & a, const Structure & b,
            std::size_t limit = unlimited, unsigned workers = 1) -> std::vector<DomainMap>;

    auto find_morphism(MorphismKind kind, const Structure & a, const Structure & b) -> std::optional<DomainMap>;

    /// First induced copy of pattern in host, or nothing if pattern is larger.
    auto find_embedding(const Structure & pattern, const Structure & host) -> std::optional<DomainMap>;

    auto are_isomorphic(const Structure & a, const Structure & b) -> bool;

    /// Distinct images of s under Sym(n), sorted.
    auto iso_class(const Structure & s, int cap = default_orbit_cap) -> std::vector<Structure>;

    /// The least member of the isomorphism class of s.
    auto canonical_form(const Structure & s, int cap = default_orbit_cap) -> Structure;

    auto is_reversible(const Structure & s, int cap = default_orbit_cap) -> bool;
    auto is_strongly_reversible(const Structure & s) -> bool;
    auto is_weakly_reversible(const Structure & s, int cap = default_orbit_cap) -> bool;

    /// True when no member of the family is a proper subinterpretation of another.
    auto is_antichain(const std::vector<Structure> & family) -> bool;
}

#endif
