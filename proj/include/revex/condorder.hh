/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_CONDORDER_HH
#define REVEX_GUARD_REVEX_CONDORDER_HH 1

#include <revex/structure.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revex
{
    /**
     * The condensation pre-order between isomorphism classes of all
     * interpretations of a signature on a small domain. Representatives are
     * least in their orbit and sorted, so the empty interpretation comes
     * first and the full one last.
     */
    struct CondOrderCensus
    {
        int domain;
        Signature signature;
        bool sampled;
        std::optional<std::uint64_t> seed;
        std::vector<Structure> representatives;
        std::vector<std::vector<Structure>> orbits;
        std::vector<std::uint64_t> orbit_sizes;
        std::vector<std::vector<bool>> below;       // below[i][j]: some condensation maps i onto j
        std::vector<std::vector<int>> classes;      // mutual reachability, ordered by least member
    };

    inline constexpr int exhaustive_bits = 12;
    inline constexpr int sampled_bits = 16;

    struct CondOrderOptions
    {
        unsigned workers = 1;
        std::uint64_t seed = 0;
        int samples = 256;
    };

    /**
     * Exhaustive when the signature has at most exhaustive_bits tuples on n
     * points, sampled up to sampled_bits, and BudgetExceeded beyond.
     */
    auto cond_census(int n, const Signature & signature, const CondOrderOptions & options = { }) -> CondOrderCensus;

    /// Every class of mutual condensation equals the convex hull of each of its orbits, and is a single orbit.
    auto verify_convexity(const CondOrderCensus & census) -> bool;

    /// Every stored orbit is an inclusion antichain, and its representative is reversible.
    auto verify_antichain(const CondOrderCensus & census) -> bool;

    auto cond_census_to_json_text(const CondOrderCensus & census) -> std::string;

    /// Hasse diagram of the quotient order, one node per class.
    auto cond_census_to_dot(const CondOrderCensus & census) -> std::string;
}

#endif
