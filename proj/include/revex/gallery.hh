/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_GALLERY_HH
#define REVEX_GUARD_REVEX_GALLERY_HH 1

#include <revex/structure.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace revex::gallery
{
    auto cycle(int n) -> Structure;
    auto path(int n) -> Structure;
    auto complete(int n) -> Structure;
    auto empty(int n) -> Structure;

    /// Vertex x becomes an independent cloud of sizes[x] consecutive vertices.
    auto blowup(const Structure & g, const std::vector<int> & sizes) -> Structure;

    /// Complete multipartite graph with the given part sizes.
    auto multipartite(const std::vector<int> & sizes) -> Structure;

    /// The transitive tournament 0 < 1 < ... without a seed, else each arc oriented at random.
    auto tournament(int n, std::optional<std::uint64_t> seed = std::nullopt) -> Structure;

    auto has_clique(const Structure & g, int size) -> bool;

    /**
     * Every non-edge {x, y} lies in an n-set whose only missing edge is
     * {x, y}. Needs a K_n-free graph and n >= 3.
     */
    auto is_maximal_knfree(const Structure & g, int n) -> bool;

    /// Needs a maximal K_n-free graph on at least n - 1 vertices.
    auto every_vertex_in_kn1(const Structure & g, int n) -> bool;

    /**
     * Whether the blowup is again maximal K_n-free; nothing when g has
     * fewer than n - 1 vertices, where no such guarantee is known.
     */
    auto blowup_preserves_maximality(const Structure & g, const std::vector<int> & sizes, int n) -> std::optional<bool>;

    struct DualityReport
    {
        bool maximal_knfree;            // g is a maximal K_n-free graph
        bool complement_minimal_enfree; // its complement is minimal among E_n-free graphs

        auto agree() const -> bool
        {
            return maximal_knfree == complement_minimal_enfree;
        }
    };

    /// Both sides, the second computed by the generic extremal engine.
    auto knfree_duality(const Structure & g, int n) -> DualityReport;

    /// Minimality among structures omitting the empty m-point structure, by witness sets.
    auto min_omit_empty_check(const Structure & s, int m) -> bool;

    /// Maximality among structures omitting the full m-point structure.
    auto max_omit_full_check(const Structure & s, int m) -> bool;

    struct MinBinaryDecomposition
    {
        std::vector<int> loops;         // R
        std::vector<int> rest;          // X minus R
        Structure orientation;          // rho restricted to the rest, on the whole domain
        Structure sparse_graph;         // on |rest| vertices: complement of the symmetrised orientation
        Structure reconstruction;       // orientation plus the loops of R
    };

    /// Throws if s is not minimal or the decomposition fails its checks.
    auto decompose_min_binary(const Structure & s, int m) -> MinBinaryDecomposition;

    struct HensonDefect
    {
        std::vector<int> h;
        std::vector<int> k;

        auto operator== (const HensonDefect &) const -> bool = default;
    };

    inline constexpr int default_henson_cap = 4;

    /// Pairs (H, K) with |H| <= cap and K a K_{n-1}-free subset of H that no outside vertex separates.
    auto henson_defects(const Structure & g, int n, int cap = default_henson_cap) -> std::vector<HensonDefect>;

    enum class Deg2Tail
    {
        none,
        k1,
        k2
    };

    struct Deg2Decomposition
    {
        std::vector<int> cycles;    // sorted cycle lengths
        Deg2Tail tail;
    };

    struct Deg2Classification
    {
        bool maximal;
        std::optional<Deg2Decomposition> decomposition;
    };

    auto classify_max_deg2(const Structure & g) -> Deg2Classification;

    auto is_connected_graph(const Structure & g) -> bool;

    /// Breadth-first tree from vertex 0.
    auto spanning_tree(const Structure & g) -> Structure;

    auto is_minimal_connected(const Structure & g) -> bool;

    /// k <= |rho_i inside K^arity| <= l for every m in sizes, every m-set K and every symbol i.
    auto local_bounds_member(const Structure & g, const std::vector<int> & sizes, int k, int l) -> bool;
}

#endif
