/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_TESTS_SUPPORT_SUPPORT_HH
#define REVEX_GUARD_TESTS_SUPPORT_SUPPORT_HH 1

#include <revex/extremal.hh>
#include <revex/formula.hh>
#include <revex/structure.hh>

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace revex::testing
{
    using Rng = std::mt19937_64;

    auto uniform(Rng & rng, int low, int high) -> int;

    auto random_structure(Rng & rng, const Signature & signature, int n, double density = 0.5) -> Structure;
    auto random_graph(Rng & rng, int n, double density = 0.5) -> Structure;
    auto random_permutation(Rng & rng, int n) -> DomainMap;
    auto random_map(Rng & rng, int from, int to) -> DomainMap;

    /// A random strict partial order: a random DAG under a random labelling, transitively closed.
    auto random_partial_order(Rng & rng, int n, double density = 0.3) -> Structure;

    auto random_valuation(Rng & rng, int n, int variables) -> Valuation;

    struct FormulaOptions
    {
        Signature signature = Signature::binary();
        int depth = 4;
        int variables = 3;
        bool negation = true;
        bool at_most = true;
        bool equality = true;
    };

    auto random_formula(Rng & rng, const FormulaOptions & options) -> Formula;

    /// Keeps drawing until the formula is a sentence.
    auto random_sentence(Rng & rng, const FormulaOptions & options) -> Formula;

    /// Every interpretation of the signature on n points, in mask order.
    auto all_structures(const Signature & signature, int n) -> std::vector<Structure>;
    auto all_graphs(int n) -> std::vector<Structure>;

    /// Applies a permutation tuple by tuple, without going through the library's image code.
    auto permuted(const Structure & s, const std::vector<int> & perm) -> Structure;
    auto brute_orbit(const Structure & s) -> std::set<Structure>;
    auto brute_isomorphic(const Structure & a, const Structure & b) -> bool;
    auto brute_subset(const Structure & a, const Structure & b) -> bool;

    using Predicate = std::function<bool (const Structure &)>;

    /// Is there a strictly larger (smaller) structure on the same domain satisfying p?
    auto brute_extreme(const Structure & s, const Predicate & p, bool maximal) -> bool;

    // direct predicates, written without the formula engine
    auto brute_irreflexive(const Structure & s) -> bool;
    auto brute_reflexive(const Structure & s) -> bool;
    auto brute_symmetric(const Structure & s) -> bool;
    auto brute_transitive(const Structure & s) -> bool;
    auto brute_graph(const Structure & s) -> bool;
    auto brute_strict_order(const Structure & s) -> bool;
    auto brute_strict_linear_order(const Structure & s) -> bool;
    auto brute_has_clique(const Structure & g, int k) -> bool;
    auto brute_has_independent(const Structure & g, int k) -> bool;
    auto brute_max_degree(const Structure & g) -> int;
    auto brute_connected(const Structure & g) -> bool;
    auto brute_edge_count(const Structure & g) -> int;

    /// An isomorphism-free list: one canonical member per class, by brute orbit minima.
    auto brute_canonical_set(const std::vector<Structure> & family) -> std::set<Structure>;

    auto graph_spec() -> ClassSpec;
    auto triangle_free_spec() -> ClassSpec;
    auto poset_spec() -> ClassSpec;

    struct CommandResult
    {
        int status;
        std::string out;
    };

    /// Runs a shell command, capturing standard output; status is the exit code.
    auto run_command(const std::string & command) -> CommandResult;
}

#endif
