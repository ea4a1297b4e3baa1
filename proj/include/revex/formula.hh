/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_FORMULA_HH
#define REVEX_GUARD_REVEX_FORMULA_HH 1

#include <revex/structure.hh>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace revex
{
    enum class Connective
    {
        equals,
        relation,
        negation,
        conjunction,
        disjunction,
        forall,
        exists,
        at_most
    };

    class Formula;

    struct FormulaNode
    {
        Connective connective;
        int symbol = -1;                 // relation index for relation atoms
        int bound = 0;                   // n in E<=n
        std::vector<int> variables;      // atom arguments, the quantified variable, or the counted block
        std::vector<Formula> children;
    };

    /**
     * An immutable formula of the finitary fragment. Nodes are shared, so
     * copying is cheap. Conjunctions and disjunctions always have at least
     * two members: the constructors return the sole member of a singleton
     * list unchanged and reject an empty one.
     */
    class Formula
    {
        private:
            std::shared_ptr<const FormulaNode> _node;

            explicit Formula(FormulaNode && node);

        public:
            static auto equals(int v, int w) -> Formula;
            static auto relation(int symbol, std::vector<int> arguments) -> Formula;
            static auto negation(Formula f) -> Formula;
            static auto conjunction(std::vector<Formula> members) -> Formula;
            static auto disjunction(std::vector<Formula> members) -> Formula;
            static auto forall(int v, Formula f) -> Formula;
            static auto exists(int v, Formula f) -> Formula;
            static auto at_most(int n, std::vector<int> block, Formula f) -> Formula;

            /// Nested quantifiers over vars, outermost first; f itself if vars is empty.
            static auto forall(const std::vector<int> & vars, Formula f) -> Formula;
            static auto exists(const std::vector<int> & vars, Formula f) -> Formula;

            auto connective() const -> Connective
            {
                return _node->connective;
            }

            auto symbol() const -> int
            {
                return _node->symbol;
            }

            auto bound() const -> int
            {
                return _node->bound;
            }

            auto variables() const -> const std::vector<int> &
            {
                return _node->variables;
            }

            /// The quantified variable of forall / exists.
            auto variable() const -> int
            {
                return _node->variables.front();
            }

            auto children() const -> const std::vector<Formula> &
            {
                return _node->children;
            }

            auto child() const -> const Formula &
            {
                return _node->children.front();
            }

            auto is_atomic() const -> bool
            {
                return connective() == Connective::equals || connective() == Connective::relation;
            }

            /// A relation or equality atom, or the negation of one.
            auto is_literal() const -> bool;

            auto operator== (const Formula & other) const -> bool;
    };

    auto parse_formula(std::string_view text) -> Formula;
    auto to_string(const Formula & f) -> std::string;

    auto free_variables(const Formula & f) -> std::vector<int>;
    auto is_sentence(const Formula & f) -> bool;

    /// Largest variable index occurring anywhere in f, or -1.
    auto max_variable(const Formula & f) -> int;

    /// Replaces free occurrences of each variable v with renaming[v] (when that is not -1).
    auto substitute(const Formula & f, const std::vector<int> & renaming) -> Formula;

    /// Variable index -> domain element, with -1 for unassigned.
    using Valuation = std::vector<int>;

    /**
     * Tarskian truth. At-most quantifiers are decided by counting the
     * satisfying tuples of the block directly.
     */
    auto evaluate(const Formula & f, const Structure & s, const Valuation & valuation = {}) -> bool;

    /**
     * All classes contain the (negated) equalities and are closed under & and |.
     * P and N are built from atoms, respectively negated atoms, with both
     * quantifiers. F is built from atoms and negated atoms with A, and with E
     * applied to members of P only; G is the same with N in place of P.
     * not-F and not-G swap the roles of the two quantifiers: E is always
     * allowed, A only over N (for not-F) or P (for not-G).
     */
    struct SyntacticClass
    {
        bool positive = false;       // P
        bool negative = false;       // N
        bool f = false;              // F
        bool g = false;              // G
        bool neg_f = false;          // not-F
        bool neg_g = false;          // not-G

        auto operator== (const SyntacticClass &) const -> bool = default;
    };

    auto classify(const Formula & f) -> SyntacticClass;

    /// Swaps every relation atom R for ~R; equalities are unchanged.
    auto transform_c(const Formula & f) -> Formula;

    /// Pushes a negation through f, dualising quantifiers and connectives.
    auto transform_neg(const Formula & f) -> Formula;

    /// Removes double negations everywhere.
    auto normalize(const Formula & f) -> Formula;

    enum class AtMostExpansion
    {
        literal,        // ~phi(w^k) in the disjunction
        rewritten       // phi^neg(w^k) in the disjunction
    };

    /**
     * E<=n w phi(v, w) as a universal statement about n+1 copies of the
     * block over fresh variables: some copy fails phi, or two copies agree.
     */
    auto expand_at_most(int n, const std::vector<int> & block, const Formula & body, AtMostExpansion style) -> Formula;

    /// Replaces every at-most node in f by its expansion.
    auto expand_all_at_most(const Formula & f, AtMostExpansion style) -> Formula;

    auto phi_irreflexive(int symbol = 0) -> Formula;
    auto phi_reflexive(int symbol = 0) -> Formula;
    auto phi_symmetric(int symbol = 0) -> Formula;
    auto phi_transitive(int symbol = 0) -> Formula;

    /// Connectivity of a graph on at most n points: paths with fewer than n - 1 inner vertices.
    auto phi_connected(int n, int symbol = 0) -> Formula;

    /// Every vertex has at most d out-neighbours.
    auto degree_at_most(int d, int symbol = 0) -> Formula;

    inline constexpr int default_pattern_cap = 6;

    /// True in Y exactly when pattern embeds into Y as an induced substructure.
    auto embed_sentence(const Structure & pattern, int cap = default_pattern_cap) -> Formula;

    /// The universal sentence saying pattern does not embed.
    auto forbid_sentence(const Structure & pattern, int cap = default_pattern_cap) -> Formula;
}

#endif
