/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_EXTREMAL_HH
#define REVEX_GUARD_REVEX_EXTREMAL_HH 1

#include <revex/formula.hh>
#include <revex/structure.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace revex
{
    enum class Builtin
    {
        irreflexive,
        symmetric,
        reflexive,
        connected,
        transitive
    };

    auto to_string(Builtin b) -> std::string;
    auto builtin_from_string(const std::string & name) -> Builtin;

    struct LocalBound
    {
        int low;
        int high;

        auto operator== (const LocalBound &) const -> bool = default;
    };

    /// For all v0..v(params-1) there are at most n tuples (v(params)..) of length block satisfying formula.
    struct DefBound
    {
        Formula formula;
        int params;
        int block;
        int n;

        auto operator== (const DefBound &) const -> bool = default;
    };

    /**
     * A theory on a fixed finite domain. Builtins constrain every symbol of
     * the signature, which must then be binary. Local bounds count tuples of
     * relation i lying inside K^arity for each m-element K.
     */
    struct ClassSpec
    {
        Signature signature = Signature::binary();
        std::vector<Builtin> builtins;
        std::vector<Formula> axioms;
        std::vector<Structure> forbidden;
        std::optional<int> degree_max;
        std::map<int, std::vector<LocalBound>> local_bounds;
        std::vector<DefBound> defbounds;

        auto has(Builtin b) const -> bool;

        auto operator== (const ClassSpec &) const -> bool = default;
    };

    /// Throws PreconditionError or MismatchError describing the first problem.
    auto validate(const ClassSpec & spec) -> void;

    auto defbound_sentence(const DefBound & d) -> Formula;

    /**
     * Whether a constraint survives removing tuples (down), adding tuples
     * (up), both, or neither, among interpretations obeying the structural
     * builtins.
     */
    enum class Closure
    {
        neither,
        down,
        up,
        both
    };

    auto to_string(Closure c) -> std::string;

    struct Constraint
    {
        std::string description;
        Closure closure;
        std::function<bool (const Structure &)> holds;
    };

    /**
     * The structural builtins (irreflexive, reflexive, symmetric) fix some
     * tuples and tie others together. What is left is a Boolean lattice of
     * cells: every structure obeying the structural builtins is the base
     * plus a union of cells. Cells are ordered by their least tuple.
     */
    class CellLattice
    {
        private:
            Structure _base;
            std::vector<std::vector<std::pair<int, std::uint64_t>>> _cells;
            bool _consistent = true;

        public:
            CellLattice(const ClassSpec & spec, int n);

            auto consistent() const -> bool
            {
                return _consistent;
            }

            auto base() const -> const Structure &
            {
                return _base;
            }

            auto size() const -> int
            {
                return int(_cells.size());
            }

            auto cell(int i) const -> const std::vector<std::pair<int, std::uint64_t>> &
            {
                return _cells[i];
            }

            auto has_cell(const Structure & s, int i) const -> bool;
            auto set_cell(Structure & s, int i, bool value) const -> void;

            /// Requires size() <= 64.
            auto to_structure(std::uint64_t mask) const -> Structure;
            auto to_mask(const Structure & s) const -> std::uint64_t;
    };

    /// A class specification prepared for one domain size.
    class CompiledSpec
    {
        private:
            ClassSpec _spec;
            int _n;
            CellLattice _lattice;
            std::vector<Constraint> _constraints;

        public:
            CompiledSpec(const ClassSpec & spec, int n);

            auto spec() const -> const ClassSpec &
            {
                return _spec;
            }

            auto domain() const -> int
            {
                return _n;
            }

            auto lattice() const -> const CellLattice &
            {
                return _lattice;
            }

            auto constraints() const -> const std::vector<Constraint> &
            {
                return _constraints;
            }

            auto member(const Structure & s) const -> bool;

            /// Descriptions of the constraints s fails.
            auto violations(const Structure & s) const -> std::vector<std::string>;

            auto all_closed(Closure direction) const -> bool;
    };

    auto member(const Structure & s, const ClassSpec & spec) -> bool;

    /**
     * The tag for a single constraint: whether forbidding pattern is preserved
     * by moving down or up inside the cell lattice of spec.
     */
    auto forbidden_closure(const Structure & pattern, const ClassSpec & spec) -> Closure;

    enum class Extreme
    {
        maximal,
        minimal
    };

    enum class SearchMode
    {
        local,
        exact
    };

    enum class Verdict
    {
        certified,          // extreme in the class
        refuted,            // a strictly larger (smaller) member exists
        locally_extreme,    // no single move stays in the class; nothing more is known
        inconclusive        // the exact search ran out of budget
    };

    auto to_string(Extreme e) -> std::string;
    auto to_string(SearchMode m) -> std::string;
    auto to_string(Verdict v) -> std::string;

    struct ExtremeReport
    {
        Structure structure;
        Extreme direction;
        Verdict verdict;
        std::string guarantee;
        std::optional<Structure> witness;

        auto certified() const -> bool
        {
            return verdict == Verdict::certified;
        }
    };

    inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 24;

    /// The default budget, or EXTREMAL_BUDGET from the environment when set.
    auto configured_budget() -> std::uint64_t;

    auto is_extreme(const Structure & s, const ClassSpec & spec, Extreme direction, SearchMode mode,
            std::uint64_t budget = configured_budget()) -> ExtremeReport;

    auto is_maximal(const Structure & s, const ClassSpec & spec, SearchMode mode = SearchMode::exact,
            std::uint64_t budget = configured_budget()) -> ExtremeReport;

    auto is_minimal(const Structure & s, const ClassSpec & spec, SearchMode mode = SearchMode::exact,
            std::uint64_t budget = configured_budget()) -> ExtremeReport;

    /**
     * Adds (for maximal) or removes (for minimal) the first cell whose move
     * stays in the class, rescanning from the start after every move, until
     * no move is possible. Cells are scanned in lattice order, or in an order
     * shuffled by seed.
     */
    auto saturate(const Structure & s, const ClassSpec & spec, Extreme direction,
            std::optional<std::uint64_t> seed = std::nullopt) -> Structure;

    auto complement_dual(const ClassSpec & spec) -> ClassSpec;

    /// Axioms and defbound formulas normalised, so dualising twice compares equal.
    auto normalize(const ClassSpec & spec) -> ClassSpec;

    enum class CensusWhat
    {
        all,
        maximal,
        minimal
    };

    struct CensusOptions
    {
        CensusWhat what = CensusWhat::all;
        bool up_to_iso = false;
        unsigned workers = 1;
        std::uint64_t budget = configured_budget();
    };

    /// Sorted list of class members on n points; representatives are least in their orbit.
    auto census(int n, const ClassSpec & spec, const CensusOptions & options = { }) -> std::vector<Structure>;

    enum class ChainOperation
    {
        union_,
        intersection
    };

    /// Whether the union (intersection) of a chain of class members is a member.
    auto chain_union_test(const std::vector<Structure> & chain, const ClassSpec & spec,
            ChainOperation operation = ChainOperation::union_) -> bool;
}

#endif
