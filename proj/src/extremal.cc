/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/extremal.hh>
#include <revex/morphism.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <thread>
#include <unordered_set>

using namespace revex;

auto revex::to_string(Extreme e) -> std::string
{
    return e == Extreme::maximal ? "maximal" : "minimal";
}

auto revex::to_string(SearchMode m) -> std::string
{
    return m == SearchMode::local ? "local" : "exact";
}

auto revex::to_string(Verdict v) -> std::string
{
    switch (v) {
        case Verdict::certified:       return "certified";
        case Verdict::refuted:         return "refuted";
        case Verdict::locally_extreme: return "locally_extreme";
        case Verdict::inconclusive:    return "inconclusive";
    }
    return "?";
}

auto revex::configured_budget() -> std::uint64_t
{
    const char * text = std::getenv("EXTREMAL_BUDGET");
    if (! text || ! *text)
        return default_budget;
    std::uint64_t value = 0;
    auto end = text + std::strlen(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc{ } || ptr != end || value == 0)
        throw PreconditionError(std::string("EXTREMAL_BUDGET must be a positive integer, got '") + text + "'");
    return value;
}

namespace
{
    /// Closure that makes single moves decide extremality in the given direction.
    auto local_is_exact(const CompiledSpec & c) -> std::optional<std::string>
    {
        if (c.all_closed(Closure::down))
            return "every constraint is closed under removing tuples, so single moves decide";
        if (c.all_closed(Closure::up))
            return "every constraint is closed under adding tuples, so single moves decide";
        return std::nullopt;
    }

    auto pruning_closure(Extreme direction) -> Closure
    {
        // moving up, a failed downward-closed constraint stays failed
        return direction == Extreme::maximal ? Closure::down : Closure::up;
    }

    auto fails_pruning(const CompiledSpec & c, const Structure & s, Closure closure) -> bool
    {
        for (auto & k : c.constraints())
            if ((k.closure == closure || k.closure == Closure::both) && ! k.holds(s))
                return true;
        return false;
    }
}

auto revex::is_extreme(const Structure & s, const ClassSpec & spec, Extreme direction, SearchMode mode,
        std::uint64_t budget) -> ExtremeReport
{
    CompiledSpec compiled(spec, s.domain());
    if (! compiled.member(s))
        throw PreconditionError("input is not a member of the class");

    auto & lattice = compiled.lattice();
    bool up = direction == Extreme::maximal;

    std::vector<int> moves;
    for (int i = 0 ; i < lattice.size() ; ++i)
        if (lattice.has_cell(s, i) != up)
            moves.push_back(i);

    auto moved = [&] (std::uint64_t mask) {
        Structure t = s;
        for (std::size_t j = 0 ; j < moves.size() ; ++j)
            if ((mask >> j) & 1)
                lattice.set_cell(t, moves[j], up);
        return t;
    };

    ExtremeReport report{ s, direction, Verdict::certified, "", std::nullopt };

    for (std::size_t j = 0 ; j < moves.size() ; ++j) {
        auto t = moved(std::uint64_t{1} << j);
        if (compiled.member(t)) {
            report.verdict = Verdict::refuted;
            report.guarantee = "a single move stays in the class";
            report.witness = t;
            return report;
        }
    }

    if (auto reason = local_is_exact(compiled)) {
        report.guarantee = *reason;
        return report;
    }

    if (mode == SearchMode::local) {
        report.verdict = Verdict::locally_extreme;
        report.guarantee = "no single move stays in the class; some constraint is not closed, so larger moves were not tried";
        return report;
    }

    if (moves.size() > 63) {
        report.verdict = Verdict::inconclusive;
        report.guarantee = "too many cells for the exact search";
        return report;
    }

    // Breadth-first over sets of moves, by size. A set is dead once it fails a
    // constraint that further moves cannot repair; no superset of it is tried.
    auto closure = pruning_closure(direction);
    std::vector<std::uint64_t> dead, layer;
    for (std::size_t j = 0 ; j < moves.size() ; ++j) {
        auto mask = std::uint64_t{1} << j;
        if (fails_pruning(compiled, moved(mask), closure))
            dead.push_back(mask);
        else
            layer.push_back(mask);
    }

    std::uint64_t visited = moves.size();
    while (! layer.empty()) {
        std::vector<std::uint64_t> next;
        for (auto a : layer) {
            int top = 63 - std::countl_zero(a);
            for (int c = top + 1 ; c < int(moves.size()) ; ++c) {
                auto b = a | (std::uint64_t{1} << c);
                if (std::any_of(dead.begin(), dead.end(), [b] (std::uint64_t d) { return (d & b) == d; }))
                    continue;
                if (++visited > budget) {
                    report.verdict = Verdict::inconclusive;
                    report.guarantee = "exact search stopped after " + std::to_string(budget) + " candidates";
                    return report;
                }
                auto t = moved(b);
                if (compiled.member(t)) {
                    report.verdict = Verdict::refuted;
                    report.guarantee = "exact search found a member " + std::to_string(std::popcount(b)) + " moves away";
                    report.witness = t;
                    return report;
                }
                if (fails_pruning(compiled, t, closure))
                    dead.push_back(b);
                else
                    next.push_back(b);
            }
        }
        layer = std::move(next);
    }

    report.guarantee = "exact search over all " + std::string(up ? "supersets" : "subsets") + " in the cell lattice";
    return report;
}

auto revex::is_maximal(const Structure & s, const ClassSpec & spec, SearchMode mode, std::uint64_t budget) -> ExtremeReport
{
    return is_extreme(s, spec, Extreme::maximal, mode, budget);
}

auto revex::is_minimal(const Structure & s, const ClassSpec & spec, SearchMode mode, std::uint64_t budget) -> ExtremeReport
{
    return is_extreme(s, spec, Extreme::minimal, mode, budget);
}

auto revex::saturate(const Structure & s, const ClassSpec & spec, Extreme direction, std::optional<std::uint64_t> seed) -> Structure
{
    CompiledSpec compiled(spec, s.domain());
    if (! compiled.member(s))
        throw PreconditionError("input is not a member of the class");

    auto & lattice = compiled.lattice();
    bool up = direction == Extreme::maximal;

    std::vector<int> order(lattice.size());
    for (int i = 0 ; i < lattice.size() ; ++i)
        order[i] = i;
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    Structure current = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto i : order) {
            if (lattice.has_cell(current, i) == up)
                continue;
            Structure t = current;
            lattice.set_cell(t, i, up);
            if (compiled.member(t)) {
                current = std::move(t);
                changed = true;
                break;
            }
        }
    }
    return current;
}

namespace
{
    auto invariant(const Structure & s) -> std::vector<long>
    {
        std::vector<long> result;
        int n = s.domain();
        for (int k = 0 ; k < s.signature().size() ; ++k)
            result.push_back(long(s.relation_size(k)));

        if (s.signature().max_arity() == 2 && s.signature().size() == 1) {
            std::vector<long> profile;
            for (int x = 0 ; x < n ; ++x) {
                long out = 0, in = 0;
                for (int y = 0 ; y < n ; ++y) {
                    out += s.contains(0, { x, y });
                    in += s.contains(0, { y, x });
                }
                profile.push_back(out * 4096 + in * 2 + s.contains(0, { x, x }));
            }
            std::sort(profile.begin(), profile.end());
            result.insert(result.end(), profile.begin(), profile.end());
        }
        return result;
    }

    auto isomorphism_classes(const std::vector<Structure> & family) -> std::vector<Structure>
    {
        std::map<std::vector<long>, std::vector<std::size_t>> buckets;
        std::vector<std::size_t> reps;
        for (std::size_t i = 0 ; i < family.size() ; ++i) {
            auto & bucket = buckets[invariant(family[i])];
            bool seen = std::any_of(bucket.begin(), bucket.end(), [&] (std::size_t j) {
                    return are_isomorphic(family[j], family[i]);
                    });
            if (! seen) {
                bucket.push_back(i);
                reps.push_back(i);
            }
        }

        std::vector<Structure> result;
        for (auto i : reps)
            result.push_back(canonical_form(family[i]));
        std::sort(result.begin(), result.end());
        return result;
    }

    class Enumerator
    {
        private:
            const CompiledSpec & _c;
            std::uint64_t _budget;
            std::atomic<std::uint64_t> _visited{ 0 };
            std::atomic<bool> _over{ false };

        public:
            Enumerator(const CompiledSpec & c, std::uint64_t budget) :
                _c(c),
                _budget(budget)
            {
            }

            auto over_budget() const -> bool
            {
                return _over;
            }

            auto is_member(std::uint64_t mask) -> bool
            {
                if (++_visited > _budget) {
                    _over = true;
                    return false;
                }
                return _c.member(_c.lattice().to_structure(mask));
            }

            /// Members reachable from mask by moving cells from index next on; adding when up.
            auto walk(std::uint64_t mask, int next, bool up, std::vector<std::uint64_t> & out) -> void
            {
                out.push_back(mask);
                for (int c = next ; c < _c.lattice().size() && ! _over ; ++c) {
                    auto m = up ? (mask | (std::uint64_t{1} << c)) : (mask & ~(std::uint64_t{1} << c));
                    if (is_member(m))
                        walk(m, c + 1, up, out);
                }
            }
    };
}

auto revex::census(int n, const ClassSpec & spec, const CensusOptions & options) -> std::vector<Structure>
{
    CompiledSpec compiled(spec, n);
    auto & lattice = compiled.lattice();
    if (! lattice.consistent())
        return { };

    int k = lattice.size();
    if (k > 63)
        throw BudgetExceeded("census over 2^" + std::to_string(k) + " interpretations is out of reach");

    std::uint64_t full = k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    unsigned workers = std::max(1u, options.workers);
    Enumerator enumerator(compiled, options.budget);
    std::vector<std::uint64_t> members;

    bool down = compiled.all_closed(Closure::down), up = compiled.all_closed(Closure::up);
    bool full_scan = ! down && ! up;

    std::vector<std::uint8_t> bitmap;
    if (! full_scan) {
        // Every member is reached from the bottom (top) through members.
        std::uint64_t root = down ? 0 : full;
        if (enumerator.is_member(root)) {
            std::vector<std::vector<std::uint64_t>> per_branch(k);
            auto branch = [&] (int c) {
                auto m = down ? (root | (std::uint64_t{1} << c)) : (root & ~(std::uint64_t{1} << c));
                if (enumerator.is_member(m))
                    enumerator.walk(m, c + 1, down, per_branch[c]);
            };
            std::vector<std::thread> pool;
            for (unsigned w = 0 ; w < workers ; ++w)
                pool.emplace_back([&, w] {
                    for (int c = int(w) ; c < k ; c += int(workers))
                        branch(c);
                });
            for (auto & t : pool)
                t.join();

            members.push_back(root);
            for (auto & b : per_branch)
                members.insert(members.end(), b.begin(), b.end());
        }
    }
    else {
        if (k >= 63 || (std::uint64_t{1} << k) > options.budget)
            throw BudgetExceeded("census needs all 2^" + std::to_string(k) + " interpretations, over the budget of "
                    + std::to_string(options.budget));
        std::uint64_t total = std::uint64_t{1} << k;
        bitmap.assign(total, 0);
        std::vector<std::thread> pool;
        for (unsigned w = 0 ; w < workers ; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t m = w ; m < total ; m += workers)
                    bitmap[m] = compiled.member(lattice.to_structure(m)) ? 1 : 0;
            });
        for (auto & t : pool)
            t.join();
        for (std::uint64_t m = 0 ; m < total ; ++m)
            if (bitmap[m])
                members.push_back(m);
    }

    if (enumerator.over_budget())
        throw BudgetExceeded("census visited more than " + std::to_string(options.budget) + " interpretations");

    std::vector<std::uint64_t> selected;
    if (options.what == CensusWhat::all)
        selected = members;
    else {
        bool want_max = options.what == CensusWhat::maximal;
        if (full_scan) {
            // reach[m]: some member lies above m (below m for minimality), m included
            std::vector<std::uint8_t> reach = bitmap;
            for (int i = 0 ; i < k ; ++i) {
                auto bit = std::uint64_t{1} << i;
                for (std::uint64_t m = 0 ; m < reach.size() ; ++m)
                    if (want_max ? ! (m & bit) : (m & bit))
                        reach[m] |= reach[m ^ bit];
            }
            for (auto m : members) {
                bool extreme = true;
                for (int i = 0 ; i < k && extreme ; ++i) {
                    auto bit = std::uint64_t{1} << i;
                    if (want_max ? ! (m & bit) : (m & bit))
                        extreme = ! reach[m ^ bit];
                }
                if (extreme)
                    selected.push_back(m);
            }
        }
        else {
            // closed classes: a strictly larger (smaller) member implies one a single move away
            std::unordered_set<std::uint64_t> set(members.begin(), members.end());
            for (auto m : members) {
                bool extreme = true;
                for (int i = 0 ; i < k && extreme ; ++i) {
                    auto bit = std::uint64_t{1} << i;
                    if (want_max ? ! (m & bit) : (m & bit))
                        extreme = ! set.contains(m ^ bit);
                }
                if (extreme)
                    selected.push_back(m);
            }
        }
    }

    std::vector<Structure> result;
    result.reserve(selected.size());
    for (auto m : selected)
        result.push_back(lattice.to_structure(m));

    if (options.up_to_iso)
        return isomorphism_classes(result);

    std::sort(result.begin(), result.end());
    return result;
}
