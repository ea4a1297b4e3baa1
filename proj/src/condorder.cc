/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/condorder.hh>
#include <revex/io.hh>
#include <revex/morphism.hh>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

using namespace revex;

namespace
{
    auto total_bits(const Structure & blank) -> std::uint64_t
    {
        std::uint64_t bits = 0;
        for (int i = 0 ; i < blank.signature().size() ; ++i)
            bits += blank.space(i);
        return bits;
    }

    /// Bit b of mask, counted across the relations in order, decides the b-th tuple.
    auto from_bits(const Structure & blank, std::uint64_t mask) -> Structure
    {
        Structure result = blank;
        int bit = 0;
        for (int i = 0 ; i < blank.signature().size() ; ++i)
            for (std::uint64_t code = 0 ; code < blank.space(i) ; ++code, ++bit)
                if ((mask >> bit) & 1)
                    result.set_code(i, code);
        return result;
    }

    auto fill_matrix(CondOrderCensus & census, unsigned workers) -> void
    {
        auto count = census.representatives.size();
        census.below.assign(count, std::vector<bool>(count, false));
        std::vector<std::vector<char>> rows(count, std::vector<char>(count, 0));

        auto work = [&] (unsigned start, unsigned stride) {
            for (std::size_t i = start ; i < count ; i += stride)
                for (std::size_t j = 0 ; j < count ; ++j)
                    rows[i][j] = find_morphism(MorphismKind::condensation,
                            census.representatives[i], census.representatives[j]).has_value();
        };

        workers = std::max(1u, workers);
        std::vector<std::thread> threads;
        for (unsigned w = 1 ; w < workers ; ++w)
            threads.emplace_back(work, w, workers);
        work(0, workers);
        for (auto & t : threads)
            t.join();

        for (std::size_t i = 0 ; i < count ; ++i)
            for (std::size_t j = 0 ; j < count ; ++j)
                census.below[i][j] = rows[i][j];

        std::vector<bool> placed(count, false);
        for (std::size_t i = 0 ; i < count ; ++i) {
            if (placed[i])
                continue;
            std::vector<int> cls;
            for (std::size_t j = i ; j < count ; ++j)
                if (! placed[j] && census.below[i][j] && census.below[j][i]) {
                    placed[j] = true;
                    cls.push_back(int(j));
                }
            census.classes.push_back(std::move(cls));
        }
    }

    /// All tau with s1 <= tau <= s2 for some s1, s2 in the family.
    auto convex_hull(const std::vector<Structure> & family) -> std::set<Structure>
    {
        std::set<Structure> hull;
        for (auto & low : family)
            for (auto & high : family) {
                if (! is_subinterpretation(low, high))
                    continue;
                std::vector<std::pair<int, std::uint64_t>> gap;
                for (int i = 0 ; i < low.signature().size() ; ++i)
                    for (std::uint64_t code = 0 ; code < low.space(i) ; ++code)
                        if (high.contains_code(i, code) && ! low.contains_code(i, code))
                            gap.emplace_back(i, code);
                if (gap.size() > 24)
                    throw BudgetExceeded("convex hull interval too large");
                for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << gap.size()) ; ++mask) {
                    Structure tau = low;
                    for (std::size_t b = 0 ; b < gap.size() ; ++b)
                        if ((mask >> b) & 1)
                            tau.set_code(gap[b].first, gap[b].second);
                    hull.insert(std::move(tau));
                }
            }
        return hull;
    }

    auto require_complete(const CondOrderCensus & census, const char * what) -> void
    {
        if (census.sampled)
            throw PreconditionError(std::string(what) + ": census is sampled, not complete");
        if (census.orbits.size() != census.representatives.size())
            throw PreconditionError(std::string(what) + ": census has no orbits");
    }
}

auto revex::cond_census(int n, const Signature & signature, const CondOrderOptions & options) -> CondOrderCensus
{
    Structure blank(signature, n);
    auto bits = total_bits(blank);
    if (bits > std::uint64_t(sampled_bits))
        throw BudgetExceeded("condensation census: " + std::to_string(bits) + " tuples exceed the budget of "
                + std::to_string(sampled_bits));

    CondOrderCensus census{ n, signature, bits > std::uint64_t(exhaustive_bits), std::nullopt, { }, { }, { }, { }, { } };

    if (! census.sampled) {
        std::vector<bool> seen(std::size_t{1} << bits, false);
        for (std::uint64_t mask = 0 ; mask < seen.size() ; ++mask) {
            if (seen[mask])
                continue;
            auto orbit = iso_class(from_bits(blank, mask));
            for (auto & s : orbit) {
                std::uint64_t m = 0;
                int bit = 0;
                for (int i = 0 ; i < signature.size() ; ++i)
                    for (std::uint64_t code = 0 ; code < s.space(i) ; ++code, ++bit)
                        if (s.contains_code(i, code))
                            m |= std::uint64_t{1} << bit;
                seen[m] = true;
            }
            census.representatives.push_back(orbit.front());
            census.orbits.push_back(std::move(orbit));
        }
    }
    else {
        census.seed = options.seed;
        std::mt19937_64 rng(options.seed);
        std::set<Structure> reps;
        // the two ends are always present, so the first row and last column stay meaningful
        reps.insert(blank);
        reps.insert(Structure::full(signature, n));
        for (int i = 0 ; i < options.samples ; ++i)
            reps.insert(canonical_form(from_bits(blank, rng() & ((std::uint64_t{1} << bits) - 1))));
        for (auto & r : reps) {
            census.representatives.push_back(r);
            census.orbits.push_back(iso_class(r));
        }
    }

    std::vector<std::size_t> order(census.representatives.size());
    for (std::size_t i = 0 ; i < order.size() ; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&] (std::size_t a, std::size_t b) {
            return census.representatives[a] < census.representatives[b];
            });
    std::vector<Structure> reps;
    std::vector<std::vector<Structure>> orbits;
    for (auto i : order) {
        reps.push_back(std::move(census.representatives[i]));
        orbits.push_back(std::move(census.orbits[i]));
    }
    census.representatives = std::move(reps);
    census.orbits = std::move(orbits);
    for (auto & o : census.orbits)
        census.orbit_sizes.push_back(o.size());

    fill_matrix(census, options.workers);
    return census;
}

auto revex::verify_convexity(const CondOrderCensus & census) -> bool
{
    require_complete(census, "verify_convexity");
    for (auto & cls : census.classes) {
        std::set<Structure> members;
        for (auto i : cls)
            members.insert(census.orbits[i].begin(), census.orbits[i].end());
        for (auto i : cls)
            if (convex_hull(census.orbits[i]) != members)
                return false;
        // on a finite domain the class is a single orbit
        if (cls.size() != 1)
            return false;
    }
    return true;
}

auto revex::verify_antichain(const CondOrderCensus & census) -> bool
{
    require_complete(census, "verify_antichain");
    for (std::size_t i = 0 ; i < census.representatives.size() ; ++i) {
        bool antichain = is_antichain(census.orbits[i]);
        bool reversible = is_reversible(census.representatives[i]);
        if (! antichain || antichain != reversible)
            return false;
    }
    return true;
}

auto revex::cond_census_to_json_text(const CondOrderCensus & census) -> std::string
{
    Json j;
    j["domain"] = census.domain;
    j["signature"] = census.signature.arities();
    j["sampled"] = census.sampled;
    j["seed"] = census.seed ? Json(*census.seed) : Json(nullptr);
    j["representatives"] = Json::array();
    for (auto & r : census.representatives)
        j["representatives"].push_back(structure_to_json(r));
    j["orbit_sizes"] = census.orbit_sizes;
    j["matrix"] = Json::array();
    for (auto & row : census.below) {
        Json r = Json::array();
        for (bool b : row)
            r.push_back(b ? 1 : 0);
        j["matrix"].push_back(std::move(r));
    }
    j["classes"] = census.classes;
    return canonical_text(j);
}

auto revex::cond_census_to_dot(const CondOrderCensus & census) -> std::string
{
    auto count = census.classes.size();
    auto le = [&] (std::size_t a, std::size_t b) {
        return bool(census.below[census.classes[a].front()][census.classes[b].front()]);
    };

    std::ostringstream out;
    out << "digraph condensation_order {\n";
    out << "    rankdir = BT;\n";
    for (std::size_t a = 0 ; a < count ; ++a) {
        out << "    c" << a << " [label=\"";
        for (std::size_t k = 0 ; k < census.classes[a].size() ; ++k)
            out << (k ? "," : "") << census.classes[a][k];
        out << "\"];\n";
    }
    for (std::size_t a = 0 ; a < count ; ++a)
        for (std::size_t b = 0 ; b < count ; ++b) {
            if (a == b || ! le(a, b))
                continue;
            bool covered = true;
            for (std::size_t c = 0 ; c < count && covered ; ++c)
                if (c != a && c != b && le(a, c) && le(c, b))
                    covered = false;
            if (covered)
                out << "    c" << a << " -> c" << b << ";\n";
        }
    out << "}\n";
    return out.str();
}
