/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/formula.hh>

#include <algorithm>
#include <set>
#include <string>

using namespace revex;

Formula::Formula(FormulaNode && node) :
    _node(std::make_shared<const FormulaNode>(std::move(node)))
{
}

auto Formula::equals(int v, int w) -> Formula
{
    if (v < 0 || w < 0)
        throw PreconditionError("variable indices must be non-negative");
    return Formula(FormulaNode{ Connective::equals, -1, 0, { v, w }, { } });
}

auto Formula::relation(int symbol, std::vector<int> arguments) -> Formula
{
    if (symbol < 0)
        throw PreconditionError("relation symbols are numbered from 0");
    if (arguments.empty())
        throw PreconditionError("relation atoms need at least one argument");
    for (auto v : arguments)
        if (v < 0)
            throw PreconditionError("variable indices must be non-negative");
    return Formula(FormulaNode{ Connective::relation, symbol, 0, std::move(arguments), { } });
}

auto Formula::negation(Formula f) -> Formula
{
    return Formula(FormulaNode{ Connective::negation, -1, 0, { }, { std::move(f) } });
}

auto Formula::conjunction(std::vector<Formula> members) -> Formula
{
    if (members.empty())
        throw PreconditionError("empty conjunction");
    if (members.size() == 1)
        return members.front();
    return Formula(FormulaNode{ Connective::conjunction, -1, 0, { }, std::move(members) });
}

auto Formula::disjunction(std::vector<Formula> members) -> Formula
{
    if (members.empty())
        throw PreconditionError("empty disjunction");
    if (members.size() == 1)
        return members.front();
    return Formula(FormulaNode{ Connective::disjunction, -1, 0, { }, std::move(members) });
}

auto Formula::forall(int v, Formula f) -> Formula
{
    if (v < 0)
        throw PreconditionError("variable indices must be non-negative");
    return Formula(FormulaNode{ Connective::forall, -1, 0, { v }, { std::move(f) } });
}

auto Formula::exists(int v, Formula f) -> Formula
{
    if (v < 0)
        throw PreconditionError("variable indices must be non-negative");
    return Formula(FormulaNode{ Connective::exists, -1, 0, { v }, { std::move(f) } });
}

auto Formula::forall(const std::vector<int> & vars, Formula f) -> Formula
{
    for (auto v = vars.rbegin() ; v != vars.rend() ; ++v)
        f = forall(*v, std::move(f));
    return f;
}

auto Formula::exists(const std::vector<int> & vars, Formula f) -> Formula
{
    for (auto v = vars.rbegin() ; v != vars.rend() ; ++v)
        f = exists(*v, std::move(f));
    return f;
}

auto Formula::at_most(int n, std::vector<int> block, Formula f) -> Formula
{
    if (n < 0)
        throw PreconditionError("at-most bound must be non-negative");
    if (block.empty())
        throw PreconditionError("at-most block must name at least one variable");
    std::set<int> distinct(block.begin(), block.end());
    if (distinct.size() != block.size())
        throw PreconditionError("at-most block variables must be distinct");
    if (*distinct.begin() < 0)
        throw PreconditionError("variable indices must be non-negative");
    return Formula(FormulaNode{ Connective::at_most, -1, n, std::move(block), { std::move(f) } });
}

auto Formula::is_literal() const -> bool
{
    return is_atomic() || (connective() == Connective::negation && child().is_atomic());
}

auto Formula::operator== (const Formula & other) const -> bool
{
    if (_node == other._node)
        return true;
    return _node->connective == other._node->connective
        && _node->symbol == other._node->symbol
        && _node->bound == other._node->bound
        && _node->variables == other._node->variables
        && _node->children == other._node->children;
}

namespace
{
    auto collect_free(const Formula & f, std::set<int> & bound, std::set<int> & out) -> void
    {
        switch (f.connective()) {
            case Connective::equals:
            case Connective::relation:
                for (auto v : f.variables())
                    if (! bound.contains(v))
                        out.insert(v);
                break;

            case Connective::negation:
            case Connective::conjunction:
            case Connective::disjunction:
                for (auto & c : f.children())
                    collect_free(c, bound, out);
                break;

            case Connective::forall:
            case Connective::exists:
            case Connective::at_most: {
                std::vector<int> added;
                for (auto v : f.variables())
                    if (bound.insert(v).second)
                        added.push_back(v);
                collect_free(f.child(), bound, out);
                for (auto v : added)
                    bound.erase(v);
                break;
            }
        }
    }
}

auto revex::free_variables(const Formula & f) -> std::vector<int>
{
    std::set<int> bound, out;
    collect_free(f, bound, out);
    return { out.begin(), out.end() };
}

auto revex::is_sentence(const Formula & f) -> bool
{
    return free_variables(f).empty();
}

auto revex::max_variable(const Formula & f) -> int
{
    int result = -1;
    for (auto v : f.variables())
        result = std::max(result, v);
    for (auto & c : f.children())
        result = std::max(result, max_variable(c));
    return result;
}

auto revex::substitute(const Formula & f, const std::vector<int> & renaming) -> Formula
{
    auto rename = [&] (int v) {
        return (v < int(renaming.size()) && renaming[v] != -1) ? renaming[v] : v;
    };

    switch (f.connective()) {
        case Connective::equals:
            return Formula::equals(rename(f.variables()[0]), rename(f.variables()[1]));

        case Connective::relation: {
            std::vector<int> args;
            for (auto v : f.variables())
                args.push_back(rename(v));
            return Formula::relation(f.symbol(), std::move(args));
        }

        case Connective::negation:
            return Formula::negation(substitute(f.child(), renaming));

        case Connective::conjunction:
        case Connective::disjunction: {
            std::vector<Formula> members;
            for (auto & c : f.children())
                members.push_back(substitute(c, renaming));
            return f.connective() == Connective::conjunction ? Formula::conjunction(std::move(members))
                : Formula::disjunction(std::move(members));
        }

        case Connective::forall:
        case Connective::exists:
        case Connective::at_most: {
            auto inner = renaming;
            for (auto v : f.variables())
                if (v < int(inner.size()))
                    inner[v] = -1;
            auto body = substitute(f.child(), inner);
            if (f.connective() == Connective::forall)
                return Formula::forall(f.variable(), std::move(body));
            if (f.connective() == Connective::exists)
                return Formula::exists(f.variable(), std::move(body));
            return Formula::at_most(f.bound(), f.variables(), std::move(body));
        }
    }
    throw Error("unreachable connective");
}

namespace
{
    class Evaluator
    {
        private:
            const Structure & _s;

        public:
            explicit Evaluator(const Structure & s) :
                _s(s)
            {
            }

            auto check(const Formula & f) const -> void
            {
                if (f.connective() == Connective::relation) {
                    if (f.symbol() >= _s.signature().size())
                        throw EvaluationError("relation symbol R" + std::to_string(f.symbol())
                                + " is not in a signature of " + std::to_string(_s.signature().size()) + " symbols");
                    if (int(f.variables().size()) != _s.signature().arity(f.symbol()))
                        throw EvaluationError("R" + std::to_string(f.symbol()) + " used with "
                                + std::to_string(f.variables().size()) + " arguments but has arity "
                                + std::to_string(_s.signature().arity(f.symbol())));
                }
                for (auto & c : f.children())
                    check(c);
            }

            auto eval(const Formula & f, std::vector<int> & val) -> bool
            {
                switch (f.connective()) {
                    case Connective::equals:
                        return val[f.variables()[0]] == val[f.variables()[1]];

                    case Connective::relation: {
                        std::uint64_t code = 0, n = _s.domain();
                        for (auto v : f.variables())
                            code = code * n + std::uint64_t(val[v]);
                        return _s.contains_code(f.symbol(), code);
                    }

                    case Connective::negation:
                        return ! eval(f.child(), val);

                    case Connective::conjunction:
                        for (auto & c : f.children())
                            if (! eval(c, val))
                                return false;
                        return true;

                    case Connective::disjunction:
                        for (auto & c : f.children())
                            if (eval(c, val))
                                return true;
                        return false;

                    case Connective::forall:
                    case Connective::exists: {
                        bool want = f.connective() == Connective::exists;
                        int v = f.variable(), saved = val[v];
                        bool result = ! want;
                        for (int x = 0 ; x < _s.domain() ; ++x) {
                            val[v] = x;
                            if (eval(f.child(), val) == want) {
                                result = want;
                                break;
                            }
                        }
                        val[v] = saved;
                        return result;
                    }

                    case Connective::at_most: {
                        auto & block = f.variables();
                        std::vector<int> saved;
                        for (auto v : block)
                            saved.push_back(val[v]);
                        for (auto v : block)
                            val[v] = 0;

                        long count = 0;
                        bool done = false;
                        while (! done) {
                            if (eval(f.child(), val) && ++count > f.bound())
                                break;
                            // odometer step, last block variable fastest
                            int i = int(block.size()) - 1;
                            while (i >= 0 && ++val[block[i]] == _s.domain())
                                val[block[i--]] = 0;
                            done = i < 0;
                        }

                        for (std::size_t i = 0 ; i < block.size() ; ++i)
                            val[block[i]] = saved[i];
                        return count <= f.bound();
                    }
                }
                throw Error("unreachable connective");
            }
    };
}

auto revex::evaluate(const Formula & f, const Structure & s, const Valuation & valuation) -> bool
{
    Evaluator e(s);
    e.check(f);

    std::vector<int> val(std::max<std::size_t>(std::size_t(max_variable(f) + 1), valuation.size()), -1);
    std::copy(valuation.begin(), valuation.end(), val.begin());
    for (auto v : free_variables(f)) {
        if (val[v] == -1)
            throw EvaluationError("free variable v" + std::to_string(v) + " is not assigned");
        if (val[v] < 0 || val[v] >= s.domain())
            throw EvaluationError("v" + std::to_string(v) + " is assigned " + std::to_string(val[v])
                    + ", outside the domain");
    }
    return e.eval(f, val);
}

namespace
{
    auto all_classes() -> SyntacticClass
    {
        return SyntacticClass{ true, true, true, true, true, true };
    }

    auto meet(SyntacticClass a, const SyntacticClass & b) -> SyntacticClass
    {
        a.positive = a.positive && b.positive;
        a.negative = a.negative && b.negative;
        a.f = a.f && b.f;
        a.g = a.g && b.g;
        a.neg_f = a.neg_f && b.neg_f;
        a.neg_g = a.neg_g && b.neg_g;
        return a;
    }

    auto universal_closure(const SyntacticClass & c) -> SyntacticClass
    {
        // F and G are closed under A; the not-F / not-G classes only admit A over N / P.
        return SyntacticClass{ c.positive, c.negative, c.f, c.g, c.negative, c.positive };
    }

    auto existential_closure(const SyntacticClass & c) -> SyntacticClass
    {
        return SyntacticClass{ c.positive, c.negative, c.positive, c.negative, c.neg_f, c.neg_g };
    }
}

auto revex::classify(const Formula & f) -> SyntacticClass
{
    switch (f.connective()) {
        case Connective::equals:
            return all_classes();

        case Connective::relation:
            return SyntacticClass{ true, false, true, true, true, true };

        case Connective::negation:
            switch (f.child().connective()) {
                case Connective::equals:
                    return all_classes();
                case Connective::relation:
                    return SyntacticClass{ false, true, true, true, true, true };
                default:
                    return SyntacticClass{ };
            }

        case Connective::conjunction:
        case Connective::disjunction: {
            auto result = all_classes();
            for (auto & c : f.children())
                result = meet(result, classify(c));
            return result;
        }

        case Connective::forall:
            return universal_closure(classify(f.child()));

        case Connective::exists:
            return existential_closure(classify(f.child()));

        case Connective::at_most:
            // the universal form over n+1 copies of the rewritten body, plus equalities
            return universal_closure(classify(transform_neg(f.child())));
    }
    throw Error("unreachable connective");
}

namespace
{
    template <typename F_>
    auto rebuild(const Formula & f, F_ && recurse) -> Formula
    {
        switch (f.connective()) {
            case Connective::equals:
            case Connective::relation:
                return f;
            case Connective::negation:
                return Formula::negation(recurse(f.child()));
            case Connective::conjunction:
            case Connective::disjunction: {
                std::vector<Formula> members;
                for (auto & c : f.children())
                    members.push_back(recurse(c));
                return f.connective() == Connective::conjunction ? Formula::conjunction(std::move(members))
                    : Formula::disjunction(std::move(members));
            }
            case Connective::forall:
                return Formula::forall(f.variable(), recurse(f.child()));
            case Connective::exists:
                return Formula::exists(f.variable(), recurse(f.child()));
            case Connective::at_most:
                return Formula::at_most(f.bound(), f.variables(), recurse(f.child()));
        }
        throw Error("unreachable connective");
    }
}

auto revex::transform_c(const Formula & f) -> Formula
{
    if (f.connective() == Connective::relation)
        return Formula::negation(f);
    return rebuild(f, [] (const Formula & c) { return transform_c(c); });
}

auto revex::transform_neg(const Formula & f) -> Formula
{
    switch (f.connective()) {
        case Connective::equals:
        case Connective::relation:
            return Formula::negation(f);

        case Connective::negation:
            return f.child();

        case Connective::conjunction:
        case Connective::disjunction: {
            std::vector<Formula> members;
            for (auto & c : f.children())
                members.push_back(transform_neg(c));
            return f.connective() == Connective::conjunction ? Formula::disjunction(std::move(members))
                : Formula::conjunction(std::move(members));
        }

        case Connective::forall:
            return Formula::exists(f.variable(), transform_neg(f.child()));

        case Connective::exists:
            return Formula::forall(f.variable(), transform_neg(f.child()));

        case Connective::at_most:
            return transform_neg(expand_at_most(f.bound(), f.variables(), f.child(), AtMostExpansion::rewritten));
    }
    throw Error("unreachable connective");
}

auto revex::normalize(const Formula & f) -> Formula
{
    if (f.connective() == Connective::negation && f.child().connective() == Connective::negation)
        return normalize(f.child().child());
    return rebuild(f, [] (const Formula & c) { return normalize(c); });
}

auto revex::expand_at_most(int n, const std::vector<int> & block, const Formula & body, AtMostExpansion style) -> Formula
{
    auto original = Formula::at_most(n, block, body);
    auto failed = style == AtMostExpansion::literal ? Formula::negation(body) : transform_neg(body);

    // the rewritten body may bind variables of its own; renaming into them would capture
    int fresh = std::max(max_variable(original), max_variable(failed)) + 1;
    int q = int(block.size());

    // copies[k][j] is the fresh variable standing for block[j] in copy k
    std::vector<std::vector<int>> copies(n + 1, std::vector<int>(q));
    std::vector<int> quantified;
    for (int k = 0 ; k <= n ; ++k)
        for (int j = 0 ; j < q ; ++j) {
            copies[k][j] = fresh++;
            quantified.push_back(copies[k][j]);
        }

    std::vector<Formula> disjuncts;
    for (int k = 0 ; k <= n ; ++k) {
        std::vector<int> renaming(std::size_t(fresh), -1);
        for (int j = 0 ; j < q ; ++j)
            renaming[block[j]] = copies[k][j];
        disjuncts.push_back(substitute(failed, renaming));
    }
    for (int k = 0 ; k <= n ; ++k)
        for (int l = k + 1 ; l <= n ; ++l) {
            std::vector<Formula> same;
            for (int j = 0 ; j < q ; ++j)
                same.push_back(Formula::equals(copies[k][j], copies[l][j]));
            disjuncts.push_back(Formula::conjunction(std::move(same)));
        }

    return Formula::forall(quantified, Formula::disjunction(std::move(disjuncts)));
}

auto revex::expand_all_at_most(const Formula & f, AtMostExpansion style) -> Formula
{
    if (f.connective() == Connective::at_most)
        return expand_at_most(f.bound(), f.variables(), expand_all_at_most(f.child(), style), style);
    return rebuild(f, [style] (const Formula & c) { return expand_all_at_most(c, style); });
}

auto revex::phi_irreflexive(int symbol) -> Formula
{
    return Formula::forall(0, Formula::negation(Formula::relation(symbol, { 0, 0 })));
}

auto revex::phi_reflexive(int symbol) -> Formula
{
    return Formula::forall(0, Formula::relation(symbol, { 0, 0 }));
}

auto revex::phi_symmetric(int symbol) -> Formula
{
    return Formula::forall({ 0, 1 }, Formula::disjunction({
                Formula::negation(Formula::relation(symbol, { 0, 1 })),
                Formula::relation(symbol, { 1, 0 }) }));
}

auto revex::phi_transitive(int symbol) -> Formula
{
    return Formula::forall({ 0, 1, 2 }, Formula::disjunction({
                Formula::negation(Formula::relation(symbol, { 0, 1 })),
                Formula::negation(Formula::relation(symbol, { 1, 2 })),
                Formula::relation(symbol, { 0, 2 }) }));
}

auto revex::phi_connected(int n, int symbol) -> Formula
{
    if (n < 1)
        throw PreconditionError("phi_connected needs a positive domain size");

    std::vector<Formula> ways{ Formula::equals(0, 1), Formula::relation(symbol, { 0, 1 }) };
    for (int inner = 1 ; inner <= n - 2 ; ++inner) {
        std::vector<int> path{ 0 };
        for (int i = 0 ; i < inner ; ++i)
            path.push_back(2 + i);
        path.push_back(1);

        std::vector<Formula> steps;
        for (std::size_t i = 0 ; i + 1 < path.size() ; ++i)
            steps.push_back(Formula::relation(symbol, { path[i], path[i + 1] }));
        ways.push_back(Formula::exists(std::vector<int>(path.begin() + 1, path.end() - 1),
                    Formula::conjunction(std::move(steps))));
    }
    return Formula::forall({ 0, 1 }, Formula::disjunction(std::move(ways)));
}

auto revex::degree_at_most(int d, int symbol) -> Formula
{
    return Formula::forall(0, Formula::at_most(d, { 1 }, Formula::relation(symbol, { 0, 1 })));
}

namespace
{
    auto pattern_literals(const Structure & pattern, int cap, bool flipped) -> std::vector<Formula>
    {
        if (pattern.domain() > cap)
            throw BudgetExceeded("pattern on " + std::to_string(pattern.domain()) + " points exceeds the cap of "
                    + std::to_string(cap));

        std::vector<Formula> result;
        int m = pattern.domain();
        for (int j = 0 ; j < m ; ++j)
            for (int k = j + 1 ; k < m ; ++k)
                result.push_back(flipped ? Formula::equals(j, k) : Formula::negation(Formula::equals(j, k)));

        for (int i = 0 ; i < pattern.signature().size() ; ++i)
            for (std::uint64_t code = 0 ; code < pattern.space(i) ; ++code) {
                auto atom = Formula::relation(i, pattern.decode(i, code));
                bool present = pattern.contains_code(i, code) != flipped;
                result.push_back(present ? atom : Formula::negation(atom));
            }
        return result;
    }

    auto pattern_variables(const Structure & pattern) -> std::vector<int>
    {
        std::vector<int> vars(pattern.domain());
        for (int j = 0 ; j < pattern.domain() ; ++j)
            vars[j] = j;
        return vars;
    }
}

auto revex::embed_sentence(const Structure & pattern, int cap) -> Formula
{
    return Formula::exists(pattern_variables(pattern),
            Formula::conjunction(pattern_literals(pattern, cap, false)));
}

auto revex::forbid_sentence(const Structure & pattern, int cap) -> Formula
{
    return Formula::forall(pattern_variables(pattern),
            Formula::disjunction(pattern_literals(pattern, cap, true)));
}
