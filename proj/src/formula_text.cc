/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/formula.hh>

#include <cctype>
#include <set>
#include <string>

using namespace revex;

namespace
{
    class Parser
    {
        private:
            std::string_view _text;
            std::size_t _pos = 0;

            [[noreturn]] auto fail(const std::string & message) const -> void
            {
                throw SyntaxError(message, _pos);
            }

            auto skip_space() -> void
            {
                while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
            }

            auto peek() -> char
            {
                skip_space();
                return _pos < _text.size() ? _text[_pos] : '\0';
            }

            auto describe_here() -> std::string
            {
                skip_space();
                if (_pos >= _text.size())
                    return "end of input";
                return std::string("'") + _text[_pos] + "'";
            }

            auto expect(char c) -> void
            {
                if (peek() != c)
                    fail(std::string("expected '") + c + "', found " + describe_here());
                ++_pos;
            }

            auto nat() -> int
            {
                if (_pos >= _text.size() || ! std::isdigit(static_cast<unsigned char>(_text[_pos])))
                    fail("expected a number, found " + describe_here());
                long value = 0;
                while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                    value = value * 10 + (_text[_pos++] - '0');
                    if (value > 1000000)
                        fail("number too large");
                }
                return int(value);
            }

            auto variable() -> int
            {
                if (peek() != 'v')
                    fail("expected a variable, found " + describe_here());
                ++_pos;
                return nat();
            }

            auto variable_list(char close) -> std::vector<int>
            {
                std::vector<int> result{ variable() };
                while (peek() == ',') {
                    ++_pos;
                    result.push_back(variable());
                }
                expect(close);
                return result;
            }

            auto group() -> Formula
            {
                expect('(');
                std::vector<Formula> members{ formula() };
                char op = peek();
                if (op != '&' && op != '|')
                    fail("expected '&' or '|' inside parentheses, found " + describe_here());
                while (peek() == op) {
                    ++_pos;
                    members.push_back(formula());
                }
                char next = peek();
                if (next == '&' || next == '|')
                    fail("'&' and '|' cannot be mixed in one parenthesised group");
                expect(')');
                return op == '&' ? Formula::conjunction(std::move(members)) : Formula::disjunction(std::move(members));
            }

            auto quantifier(char q) -> Formula
            {
                ++_pos;
                skip_space();
                if (q == 'E' && _text.substr(_pos, 2) == "<=") {
                    _pos += 2;
                    skip_space();
                    int bound = nat();
                    expect('[');
                    auto start = _pos;
                    auto block = variable_list(']');
                    if (std::set<int>(block.begin(), block.end()).size() != block.size())
                        throw SyntaxError("repeated variable in counted block", start);
                    expect('.');
                    return Formula::at_most(bound, std::move(block), formula());
                }
                int v = variable();
                expect('.');
                auto body = formula();
                return q == 'A' ? Formula::forall(v, std::move(body)) : Formula::exists(v, std::move(body));
            }

            auto atom() -> Formula
            {
                if (peek() == 'R') {
                    ++_pos;
                    int symbol = nat();
                    expect('(');
                    return Formula::relation(symbol, variable_list(')'));
                }
                int v = variable();
                expect('=');
                return Formula::equals(v, variable());
            }

        public:
            explicit Parser(std::string_view text) :
                _text(text)
            {
            }

            auto formula() -> Formula
            {
                switch (peek()) {
                    case '~':
                        ++_pos;
                        return Formula::negation(formula());
                    case '(':
                        return group();
                    case 'A':
                    case 'E':
                        return quantifier(_text[_pos]);
                    case 'R':
                    case 'v':
                        return atom();
                    default:
                        fail("expected a formula, found " + describe_here());
                }
            }

            auto finish() -> void
            {
                if (peek() != '\0')
                    fail("unexpected trailing " + describe_here());
            }
    };

    auto var(int v) -> std::string
    {
        return "v" + std::to_string(v);
    }

    auto var_list(const std::vector<int> & vars) -> std::string
    {
        std::string result;
        for (std::size_t i = 0 ; i < vars.size() ; ++i) {
            if (i > 0)
                result += ",";
            result += var(vars[i]);
        }
        return result;
    }

    auto print(const Formula & f, std::string & out) -> void
    {
        switch (f.connective()) {
            case Connective::equals:
                out += var(f.variables()[0]) + " = " + var(f.variables()[1]);
                break;
            case Connective::relation:
                out += "R" + std::to_string(f.symbol()) + "(" + var_list(f.variables()) + ")";
                break;
            case Connective::negation:
                out += "~";
                print(f.child(), out);
                break;
            case Connective::conjunction:
            case Connective::disjunction: {
                const char * op = f.connective() == Connective::conjunction ? " & " : " | ";
                out += "(";
                for (std::size_t i = 0 ; i < f.children().size() ; ++i) {
                    if (i > 0)
                        out += op;
                    print(f.children()[i], out);
                }
                out += ")";
                break;
            }
            case Connective::forall:
                out += "A " + var(f.variable()) + " . ";
                print(f.child(), out);
                break;
            case Connective::exists:
                out += "E " + var(f.variable()) + " . ";
                print(f.child(), out);
                break;
            case Connective::at_most:
                out += "E<=" + std::to_string(f.bound()) + " [" + var_list(f.variables()) + "] . ";
                print(f.child(), out);
                break;
        }
    }
}

auto revex::parse_formula(std::string_view text) -> Formula
{
    Parser parser(text);
    auto result = parser.formula();
    parser.finish();
    return result;
}

auto revex::to_string(const Formula & f) -> std::string
{
    std::string result;
    print(f, result);
    return result;
}
