#include <profiles/equations.hpp>
#include <profiles/errors.hpp>

#include <cctype>

namespace profiles
{
    namespace
    {
        class LineParser
        {
        public:
            LineParser(std::string_view line, std::size_t line_number, EquationSystem & system) :
                _text(line),
                _line(line_number),
                _system(system)
            {
            }

            auto parse_equation() -> Equation
            {
                auto lhs = parse_poly();
                skip_space();
                if (! consume('='))
                    fail("expected '+', '*' or '='");
                auto rhs = parse_rhs();
                skip_space();
                if (_pos != _text.size())
                    fail("unexpected input after the right-hand side");
                return {std::move(lhs), std::move(rhs)};
            }

        private:
            std::string_view _text;
            std::size_t _line, _pos = 0;
            EquationSystem & _system;

            [[noreturn]] auto fail(const std::string & message) const -> void { fail_at(_pos, message); }

            [[noreturn]] auto fail_at(std::size_t pos, const std::string & message) const -> void
            {
                throw ParseError(_line, pos + 1, message);
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

            auto consume(char c) -> bool
            {
                if (peek() != c)
                    return false;
                ++_pos;
                return true;
            }

            auto parse_natural() -> count_t
            {
                skip_space();
                auto start = _pos;
                count_t value = 0;
                while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                    if (__builtin_mul_overflow(value, count_t{10}, &value) || __builtin_add_overflow(value, count_t(_text[_pos] - '0'), &value))
                        fail_at(start, "number does not fit in 64 bits");
                    ++_pos;
                }
                if (_pos == start)
                    fail("expected a natural number");
                return value;
            }

            auto parse_profile_literal() -> Profile
            {
                auto start = _pos;
                consume('(');
                std::vector<count_t> counts{parse_natural()};
                while (consume(','))
                    counts.push_back(parse_natural());
                if (! consume(')'))
                    fail("expected ',' or ')'");
                try {
                    return make_profile(counts);
                }
                catch (const ShapeError & e) {
                    fail_at(start, e.what());
                }
            }

            auto parse_constant() -> Profile
            {
                if (peek() == '(')
                    return parse_profile_literal();
                return embed_nat(parse_natural());
            }

            auto parse_identifier() -> std::string
            {
                auto start = _pos;
                while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
                    ++_pos;
                return std::string(_text.substr(start, _pos - start));
            }

            auto variable(const std::string & name) -> std::size_t
            {
                if (auto i = _system.variable_index(name))
                    return *i;
                _system.variables.push_back(name);
                return _system.variables.size() - 1;
            }

            auto parse_term(Polynomial & poly) -> void
            {
                auto coefficient = Profile::one();
                std::vector<unsigned> exponents(_system.variables.size(), 0);

                do {
                    auto c = peek();
                    if (c == '(' || std::isdigit(static_cast<unsigned char>(c)))
                        coefficient = mul(coefficient, parse_constant());
                    else if (std::isalpha(static_cast<unsigned char>(c))) {
                        auto index = variable(parse_identifier());
                        if (index >= exponents.size())
                            exponents.resize(index + 1, 0);
                        unsigned exponent = 1;
                        if (consume('^')) {
                            skip_space();
                            auto at = _pos;
                            auto e = parse_natural();
                            if (e > max_exponent)
                                fail_at(at, "exponent " + std::to_string(e) + " exceeds the maximum of " + std::to_string(max_exponent));
                            exponent = static_cast<unsigned>(e);
                        }
                        exponents[index] += exponent;
                        if (exponents[index] > max_exponent)
                            fail("combined exponent exceeds the maximum of " + std::to_string(max_exponent));
                    }
                    else if (c == '\0')
                        fail("unexpected end of line, expected a factor");
                    else
                        fail(std::string("unexpected '") + c + "', expected a factor");
                } while (consume('*'));

                poly.add_term(coefficient, std::move(exponents));
            }

            auto parse_poly() -> Polynomial
            {
                Polynomial poly(_system.variables.size());
                do
                    parse_term(poly);
                while (consume('+'));
                return poly;
            }

            auto parse_rhs() -> Profile
            {
                auto c = peek();
                if (std::isalpha(static_cast<unsigned char>(c))) {
                    auto at = _pos;
                    fail_at(at, "right-hand side must be a constant profile, found variable '" + parse_identifier() + "'");
                }
                if (c != '(' && ! std::isdigit(static_cast<unsigned char>(c)))
                    fail("expected a constant right-hand side");
                return parse_constant();
            }
        };
    }

    auto parse_equation_system(std::string_view text) -> EquationSystem
    {
        EquationSystem system;
        std::size_t line_number = 0, pos = 0;
        while (pos < text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            auto line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_number;

            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") == std::string_view::npos)
                continue;

            LineParser parser(line, line_number, system);
            system.equations.push_back(parser.parse_equation());
        }

        if (system.equations.empty())
            throw ParseError(1, 1, "no equations in input");

        for (auto & eq : system.equations)
            eq.lhs.resize_variables(system.variables.size());
        return system;
    }
}
