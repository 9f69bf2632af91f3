#include <profiles/errors.hpp>
#include <profiles/reductions.hpp>

#include <cctype>
#include <cstdlib>

namespace profiles
{
    auto validate(const Cnf3Formula & f) -> void
    {
        for (std::size_t c = 0; c < f.clauses.size(); ++c)
            for (auto & lit : f.clauses[c])
                if (lit.variable < 1 || lit.variable > f.num_vars)
                    throw DomainError("clause " + std::to_string(c + 1) + " mentions variable " + std::to_string(lit.variable) + " outside [1, " +
                        std::to_string(f.num_vars) + "]");
    }

    namespace
    {
        auto positive_index(std::size_t variable) -> std::size_t { return 2 * (variable - 1); }
        auto negative_index(std::size_t variable) -> std::size_t { return 2 * (variable - 1) + 1; }
    }

    auto sat_to_system(const Cnf3Formula & f) -> EquationSystem
    {
        validate(f);
        EquationSystem system;
        for (std::size_t i = 1; i <= f.num_vars; ++i) {
            system.variables.push_back("X" + std::to_string(i));
            system.variables.push_back("Xn" + std::to_string(i));
        }

        auto n = system.variables.size();
        auto unit = [&](std::size_t index) {
            std::vector<unsigned> e(n, 0);
            e[index] = 1;
            return e;
        };

        for (std::size_t i = 1; i <= f.num_vars; ++i) {
            Polynomial p(n);
            p.add_term(Profile::one(), unit(positive_index(i)));
            p.add_term(Profile::one(), unit(negative_index(i)));
            system.equations.push_back({std::move(p), Profile::one()});
        }

        for (auto & clause : f.clauses) {
            Polynomial p(n);
            for (auto & lit : clause)
                p.add_term(Profile::one(), unit(lit.positive ? positive_index(lit.variable) : negative_index(lit.variable)));
            system.equations.push_back({std::move(p), Profile::one()});
        }
        return system;
    }

    auto solution_to_assignment(const EquationSystem & system, const Assignment & a, const Cnf3Formula & f) -> std::vector<bool>
    {
        std::vector<bool> truth(f.num_vars);
        for (std::size_t i = 1; i <= f.num_vars; ++i) {
            auto index = system.variable_index("X" + std::to_string(i));
            if (! index || *index >= a.size())
                throw DomainError("assignment has no value for X" + std::to_string(i));
            auto & value = a[*index];
            if (! value.is_zero() && ! value.is_one())
                throw DomainError("X" + std::to_string(i) + " = " + format_profile(value) + " is not a Boolean profile");
            truth[i - 1] = value.is_one();
        }
        return truth;
    }

    auto one_in_three_satisfied(const Cnf3Formula & f, const std::vector<bool> & truth) -> bool
    {
        for (auto & clause : f.clauses) {
            int true_literals = 0;
            for (auto & lit : clause)
                if (truth.at(lit.variable - 1) == lit.positive)
                    ++true_literals;
            if (true_literals != 1)
                return false;
        }
        return true;
    }

    namespace
    {
        struct Field
        {
            std::string_view text;
            std::size_t column;
        };

        auto fields_of(std::string_view line) -> std::vector<Field>
        {
            std::vector<Field> out;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                auto start = pos;
                while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                if (pos > start)
                    out.push_back({line.substr(start, pos - start), start + 1});
            }
            return out;
        }

        auto integer(const Field & f, std::size_t line, bool allow_sign) -> long long
        {
            std::string s(f.text);
            auto digits = s.size() > 0 && s[0] == '-' && allow_sign ? 1u : 0u;
            if (digits == s.size())
                throw ParseError(line, f.column, "expected an integer");
            for (auto i = digits; i < s.size(); ++i)
                if (! std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError(line, f.column + i, "expected an integer");
            if (s.size() > 18)
                throw ParseError(line, f.column, "integer out of range");
            return std::stoll(s);
        }
    }

    auto parse_cnf3(std::string_view text) -> Cnf3Formula
    {
        Cnf3Formula f;
        bool have_header = false;
        std::size_t expected_clauses = 0, line_number = 0, pos = 0;

        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            auto line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_number;

            auto fields = fields_of(line);
            if (fields.empty() || fields[0].text == "c")
                continue;

            if (! have_header) {
                if (fields[0].text != "p")
                    throw ParseError(line_number, fields[0].column, "expected header 'p oitcnf <vars> <clauses>'");
                if (fields.size() != 4 || fields[1].text != "oitcnf")
                    throw ParseError(line_number, fields.size() > 1 ? fields[1].column : fields[0].column, "bad header, expected 'p oitcnf <vars> <clauses>'");
                f.num_vars = static_cast<std::size_t>(integer(fields[2], line_number, false));
                expected_clauses = static_cast<std::size_t>(integer(fields[3], line_number, false));
                have_header = true;
                continue;
            }

            if (fields.size() != 4 || fields[3].text != "0")
                throw ParseError(line_number, fields.back().column,
                    "a clause must have exactly three literals terminated by 0, found " + std::to_string(fields.size()) + " fields");

            Clause clause{};
            for (std::size_t k = 0; k < 3; ++k) {
                auto value = integer(fields[k], line_number, true);
                if (value == 0)
                    throw ParseError(line_number, fields[k].column, "literal 0 inside a clause");
                auto var = static_cast<std::size_t>(std::llabs(value));
                if (var > f.num_vars)
                    throw ParseError(line_number, fields[k].column, "variable " + std::to_string(var) + " exceeds the declared " + std::to_string(f.num_vars));
                clause[k] = {var, value > 0};
            }
            f.clauses.push_back(clause);
        }

        if (! have_header)
            throw ParseError(1, 1, "missing header 'p oitcnf <vars> <clauses>'");
        if (f.clauses.size() != expected_clauses)
            throw ParseError(line_number, 1, "header declares " + std::to_string(expected_clauses) + " clauses, found " + std::to_string(f.clauses.size()));
        return f;
    }

    auto format_cnf3(const Cnf3Formula & f) -> std::string
    {
        std::string out = "p oitcnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
        for (auto & clause : f.clauses) {
            for (auto & lit : clause)
                out += (lit.positive ? "" : "-") + std::to_string(lit.variable) + " ";
            out += "0\n";
        }
        return out;
    }
}
