#include <profiles/equations.hpp>
#include <profiles/errors.hpp>

#include <algorithm>

namespace profiles
{
    auto Monomial::is_constant() const -> bool
    {
        return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
    }

    auto Polynomial::add_term(const Profile & coefficient, std::vector<unsigned> exponents) -> void
    {
        if (exponents.size() > _num_variables)
            resize_variables(exponents.size());
        exponents.resize(_num_variables, 0);

        auto existing = std::find_if(_monomials.begin(), _monomials.end(), [&](const Monomial & m) { return m.exponents == exponents; });
        if (existing != _monomials.end()) {
            existing->coefficient = add(existing->coefficient, coefficient);
            return;
        }
        if (! coefficient.is_zero())
            _monomials.push_back({coefficient, std::move(exponents)});
    }

    auto Polynomial::resize_variables(std::size_t num_variables) -> void
    {
        _num_variables = std::max(_num_variables, num_variables);
        for (auto & m : _monomials)
            m.exponents.resize(_num_variables, 0);
    }

    auto operator+(const Polynomial & a, const Polynomial & b) -> Polynomial
    {
        Polynomial result(std::max(a.num_variables(), b.num_variables()));
        for (auto & m : a.monomials())
            result.add_term(m.coefficient, m.exponents);
        for (auto & m : b.monomials())
            result.add_term(m.coefficient, m.exponents);
        return result;
    }

    auto scale(const Profile & c, const Polynomial & p) -> Polynomial
    {
        Polynomial result(p.num_variables());
        for (auto & m : p.monomials())
            result.add_term(mul(c, m.coefficient), m.exponents);
        return result;
    }

    auto EquationSystem::variable_index(std::string_view name) const -> std::optional<std::size_t>
    {
        auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - variables.begin());
    }

    auto evaluate(const Monomial & m, std::span<const Profile> values) -> Profile
    {
        if (values.size() < m.exponents.size())
            throw DomainError("assignment covers " + std::to_string(values.size()) + " of " + std::to_string(m.exponents.size()) + " variables");
        auto result = m.coefficient;
        for (std::size_t j = 0; j < m.exponents.size(); ++j)
            for (unsigned e = 0; e < m.exponents[j]; ++e)
                result = mul(result, values[j]);
        return result;
    }

    auto evaluate(const Polynomial & p, std::span<const Profile> values) -> Profile
    {
        Profile total;
        for (auto & m : p.monomials())
            total = add(total, evaluate(m, values));
        return total;
    }

    auto satisfies(const EquationSystem & system, std::span<const Profile> values) -> bool
    {
        for (auto & eq : system.equations) {
            try {
                if (evaluate(eq.lhs, values) != eq.rhs)
                    return false;
            }
            catch (const OverflowError &) {
                return false;
            }
        }
        return true;
    }

    namespace
    {
        auto format_constant(const Profile & c) -> std::string
        {
            if (c.length() <= 1)
                return std::to_string(c[0]);
            return format_profile(c);
        }
    }

    auto format_polynomial(const Polynomial & p, std::span<const std::string> variables) -> std::string
    {
        if (p.empty())
            return "0";

        std::string out;
        for (auto & m : p.monomials()) {
            if (! out.empty())
                out += " + ";
            std::string term;
            if (m.is_constant() || ! m.coefficient.is_one())
                term = format_constant(m.coefficient);
            for (std::size_t j = 0; j < m.exponents.size(); ++j) {
                if (m.exponents[j] == 0)
                    continue;
                if (! term.empty())
                    term += '*';
                term += variables[j];
                if (m.exponents[j] > 1)
                    term += '^' + std::to_string(m.exponents[j]);
            }
            out += term;
        }
        return out;
    }

    auto format_system(const EquationSystem & system) -> std::string
    {
        std::string out;
        for (auto & eq : system.equations)
            out += format_polynomial(eq.lhs, system.variables) + " = " + format_profile(eq.rhs) + '\n';
        return out;
    }

    auto format_solutions(const EquationSystem & system, std::span<const Assignment> solutions) -> std::string
    {
        std::string out;
        for (std::size_t s = 0; s < solutions.size(); ++s) {
            if (s > 0)
                out += "---\n";
            for (std::size_t j = 0; j < system.variables.size(); ++j)
                out += system.variables[j] + " = " + format_profile(solutions[s][j]) + '\n';
        }
        return out;
    }

    auto size_projection(const EquationSystem & system) -> NatSystem
    {
        NatSystem result{system.variables, {}, true};
        for (auto & eq : system.equations) {
            NatEquation projected{{}, size(eq.rhs)};
            if (eq.rhs.length() > 1)
                result.exact = false;
            for (auto & m : eq.lhs.monomials()) {
                if (m.coefficient.length() > 1)
                    result.exact = false;
                projected.lhs.push_back({size(m.coefficient), m.exponents});
            }
            result.equations.push_back(std::move(projected));
        }
        return result;
    }

    auto evaluate(const NatEquation & equation, std::span<const std::uint64_t> values) -> std::uint64_t
    {
        std::uint64_t total = 0;
        for (auto & m : equation.lhs) {
            auto term = m.coefficient;
            for (std::size_t j = 0; j < m.exponents.size(); ++j)
                for (unsigned e = 0; e < m.exponents[j]; ++e)
                    term = checked_mul(term, values[j]);
            total = checked_add(total, term);
        }
        return total;
    }

    auto satisfies(const NatSystem & system, std::span<const std::uint64_t> values) -> bool
    {
        for (auto & eq : system.equations) {
            try {
                if (evaluate(eq, values) != eq.rhs)
                    return false;
            }
            catch (const OverflowError &) {
                return false;
            }
        }
        return true;
    }

    auto combine_to_single(const EquationSystem & system) -> EquationSystem
    {
        Polynomial lhs(system.variables.size());
        Profile rhs;
        for (std::size_t i = 0; i < system.equations.size(); ++i) {
            auto & eq = system.equations[i];
            if (! eq.rhs.is_one())
                throw DomainError("equation " + std::to_string(i + 1) + " has right-hand side " + format_profile(eq.rhs) + ", expected (1)");
            auto weight = ones_profile(i + 1);
            lhs = lhs + scale(weight, eq.lhs);
            rhs = add(rhs, weight);
        }
        return EquationSystem{system.variables, {Equation{std::move(lhs), std::move(rhs)}}};
    }
}
