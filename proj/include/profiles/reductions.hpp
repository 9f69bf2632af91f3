#pragma once

#include <profiles/equations.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace profiles
{
    struct Literal
    {
        /// 1-based variable index.
        std::size_t variable;
        bool positive;

        [[nodiscard]] friend auto operator==(const Literal &, const Literal &) -> bool = default;
    };

    using Clause = std::array<Literal, 3>;

    struct Cnf3Formula
    {
        std::size_t num_vars = 0;
        std::vector<Clause> clauses;
    };

    /// Throws DomainError if a literal names a variable outside [1, num_vars].
    auto validate(const Cnf3Formula & f) -> void;

    /**
     * One-in-three 3SAT as linear equations over profiles. Variables are
     * X1, Xn1, X2, Xn2, ...; the first num_vars equations are Xi + Xni = 1,
     * followed by L1 + L2 + L3 = 1 for each clause, where a positive literal
     * on x_i maps to Xi and a negative one to Xni.
     */
    [[nodiscard]] auto sat_to_system(const Cnf3Formula & f) -> EquationSystem;

    /// Reads x_i as "Xi = (1)". Throws DomainError on values other than (0) and (1).
    [[nodiscard]] auto solution_to_assignment(const EquationSystem & system, const Assignment & a, const Cnf3Formula & f) -> std::vector<bool>;

    /// Exactly one true literal in every clause. truth[i - 1] is the value of x_i.
    [[nodiscard]] auto one_in_three_satisfied(const Cnf3Formula & f, const std::vector<bool> & truth) -> bool;

    /**
     *   c optional comment lines
     *   p oitcnf <vars> <clauses>
     *   <lit> <lit> <lit> 0
     *
     * Throws ParseError.
     */
    [[nodiscard]] auto parse_cnf3(std::string_view text) -> Cnf3Formula;
    [[nodiscard]] auto format_cnf3(const Cnf3Formula & f) -> std::string;
}
