#pragma once

#include <profiles/profile.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace profiles
{
    /// coefficient * prod_j X_j^exponents[j], indexed by the owning system's variable list.
    struct Monomial
    {
        Profile coefficient;
        std::vector<unsigned> exponents;

        [[nodiscard]] auto is_constant() const -> bool;
        [[nodiscard]] friend auto operator==(const Monomial &, const Monomial &) -> bool = default;
    };

    /**
     * A polynomial with profile coefficients. Monomials keep their first
     * insertion order; adding a monomial whose exponent vector is already
     * present merges the coefficients, and zero coefficients are dropped.
     */
    class Polynomial
    {
    public:
        Polynomial() = default;
        explicit Polynomial(std::size_t num_variables) : _num_variables(num_variables) {}

        auto add_term(const Profile & coefficient, std::vector<unsigned> exponents) -> void;

        /// Extends every exponent vector with zeros.
        auto resize_variables(std::size_t num_variables) -> void;

        [[nodiscard]] auto monomials() const -> std::span<const Monomial> { return _monomials; }
        [[nodiscard]] auto num_variables() const -> std::size_t { return _num_variables; }
        [[nodiscard]] auto empty() const -> bool { return _monomials.empty(); }

        [[nodiscard]] friend auto operator==(const Polynomial &, const Polynomial &) -> bool = default;

    private:
        std::size_t _num_variables = 0;
        std::vector<Monomial> _monomials;
    };

    [[nodiscard]] auto operator+(const Polynomial & a, const Polynomial & b) -> Polynomial;

    /// c * p, multiplying every coefficient.
    [[nodiscard]] auto scale(const Profile & c, const Polynomial & p) -> Polynomial;

    struct Equation
    {
        Polynomial lhs;
        Profile rhs;
    };

    struct EquationSystem
    {
        std::vector<std::string> variables;
        std::vector<Equation> equations;

        [[nodiscard]] auto variable_index(std::string_view name) const -> std::optional<std::size_t>;
    };

    /// One profile per system variable, in the system's variable order.
    using Assignment = std::vector<Profile>;

    /// Exponent 0 contributes (1), so X^0 evaluates to (1) even for X = (0).
    [[nodiscard]] auto evaluate(const Polynomial & p, std::span<const Profile> values) -> Profile;
    [[nodiscard]] auto evaluate(const Monomial & m, std::span<const Profile> values) -> Profile;

    [[nodiscard]] auto satisfies(const EquationSystem & system, std::span<const Profile> values) -> bool;

    inline constexpr unsigned max_exponent = 15;

    /**
     * One equation per line, '#' starts a comment:
     *
     *   equation := poly "=" profile
     *   poly     := term ("+" term)*
     *   term     := factor ("*" factor)*
     *   factor   := profile | natural | var ("^" natural)?
     *
     * A bare natural n stands for (n). Variables are numbered in order of
     * first occurrence. Throws ParseError.
     */
    [[nodiscard]] auto parse_equation_system(std::string_view text) -> EquationSystem;

    [[nodiscard]] auto format_polynomial(const Polynomial & p, std::span<const std::string> variables) -> std::string;
    [[nodiscard]] auto format_system(const EquationSystem & system) -> std::string;

    /// "VAR = (a,b)" lines, records separated by "---".
    [[nodiscard]] auto format_solutions(const EquationSystem & system, std::span<const Assignment> solutions) -> std::string;

    enum class SolveMode
    {
        First,
        All,
        Count
    };

    inline constexpr std::uint64_t default_max_candidates = 100'000'000;

    struct SolveOptions
    {
        SolveMode mode = SolveMode::All;
        /// Upper limit on candidate tuples (partial or complete) the search may visit.
        std::uint64_t max_candidates = default_max_candidates;
        unsigned threads = 1;
    };

    struct SolveResult
    {
        /// Empty in Count mode; at most one entry in First mode.
        std::vector<Assignment> solutions;
        std::uint64_t count = 0;
        std::uint64_t explored = 0;
    };

    /// Elementwise maximum of the right-hand sides.
    [[nodiscard]] auto candidate_bound(const EquationSystem & system) -> Profile;

    /// (0) followed by every valid profile dominated by `bound`, in canonical order.
    [[nodiscard]] auto candidate_profiles(const Profile & bound) -> std::vector<Profile>;

    /// Number of candidate profiles under `bound`, saturating at 2^64 - 1.
    [[nodiscard]] auto candidate_count(const Profile & bound) -> std::uint64_t;

    /// |candidates|^|variables|, saturating at 2^64 - 1.
    [[nodiscard]] auto candidate_space_size(const EquationSystem & system) -> std::uint64_t;

    /**
     * Complete search for solutions of a system with constant right-hand
     * sides. Any solvable system has a solution whose profiles are all
     * dominated by the elementwise maximum of the right-hand sides, so
     * searching that box (plus (0)) loses nothing; solutions are the
     * assignments inside the box.
     *
     * Variables are assigned in system order, candidates in canonical
     * order, and a partial assignment is cut as soon as the monomials it
     * fully determines already exceed some right-hand side. Throws
     * SearchLimitError when more than options.max_candidates tuples are
     * visited, or when a single variable already has more candidates
     * than that.
     */
    [[nodiscard]] auto solve(const EquationSystem & system, const SolveOptions & options = {}) -> SolveResult;

    /// Naive enumeration of the same candidate box, no pruning. Test oracle for solve.
    [[nodiscard]] auto brute_force_oracle(const EquationSystem & system, std::uint64_t max_tuples = 10'000'000) -> std::vector<Assignment>;

    struct NatMonomial
    {
        std::uint64_t coefficient;
        std::vector<unsigned> exponents;
    };

    struct NatEquation
    {
        std::vector<NatMonomial> lhs;
        std::uint64_t rhs;
    };

    struct NatSystem
    {
        std::vector<std::string> variables;
        std::vector<NatEquation> equations;
        /// True when every coefficient and right-hand side has height 0, in
        /// which case solvability over the naturals and over profiles coincide.
        /// Otherwise the projection is only a necessary condition.
        bool exact;
    };

    /// Replaces every profile constant by its size.
    [[nodiscard]] auto size_projection(const EquationSystem & system) -> NatSystem;

    [[nodiscard]] auto evaluate(const NatEquation & equation, std::span<const std::uint64_t> values) -> std::uint64_t;
    [[nodiscard]] auto satisfies(const NatSystem & system, std::span<const std::uint64_t> values) -> bool;

    /**
     * Folds a system p_i(X) = (1), i = 1..n, into the single equation
     * sum_i e_i p_i(X) = sum_i e_i with e_i the all-ones profile of length i.
     * Throws DomainError if some right-hand side is not (1).
     */
    [[nodiscard]] auto combine_to_single(const EquationSystem & system) -> EquationSystem;
}
