#pragma once

#include <profiles/profile.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace profiles
{
    /**
     * Exact division: the q with d * q = r, if one exists. Quotients are
     * unique because the product is solved entry by entry:
     *   r_0 = d_0 q_0,   r_i = d_i Q_{i-1} + q_i D_i  (i >= 1)
     * where D_i, Q_i are inclusive prefix sums and D_i >= d_0 >= 1.
     *
     * Throws DomainError when d is the zero profile.
     */
    [[nodiscard]] auto try_divide(const Profile & r, const Profile & d) -> std::optional<Profile>;

    /// All divisors of p in canonical order. p must be nonzero.
    [[nodiscard]] auto divisors(const Profile & p) -> std::vector<Profile>;

    /// Some divisor other than (1) and p, if any.
    [[nodiscard]] auto nontrivial_divisor(const Profile & p) -> std::optional<Profile>;

    /// Throws DomainError for (0) and (1), which are neither irreducible nor reducible.
    [[nodiscard]] auto is_irreducible(const Profile & p) -> bool;

    [[nodiscard]] auto is_prime(count_t n) -> bool;

    /// Irreducible factors in non-decreasing canonical order; empty for (1).
    using Factorisation = std::vector<Profile>;

    /// Every distinct factorisation into irreducibles, each sorted, listed in canonical order.
    [[nodiscard]] auto factorisations(const Profile & p) -> std::vector<Factorisation>;

    /**
     * Enumerates the profiles of a fixed size (compositions of the size)
     * in canonical order: by number of entries, then lexicographically.
     */
    class ProfilesOfSize
    {
    public:
        explicit ProfilesOfSize(count_t size);

        /// The next profile, or nullopt once all have been produced.
        [[nodiscard]] auto next() -> std::optional<Profile>;

    private:
        count_t _size;
        std::vector<count_t> _parts;
        bool _started = false, _done = false;

        auto advance_within_length() -> bool;
    };

    [[nodiscard]] auto profiles_of_size(count_t size) -> std::vector<Profile>;

    struct CensusReport
    {
        count_t n;
        count_t total;
        count_t reducible;
        double bound;
        double ratio;
    };

    inline constexpr count_t default_census_limit = 20;

    /**
     * Classifies every profile of size at most n. The zero profile counts as
     * reducible since (0) = (0) * q for any q, matching the counting in the
     * analytic bound.
     *
     * Returns one cumulative report per size 1..n. Throws DomainError when n
     * exceeds `limit`.
     */
    [[nodiscard]] auto census_table(count_t n, count_t limit = default_census_limit, unsigned threads = 1) -> std::vector<CensusReport>;
    [[nodiscard]] auto census(count_t n, count_t limit = default_census_limit, unsigned threads = 1) -> CensusReport;

    /// 1 + n (sqrt(2^(n+1)) - 1) / (sqrt 2 - 1)
    [[nodiscard]] auto census_bound(count_t n) -> double;

    [[nodiscard]] auto format_census_table(const std::vector<CensusReport> & rows) -> std::string;
    [[nodiscard]] auto format_census_lines(const std::vector<CensusReport> & rows) -> std::string;

    /// For a height-0 profile (n): a nontrivial divisor (d), or nullopt when n is prime.
    [[nodiscard]] auto factor_nat_profile(const Profile & p) -> std::optional<Profile>;
}
