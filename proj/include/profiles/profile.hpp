#pragma once

#include <profiles/checked.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace profiles
{
    class Profile;

    namespace detail
    {
        /// Wraps a vector already known to be canonical (no zero entries).
        [[nodiscard]] auto trusted_profile(std::vector<count_t> canonical) -> Profile;
    }

    /**
     * The topographic profile of a finite dynamical system: entry i counts
     * the states at distance i from a limit cycle.
     *
     * Stored canonically without trailing zeros, so every stored entry is
     * at least 1 and the zero profile (the profile of the empty system) is
     * the empty sequence. Entries past the end read as zero.
     *
     * Ordering is the canonical one used throughout the library: by size,
     * then by number of entries, then lexicographically.
     */
    class Profile
    {
    public:
        /// The zero profile.
        Profile() = default;

        [[nodiscard]] static auto zero() -> Profile { return Profile{}; }
        [[nodiscard]] static auto one() -> Profile;

        [[nodiscard]] auto counts() const -> std::span<const count_t> { return _counts; }
        [[nodiscard]] auto is_zero() const -> bool { return _counts.empty(); }
        [[nodiscard]] auto is_one() const -> bool { return _counts.size() == 1 && _counts[0] == 1; }

        /// Number of stored entries; 0 for the zero profile.
        [[nodiscard]] auto length() const -> std::size_t { return _counts.size(); }

        /// Index of the last stored entry. Must not be called on the zero profile.
        [[nodiscard]] auto height() const -> std::size_t;

        [[nodiscard]] auto operator[](std::size_t i) const -> count_t { return i < _counts.size() ? _counts[i] : 0; }

        [[nodiscard]] friend auto operator==(const Profile &, const Profile &) -> bool = default;
        [[nodiscard]] friend auto operator<=>(const Profile & a, const Profile & b) -> std::strong_ordering;

    private:
        friend auto detail::trusted_profile(std::vector<count_t>) -> Profile;
        explicit Profile(std::vector<count_t> canonical) : _counts(std::move(canonical)) {}

        std::vector<count_t> _counts;
    };

    /// Validates and trims. Throws ShapeError if a zero entry precedes a nonzero one.
    [[nodiscard]] auto make_profile(std::span<const count_t> counts) -> Profile;
    [[nodiscard]] auto make_profile(std::initializer_list<count_t> counts) -> Profile;

    [[nodiscard]] auto add(const Profile & p, const Profile & q) -> Profile;

    /// Product of profiles: the profile of the tensor product of any two realising systems.
    [[nodiscard]] auto mul(const Profile & p, const Profile & q) -> Profile;

    [[nodiscard]] auto scalar_mul(count_t n, const Profile & p) -> Profile;
    [[nodiscard]] auto power(const Profile & p, unsigned exponent) -> Profile;

    /// The copy of n inside the profiles: (n), or (0) for n = 0.
    [[nodiscard]] auto embed_nat(count_t n) -> Profile;

    /// Sum of entries, i.e. the number of states of any realising system.
    [[nodiscard]] auto size(const Profile & p) -> count_t;

    /// Elementwise p_i <= q_i for all i.
    [[nodiscard]] auto dominated_by(const Profile & p, const Profile & q) -> bool;

    /// All-ones profile with `length` entries; length must be at least 1.
    [[nodiscard]] auto ones_profile(std::size_t length) -> Profile;

    struct GeneratorDecomposition
    {
        count_t coefficient;
        Profile generator;
    };

    /// Writes q = c * (1) + g with g_0 = 1. Throws DomainError on the zero profile.
    [[nodiscard]] auto generator_decompose(const Profile & q) -> GeneratorDecomposition;

    [[nodiscard]] inline auto operator+(const Profile & p, const Profile & q) -> Profile { return add(p, q); }
    [[nodiscard]] inline auto operator*(const Profile & p, const Profile & q) -> Profile { return mul(p, q); }
    [[nodiscard]] inline auto operator*(count_t n, const Profile & p) -> Profile { return scalar_mul(n, p); }

    /// Parses "(a0,a1,...)"; whitespace around tokens is ignored.
    [[nodiscard]] auto parse_profile(std::string_view text) -> Profile;
    [[nodiscard]] auto format_profile(const Profile & p) -> std::string;

    auto operator<<(std::ostream &, const Profile &) -> std::ostream &;
}
