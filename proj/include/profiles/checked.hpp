#pragma once

#include <cstdint>
#include <limits>

namespace profiles
{
    using count_t = std::uint64_t;

    namespace detail
    {
        [[noreturn]] auto throw_add_overflow(count_t a, count_t b) -> void;
        [[noreturn]] auto throw_mul_overflow(count_t a, count_t b) -> void;
    }

    [[nodiscard]] inline auto checked_add(count_t a, count_t b) -> count_t
    {
        count_t result;
        if (__builtin_add_overflow(a, b, &result)) [[unlikely]]
            detail::throw_add_overflow(a, b);
        return result;
    }

    [[nodiscard]] inline auto checked_mul(count_t a, count_t b) -> count_t
    {
        count_t result;
        if (__builtin_mul_overflow(a, b, &result)) [[unlikely]]
            detail::throw_mul_overflow(a, b);
        return result;
    }

    /// Multiplication that clamps at the maximum value instead of throwing.
    [[nodiscard]] inline auto saturating_mul(count_t a, count_t b) -> count_t
    {
        count_t result;
        if (__builtin_mul_overflow(a, b, &result))
            return std::numeric_limits<count_t>::max();
        return result;
    }
}
