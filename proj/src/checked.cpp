#include <profiles/checked.hpp>
#include <profiles/errors.hpp>

#include <string>

namespace profiles::detail
{
    auto throw_add_overflow(count_t a, count_t b) -> void
    {
        throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }

    auto throw_mul_overflow(count_t a, count_t b) -> void
    {
        throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
}
