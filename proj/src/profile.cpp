#include <profiles/errors.hpp>
#include <profiles/profile.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>

namespace profiles
{
    auto detail::trusted_profile(std::vector<count_t> canonical) -> Profile
    {
        return Profile{std::move(canonical)};
    }

    auto Profile::one() -> Profile
    {
        return Profile{std::vector<count_t>{1}};
    }

    auto Profile::height() const -> std::size_t
    {
        if (_counts.empty())
            throw DomainError("the zero profile has no height");
        return _counts.size() - 1;
    }

    auto operator<=>(const Profile & a, const Profile & b) -> std::strong_ordering
    {
        if (auto c = size(a) <=> size(b); c != 0)
            return c;
        if (auto c = a._counts.size() <=> b._counts.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a._counts.begin(), a._counts.end(), b._counts.begin(), b._counts.end());
    }

    auto make_profile(std::span<const count_t> counts) -> Profile
    {
        auto end = counts.size();
        while (end > 0 && counts[end - 1] == 0)
            --end;
        for (std::size_t i = 0; i < end; ++i)
            if (counts[i] == 0)
                throw ShapeError(i, "zero entry at index " + std::to_string(i) + " is followed by a nonzero entry");
        return detail::trusted_profile(std::vector<count_t>(counts.begin(), counts.begin() + end));
    }

    auto make_profile(std::initializer_list<count_t> counts) -> Profile
    {
        return make_profile(std::span<const count_t>{counts.begin(), counts.size()});
    }

    auto add(const Profile & p, const Profile & q) -> Profile
    {
        std::vector<count_t> r(std::max(p.length(), q.length()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = checked_add(p[i], q[i]);
        return detail::trusted_profile(std::move(r));
    }

    auto mul(const Profile & p, const Profile & q) -> Profile
    {
        if (p.is_zero() || q.is_zero())
            return Profile::zero();

        // r_i = p_i Q_i + q_i P_i - p_i q_i with inclusive prefix sums, which
        // rearranges to p_i Q_{i-1} + q_i P_i and needs no subtraction.
        std::vector<count_t> r(std::max(p.length(), q.length()));
        count_t prefix_p = 0, prefix_q = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            prefix_p = checked_add(prefix_p, p[i]);
            r[i] = checked_add(checked_mul(p[i], prefix_q), checked_mul(q[i], prefix_p));
            prefix_q = checked_add(prefix_q, q[i]);
        }
        return detail::trusted_profile(std::move(r));
    }

    auto scalar_mul(count_t n, const Profile & p) -> Profile
    {
        if (n == 0)
            return Profile::zero();
        std::vector<count_t> r(p.counts().begin(), p.counts().end());
        for (auto & x : r)
            x = checked_mul(n, x);
        return detail::trusted_profile(std::move(r));
    }

    auto power(const Profile & p, unsigned exponent) -> Profile
    {
        if (exponent == 0)
            return Profile::one();
        auto result = p;
        for (unsigned i = 1; i < exponent; ++i)
            result = mul(result, p);
        return result;
    }

    auto embed_nat(count_t n) -> Profile
    {
        if (n == 0)
            return Profile::zero();
        return detail::trusted_profile({n});
    }

    auto size(const Profile & p) -> count_t
    {
        count_t total = 0;
        for (auto x : p.counts())
            total = checked_add(total, x);
        return total;
    }

    auto dominated_by(const Profile & p, const Profile & q) -> bool
    {
        if (p.length() > q.length())
            return false;
        for (std::size_t i = 0; i < p.length(); ++i)
            if (p[i] > q[i])
                return false;
        return true;
    }

    auto ones_profile(std::size_t length) -> Profile
    {
        if (length == 0)
            throw DomainError("all-ones profile needs at least one entry");
        return detail::trusted_profile(std::vector<count_t>(length, 1));
    }

    auto generator_decompose(const Profile & q) -> GeneratorDecomposition
    {
        if (q.is_zero())
            throw DomainError("the zero profile has no generator decomposition");
        std::vector<count_t> g(q.counts().begin(), q.counts().end());
        g[0] = 1;
        return {q[0] - 1, detail::trusted_profile(std::move(g))};
    }

    namespace
    {
        [[noreturn]] auto fail(std::size_t pos, const std::string & message) -> void
        {
            throw ParseError(1, pos + 1, message);
        }

        auto skip_space(std::string_view text, std::size_t & pos) -> void
        {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        }

        auto read_natural(std::string_view text, std::size_t & pos) -> count_t
        {
            auto start = pos;
            count_t value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                if (__builtin_mul_overflow(value, count_t{10}, &value) || __builtin_add_overflow(value, count_t(text[pos] - '0'), &value))
                    fail(start, "number does not fit in 64 bits");
                ++pos;
            }
            if (pos == start)
                fail(start, "expected a natural number");
            return value;
        }
    }

    auto parse_profile(std::string_view text) -> Profile
    {
        std::size_t pos = 0;
        skip_space(text, pos);
        if (pos >= text.size() || text[pos] != '(')
            fail(pos, "expected '('");
        ++pos;

        std::vector<count_t> counts;
        while (true) {
            skip_space(text, pos);
            counts.push_back(read_natural(text, pos));
            skip_space(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            fail(pos, "expected ',' or ')'");
        }
        skip_space(text, pos);
        if (pos != text.size())
            fail(pos, "unexpected trailing input");
        return make_profile(counts);
    }

    auto format_profile(const Profile & p) -> std::string
    {
        if (p.is_zero())
            return "(0)";
        std::string out = "(";
        for (std::size_t i = 0; i < p.length(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(p[i]);
        }
        out += ')';
        return out;
    }

    auto operator<<(std::ostream & s, const Profile & p) -> std::ostream &
    {
        return s << format_profile(p);
    }
}
