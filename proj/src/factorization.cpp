#include <profiles/errors.hpp>
#include <profiles/factorization.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

namespace profiles
{
    auto try_divide(const Profile & r, const Profile & d) -> std::optional<Profile>
    {
        if (d.is_zero())
            throw DomainError("division by the zero profile");
        if (r.is_zero())
            return Profile::zero();
        if (d.length() > r.length() || r[0] % d[0] != 0)
            return std::nullopt;

        std::vector<count_t> q(r.length(), 0);
        q[0] = r[0] / d[0];
        count_t prefix_d = d[0], prefix_q = q[0];
        bool ended = false;
        for (std::size_t i = 1; i < r.length(); ++i) {
            prefix_d += d[i];
            auto used = saturating_mul(d[i], prefix_q);
            if (used > r[i])
                return std::nullopt;
            auto numerator = r[i] - used;
            if (numerator % prefix_d != 0)
                return std::nullopt;
            q[i] = numerator / prefix_d;
            if (q[i] == 0)
                ended = true;
            else if (ended)
                return std::nullopt;
            prefix_q += q[i];
        }

        auto quotient = make_profile(q);
        try {
            if (mul(d, quotient) != r)
                return std::nullopt;
        }
        catch (const OverflowError &) {
            return std::nullopt;
        }
        return quotient;
    }

    namespace
    {
        /// Calls visit(d) for every nonzero profile d dominated by p with d_0 | p_0
        /// and |d| dividing |p|. Stops early when visit returns false.
        auto for_each_divisor_candidate(const Profile & p, const std::function<auto(const Profile &)->bool> & visit) -> void
        {
            auto total = size(p);
            std::vector<count_t> current;
            bool stop = false;

            std::function<void(count_t)> extend = [&](count_t partial) {
                auto depth = current.size();
                if (depth > 0 && total % partial == 0)
                    if (! visit(detail::trusted_profile(current))) {
                        stop = true;
                        return;
                    }
                if (depth == p.length())
                    return;
                for (count_t v = 1; v <= p[depth] && ! stop; ++v) {
                    if (depth == 0 && p[0] % v != 0)
                        continue;
                    current.push_back(v);
                    extend(partial + v);
                    current.pop_back();
                }
            };
            extend(0);
        }
    }

    auto divisors(const Profile & p) -> std::vector<Profile>
    {
        if (p.is_zero())
            throw DomainError("divisors of the zero profile are not enumerable");
        std::vector<Profile> result;
        for_each_divisor_candidate(p, [&](const Profile & d) {
            if (try_divide(p, d))
                result.push_back(d);
            return true;
        });
        std::sort(result.begin(), result.end());
        return result;
    }

    auto is_prime(count_t n) -> bool
    {
        if (n < 2)
            return false;
        for (count_t k = 2; k <= n / k; ++k)
            if (n % k == 0)
                return false;
        return true;
    }

    auto nontrivial_divisor(const Profile & p) -> std::optional<Profile>
    {
        if (p.is_zero())
            throw DomainError("the zero profile has no divisor structure");
        if (is_prime(size(p)) || p.is_one())
            return std::nullopt;

        std::optional<Profile> found;
        for_each_divisor_candidate(p, [&](const Profile & d) {
            if (! d.is_one() && d != p && try_divide(p, d)) {
                found = d;
                return false;
            }
            return true;
        });
        return found;
    }

    auto is_irreducible(const Profile & p) -> bool
    {
        if (p.is_zero() || p.is_one())
            throw DomainError("irreducibility is undefined for " + format_profile(p));
        return ! nontrivial_divisor(p);
    }

    namespace
    {
        auto factorisations_from(const Profile & p, const Profile * smallest, std::vector<Factorisation> & out, Factorisation & prefix) -> void
        {
            if (p.is_one()) {
                out.push_back(prefix);
                return;
            }
            for (auto & d : divisors(p)) {
                if (d.is_one() || (smallest && d < *smallest) || ! is_irreducible(d))
                    continue;
                auto q = try_divide(p, d);
                prefix.push_back(d);
                factorisations_from(*q, &d, out, prefix);
                prefix.pop_back();
            }
        }
    }

    auto factorisations(const Profile & p) -> std::vector<Factorisation>
    {
        if (p.is_zero())
            throw DomainError("the zero profile has no factorisation");
        std::vector<Factorisation> result;
        Factorisation prefix;
        factorisations_from(p, nullptr, result, prefix);
        return result;
    }

    ProfilesOfSize::ProfilesOfSize(count_t size) :
        _size(size)
    {
    }

    auto ProfilesOfSize::advance_within_length() -> bool
    {
        auto k = _parts.size();
        count_t suffix = _parts[k - 1];
        for (std::size_t j = k - 1; j-- > 0;) {
            // Raising parts[j] leaves suffix - 1 for the k - 1 - j later parts.
            if (suffix - 1 >= k - 1 - j) {
                ++_parts[j];
                for (auto t = j + 1; t + 1 < k; ++t)
                    _parts[t] = 1;
                _parts[k - 1] = suffix - 1 - (k - 2 - j);
                return true;
            }
            suffix += _parts[j];
        }
        return false;
    }

    auto ProfilesOfSize::next() -> std::optional<Profile>
    {
        if (_done)
            return std::nullopt;

        if (_size == 0) {
            _done = true;
            return Profile::zero();
        }

        if (! _started) {
            _started = true;
            _parts.assign(1, _size);
        }
        else if (! advance_within_length()) {
            auto k = _parts.size() + 1;
            if (k > _size) {
                _done = true;
                return std::nullopt;
            }
            _parts.assign(k, 1);
            _parts.back() = _size - (k - 1);
        }
        return detail::trusted_profile(_parts);
    }

    auto profiles_of_size(count_t size) -> std::vector<Profile>
    {
        std::vector<Profile> result;
        ProfilesOfSize gen(size);
        while (auto p = gen.next())
            result.push_back(std::move(*p));
        return result;
    }

    auto census_bound(count_t n) -> double
    {
        auto dn = static_cast<double>(n);
        return 1.0 + dn * (std::pow(2.0, (dn + 1.0) / 2.0) - 1.0) / (std::sqrt(2.0) - 1.0);
    }

    namespace
    {
        struct SizeCount
        {
            count_t total = 0, reducible = 0;
        };

        auto classify_size(count_t s, unsigned threads) -> SizeCount
        {
            if (s == 0)
                return {1, 1};

            auto all = profiles_of_size(s);
            SizeCount result{all.size(), 0};
            if (s == 1 || is_prime(s))
                return result;

            threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(all.size())));
            std::vector<count_t> reducible(threads, 0);
            auto work = [&](unsigned w) {
                for (std::size_t i = w; i < all.size(); i += threads)
                    if (! is_irreducible(all[i]))
                        ++reducible[w];
            };

            if (threads == 1)
                work(0);
            else {
                std::vector<std::jthread> pool;
                for (unsigned w = 0; w < threads; ++w)
                    pool.emplace_back(work, w);
            }

            for (auto r : reducible)
                result.reducible += r;
            return result;
        }
    }

    auto census_table(count_t n, count_t limit, unsigned threads) -> std::vector<CensusReport>
    {
        if (n > limit)
            throw DomainError("census size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));

        std::vector<CensusReport> rows;
        count_t total = 0, reducible = 0;
        for (count_t s = 0; s <= n; ++s) {
            auto c = classify_size(s, threads);
            total += c.total;
            reducible += c.reducible;
            rows.push_back({s, total, reducible, census_bound(s), static_cast<double>(reducible) / static_cast<double>(total)});
        }
        return rows;
    }

    auto census(count_t n, count_t limit, unsigned threads) -> CensusReport
    {
        return census_table(n, limit, threads).back();
    }

    namespace
    {
        auto fixed(double x, int digits) -> std::string
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*f", digits, x);
            return buf;
        }
    }

    auto format_census_table(const std::vector<CensusReport> & rows) -> std::string
    {
        std::vector<std::array<std::string, 5>> cells;
        cells.push_back({"n", "total", "reducible", "bound", "ratio"});
        for (auto & r : rows)
            cells.push_back({std::to_string(r.n), std::to_string(r.total), std::to_string(r.reducible), fixed(r.bound, 2), fixed(r.ratio, 6)});

        std::array<std::size_t, 5> width{};
        for (auto & row : cells)
            for (std::size_t c = 0; c < 5; ++c)
                width[c] = std::max(width[c], row[c].size());

        std::string out;
        for (auto & row : cells) {
            for (std::size_t c = 0; c < 5; ++c) {
                if (c > 0)
                    out += "  ";
                out += std::string(width[c] - row[c].size(), ' ') + row[c];
            }
            out += '\n';
        }
        return out;
    }

    auto format_census_lines(const std::vector<CensusReport> & rows) -> std::string
    {
        std::string out;
        for (auto & r : rows)
            out += std::to_string(r.n) + ' ' + std::to_string(r.total) + ' ' + std::to_string(r.reducible) + ' ' + fixed(r.bound, 6) + ' ' +
                fixed(r.ratio, 9) + '\n';
        return out;
    }

    auto factor_nat_profile(const Profile & p) -> std::optional<Profile>
    {
        if (p.length() != 1)
            throw DomainError("expected a nonzero height-0 profile, got " + format_profile(p));
        auto n = p[0];
        if (n == 1)
            throw DomainError("(1) is a unit and has no factorisation");
        for (count_t k = 2; k <= n / k; ++k)
            if (n % k == 0)
                return embed_nat(k);
        return std::nullopt;
    }
}
