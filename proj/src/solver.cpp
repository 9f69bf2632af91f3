#include <profiles/equations.hpp>
#include <profiles/errors.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

namespace profiles
{
    auto candidate_bound(const EquationSystem & system) -> Profile
    {
        std::vector<count_t> bound;
        for (auto & eq : system.equations) {
            if (eq.rhs.length() > bound.size())
                bound.resize(eq.rhs.length(), 0);
            for (std::size_t j = 0; j < eq.rhs.length(); ++j)
                bound[j] = std::max(bound[j], eq.rhs[j]);
        }
        return make_profile(bound);
    }

    auto candidate_profiles(const Profile & bound) -> std::vector<Profile>
    {
        std::vector<Profile> result{Profile::zero()};
        std::vector<count_t> current;
        auto extend = [&](auto & self) -> void {
            auto depth = current.size();
            if (depth == bound.length())
                return;
            for (count_t v = 1; v <= bound[depth]; ++v) {
                current.push_back(v);
                result.push_back(detail::trusted_profile(current));
                self(self);
                current.pop_back();
            }
        };
        extend(extend);

        std::vector<std::pair<count_t, std::size_t>> keys;
        keys.reserve(result.size());
        for (std::size_t i = 0; i < result.size(); ++i)
            keys.emplace_back(size(result[i]), i);
        std::sort(keys.begin(), keys.end(), [&](const auto & a, const auto & b) {
            if (a.first != b.first)
                return a.first < b.first;
            auto & p = result[a.second];
            auto & q = result[b.second];
            if (p.length() != q.length())
                return p.length() < q.length();
            return std::lexicographical_compare(p.counts().begin(), p.counts().end(), q.counts().begin(), q.counts().end());
        });
        std::vector<Profile> sorted;
        sorted.reserve(result.size());
        for (auto & [_, i] : keys)
            sorted.push_back(std::move(result[i]));
        return sorted;
    }

    auto candidate_count(const Profile & bound) -> std::uint64_t
    {
        std::uint64_t count = 1, level = 1;
        for (std::size_t j = 0; j < bound.length(); ++j) {
            level = saturating_mul(level, bound[j]);
            count = level == std::numeric_limits<std::uint64_t>::max() || count > std::numeric_limits<std::uint64_t>::max() - level
                ? std::numeric_limits<std::uint64_t>::max()
                : count + level;
        }
        return count;
    }

    auto candidate_space_size(const EquationSystem & system) -> std::uint64_t
    {
        auto per_variable = candidate_count(candidate_bound(system));
        std::uint64_t total = 1;
        for (std::size_t v = 0; v < system.variables.size(); ++v)
            total = saturating_mul(total, per_variable);
        return total;
    }

    namespace
    {
        constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();

        /// Value of a monomial, or nullopt if it certainly exceeds every 64-bit bound.
        auto monomial_value(const Monomial & m, std::span<const Profile> values) -> std::optional<Profile>
        {
            for (std::size_t j = 0; j < m.exponents.size(); ++j)
                if (m.exponents[j] > 0 && values[j].is_zero())
                    return Profile::zero();
            try {
                return evaluate(m, values);
            }
            catch (const OverflowError &) {
                // Multiplying by nonzero profiles never decreases an entry.
                return std::nullopt;
            }
        }

        struct SearchPlan
        {
            const EquationSystem & system;
            std::size_t num_vars, num_eqs;
            /// completing[d][e]: monomials of equation e whose last variable has index d - 1.
            std::vector<std::vector<std::vector<const Monomial *>>> completing;
            std::vector<std::vector<Profile>> candidates;
            std::uint64_t cardinality;

            SearchPlan(const EquationSystem & s, std::uint64_t max_candidates) :
                system(s),
                num_vars(s.variables.size()),
                num_eqs(s.equations.size()),
                completing(num_vars + 1, std::vector<std::vector<const Monomial *>>(num_eqs)),
                cardinality(candidate_space_size(s))
            {
                for (std::size_t e = 0; e < num_eqs; ++e)
                    for (auto & m : s.equations[e].lhs.monomials()) {
                        std::size_t depth = 0;
                        for (std::size_t j = 0; j < m.exponents.size(); ++j)
                            if (m.exponents[j] > 0)
                                depth = j + 1;
                        completing[depth][e].push_back(&m);
                    }

                auto bound = candidate_bound(s);
                if (num_vars > 0 && candidate_count(bound) > max_candidates)
                    throw SearchLimitError("each variable has " + std::to_string(candidate_count(bound)) +
                            " candidates, more than the limit of " + std::to_string(max_candidates),
                        cardinality, cardinality == saturated);
                auto all = candidate_profiles(bound);
                std::vector<Profile> values(num_vars);
                for (std::size_t v = 0; v < num_vars; ++v) {
                    auto & kept = candidates.emplace_back();
                    for (auto & c : all) {
                        values[v] = c;
                        if (admissible_alone(v, values))
                            kept.push_back(c);
                    }
                    values[v] = Profile::zero();
                }
            }

            /// Monomials in v alone are always present in the sum, so each must fit under its right-hand side.
            auto admissible_alone(std::size_t v, std::span<const Profile> values) const -> bool
            {
                for (std::size_t e = 0; e < num_eqs; ++e)
                    for (auto & m : system.equations[e].lhs.monomials()) {
                        bool alone = m.exponents[v] > 0;
                        for (std::size_t j = 0; j < m.exponents.size() && alone; ++j)
                            if (j != v && m.exponents[j] > 0)
                                alone = false;
                        if (! alone)
                            continue;
                        auto value = monomial_value(m, values);
                        if (! value || ! dominated_by(*value, system.equations[e].rhs))
                            return false;
                    }
                return true;
            }
        };

        class Worker
        {
        public:
            Worker(const SearchPlan & plan, const SolveOptions & options, std::atomic<std::uint64_t> & explored, std::atomic<bool> & abort) :
                _plan(plan),
                _options(options),
                _explored(explored),
                _abort(abort),
                _values(plan.num_vars),
                _partial(plan.num_vars + 1, std::vector<Profile>(plan.num_eqs))
            {
            }

            /// Sums of constant monomials; false if they already exceed a right-hand side.
            auto initialise() -> bool { return extend_partial(0); }

            /// Searches every completion with variable 0 fixed to `first`.
            auto run_from(const Profile & first, std::vector<Assignment> & found, std::uint64_t & count) -> void
            {
                _found = &found;
                _count = &count;
                _stop = false;
                if (_plan.num_vars == 0) {
                    visit_leaf();
                    return;
                }
                _values[0] = first;
                if (tick() && extend_partial(1))
                    search(1);
            }

            auto run_empty(std::vector<Assignment> & found, std::uint64_t & count) -> void
            {
                _found = &found;
                _count = &count;
                visit_leaf();
            }

            auto flush() -> void
            {
                _explored.fetch_add(_local, std::memory_order_relaxed);
                _local = 0;
            }

        private:
            const SearchPlan & _plan;
            const SolveOptions & _options;
            std::atomic<std::uint64_t> & _explored;
            std::atomic<bool> & _abort;
            std::vector<Profile> _values;
            std::vector<std::vector<Profile>> _partial;
            std::vector<Assignment> * _found = nullptr;
            std::uint64_t * _count = nullptr;
            std::uint64_t _local = 0;
            bool _stop = false;

            auto tick() -> bool
            {
                if (++_local >= 1024)
                    flush();
                if (_explored.load(std::memory_order_relaxed) + _local > _options.max_candidates) {
                    _abort = true;
                    throw SearchLimitError("search visited more than " + std::to_string(_options.max_candidates) +
                            " candidate tuples; the bounded candidate space has " +
                            (_plan.cardinality == saturated ? std::string("more than 2^64 - 1") : std::to_string(_plan.cardinality)) + " tuples",
                        _plan.cardinality, _plan.cardinality == saturated);
                }
                return ! _abort.load(std::memory_order_relaxed);
            }

            /// Computes _partial[depth] from _partial[depth - 1] and the monomials completed by variable depth - 1.
            auto extend_partial(std::size_t depth) -> bool
            {
                for (std::size_t e = 0; e < _plan.num_eqs; ++e) {
                    auto sum = depth == 0 ? Profile::zero() : _partial[depth - 1][e];
                    for (auto * m : _plan.completing[depth][e]) {
                        auto value = monomial_value(*m, _values);
                        if (! value)
                            return false;
                        try {
                            sum = add(sum, *value);
                        }
                        catch (const OverflowError &) {
                            return false;
                        }
                    }
                    if (! dominated_by(sum, _plan.system.equations[e].rhs))
                        return false;
                    _partial[depth][e] = std::move(sum);
                }
                return true;
            }

            auto visit_leaf() -> void
            {
                auto & sums = _partial[_plan.num_vars];
                for (std::size_t e = 0; e < _plan.num_eqs; ++e)
                    if (sums[e] != _plan.system.equations[e].rhs)
                        return;
                ++*_count;
                if (_options.mode != SolveMode::Count)
                    _found->push_back(_values);
                if (_options.mode == SolveMode::First)
                    _stop = true;
            }

            auto search(std::size_t depth) -> void
            {
                if (depth == _plan.num_vars) {
                    visit_leaf();
                    return;
                }
                for (auto & c : _plan.candidates[depth]) {
                    if (_stop || ! tick())
                        return;
                    _values[depth] = c;
                    if (extend_partial(depth + 1))
                        search(depth + 1);
                }
                _values[depth] = Profile::zero();
            }
        };
    }

    auto solve(const EquationSystem & system, const SolveOptions & options) -> SolveResult
    {
        SearchPlan plan(system, options.max_candidates);
        std::atomic<std::uint64_t> explored{0};
        std::atomic<bool> abort{false};
        SolveResult result;

        if (plan.num_vars == 0) {
            Worker worker(plan, options, explored, abort);
            if (worker.initialise())
                worker.run_empty(result.solutions, result.count);
            result.explored = 1;
            return result;
        }

        auto & roots = plan.candidates[0];
        std::vector<std::vector<Assignment>> found(roots.size());
        std::vector<std::uint64_t> counts(roots.size(), 0);
        constexpr auto none = std::numeric_limits<std::size_t>::max();
        std::atomic<std::size_t> first_hit{none};

        auto threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(roots.size(), 1))));
        std::vector<std::exception_ptr> errors(threads);

        auto work = [&](unsigned w) {
            try {
                Worker worker(plan, options, explored, abort);
                if (! worker.initialise())
                    return;
                for (std::size_t i = w; i < roots.size(); i += threads) {
                    if (abort || (options.mode == SolveMode::First && i > first_hit.load()))
                        break;
                    worker.run_from(roots[i], found[i], counts[i]);
                    if (options.mode == SolveMode::First && counts[i] > 0) {
                        auto current = first_hit.load();
                        while (i < current && ! first_hit.compare_exchange_weak(current, i)) {
                        }
                        break;
                    }
                }
                worker.flush();
            }
            catch (...) {
                errors[w] = std::current_exception();
                abort = true;
            }
        };

        if (threads == 1)
            work(0);
        else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w)
                pool.emplace_back(work, w);
        }

        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);

        result.explored = explored.load();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (options.mode == SolveMode::First) {
                if (counts[i] > 0) {
                    result.count = 1;
                    result.solutions.push_back(std::move(found[i].front()));
                    break;
                }
                continue;
            }
            result.count += counts[i];
            for (auto & a : found[i])
                result.solutions.push_back(std::move(a));
        }
        return result;
    }
}
