#include <profiles/equations.hpp>
#include <profiles/errors.hpp>

#include <limits>

namespace profiles
{
    auto brute_force_oracle(const EquationSystem & system, std::uint64_t max_tuples) -> std::vector<Assignment>
    {
        auto cardinality = candidate_space_size(system);
        if (cardinality > max_tuples)
            throw SearchLimitError("oracle would enumerate " + std::to_string(cardinality) + " tuples", cardinality,
                cardinality == std::numeric_limits<std::uint64_t>::max());
        auto candidates = candidate_profiles(candidate_bound(system));

        auto n = system.variables.size();
        std::vector<std::size_t> odometer(n, 0);
        std::vector<Assignment> solutions;
        Assignment values(n);
        while (true) {
            for (std::size_t v = 0; v < n; ++v)
                values[v] = candidates[odometer[v]];
            if (satisfies(system, values))
                solutions.push_back(values);

            // The last variable turns fastest, matching the solver's order.
            std::size_t v = n;
            while (v > 0) {
                --v;
                if (++odometer[v] < candidates.size())
                    break;
                odometer[v] = 0;
                if (v == 0) {
                    v = n + 1;
                    break;
                }
            }
            if (v == n + 1 || n == 0)
                break;
        }
        return solutions;
    }
}
