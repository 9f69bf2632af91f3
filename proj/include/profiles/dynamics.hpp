#pragma once

#include <profiles/profile.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace profiles
{
    using state_t = std::uint64_t;

    /**
     * A finite dynamical system given by its successor function: state i
     * moves to successors()[i]. The empty system is allowed.
     */
    class FiniteDynamicalSystem
    {
    public:
        FiniteDynamicalSystem() = default;

        /// Throws DomainError if some successor is out of range.
        explicit FiniteDynamicalSystem(std::vector<state_t> successors);

        [[nodiscard]] auto size() const -> std::size_t { return _successors.size(); }
        [[nodiscard]] auto empty() const -> bool { return _successors.empty(); }
        [[nodiscard]] auto successors() const -> std::span<const state_t> { return _successors; }
        [[nodiscard]] auto successor(state_t state) const -> state_t { return _successors[state]; }

        [[nodiscard]] friend auto operator==(const FiniteDynamicalSystem &, const FiniteDynamicalSystem &) -> bool = default;

    private:
        std::vector<state_t> _successors;
    };

    /// heights[i] is the number of steps from state i to the nearest periodic state.
    using HeightMap = std::vector<std::uint64_t>;

    [[nodiscard]] auto heights(const FiniteDynamicalSystem & sys) -> HeightMap;

    /// Marks the states that lie on a limit cycle.
    [[nodiscard]] auto periodic_states(const FiniteDynamicalSystem & sys) -> std::vector<bool>;

    [[nodiscard]] auto profile_of(const FiniteDynamicalSystem & sys) -> Profile;

    /// States of b are renumbered after those of a.
    [[nodiscard]] auto disjoint_sum(const FiniteDynamicalSystem & a, const FiniteDynamicalSystem & b) -> FiniteDynamicalSystem;

    /// The pair (i, j) becomes state i * b.size() + j.
    [[nodiscard]] auto tensor_product(const FiniteDynamicalSystem & a, const FiniteDynamicalSystem & b) -> FiniteDynamicalSystem;

    /**
     * A canonical system with the given profile: level 0 is p_0 fixed
     * points, and every state of level i >= 1 points at the first state of
     * level i - 1. States are numbered level by level.
     */
    [[nodiscard]] auto realize(const Profile & p) -> FiniteDynamicalSystem;

    /// Two lines: the state count, then the space-separated successors.
    [[nodiscard]] auto parse_fds(std::string_view text) -> FiniteDynamicalSystem;
    [[nodiscard]] auto serialize_fds(const FiniteDynamicalSystem & sys) -> std::string;

    /// Graphviz digraph with nodes s0..s(n-1), each carrying a height attribute.
    [[nodiscard]] auto export_dot(const FiniteDynamicalSystem & sys) -> std::string;
}
