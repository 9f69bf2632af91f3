#include "generators.hpp"

#include <profiles/equations.hpp>
#include <profiles/errors.hpp>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace profiles;

namespace
{
    auto P(std::initializer_list<count_t> c) { return make_profile(c); }

    auto solve_all(const EquationSystem & s, unsigned threads = 1) { return solve(s, {SolveMode::All, default_max_candidates, threads}); }

    /// Every valid profile dominated by `box`, plus (0); enumerated independently of candidate_profiles.
    auto box_profiles(const Profile & box) -> std::vector<Profile>
    {
        std::vector<Profile> out{Profile::zero()};
        std::vector<count_t> cur;
        std::function<void()> rec = [&] {
            if (cur.size() == box.length())
                return;
            for (count_t v = 1; v <= box[cur.size()]; ++v) {
                cur.push_back(v);
                out.push_back(make_profile(cur));
                rec();
                cur.pop_back();
            }
        };
        rec();
        return out;
    }

    auto any_solution_in_box(const EquationSystem & s, const Profile & box) -> bool
    {
        auto candidates = box_profiles(box);
        std::vector<Profile> values(s.variables.size());
        std::function<bool(std::size_t)> rec = [&](std::size_t v) {
            if (v == values.size())
                return satisfies(s, values);
            for (auto & c : candidates) {
                values[v] = c;
                if (rec(v + 1))
                    return true;
            }
            return false;
        };
        return rec(0);
    }
}

TEST_CASE("candidate space")
{
    CHECK(candidate_bound(parse_equation_system("X = (1,4)\nY = (3,2,1)")) == P({3, 4, 1}));
    auto c = candidate_profiles(P({3, 6}));
    CHECK(c.size() == 1 + 3 + 3 * 6);
    CHECK(c.front().is_zero());
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(candidate_space_size(parse_equation_system("3*X = (3,6)")) == 22);
    CHECK(candidate_space_size(parse_equation_system("X + Y = (3,6)")) == 22 * 22);
    CHECK(candidate_profiles(Profile::zero()) == std::vector<Profile>{Profile::zero()});
}

TEST_CASE("small systems")
{
    auto linear = solve_all(parse_equation_system("3*X = (3,6)"));
    REQUIRE(linear.solutions.size() == 1);
    CHECK(linear.solutions[0] == Assignment{P({1, 2})});

    auto pair = parse_equation_system("X + Xn = 1");
    CHECK(solve_all(pair).solutions == std::vector<Assignment>{{Profile::zero(), P({1})}, {P({1}), Profile::zero()}});

    CHECK(solve_all(parse_equation_system("X = (0)")).solutions == std::vector<Assignment>{{Profile::zero()}});

    auto product = solve_all(parse_equation_system("X*Y = (1,2)"));
    CHECK(product.solutions == std::vector<Assignment>{{P({1}), P({1, 2})}, {P({1, 2}), P({1})}});

    CHECK(solve_all(parse_equation_system("X + 1 = (0)")).solutions.empty());
    CHECK(solve_all(parse_equation_system("X^2 = (1,3)")).solutions == std::vector<Assignment>{{P({1, 1})}});
    CHECK(solve_all(parse_equation_system("X^0 = 1")).solutions.size() == 2);
    CHECK(solve_all(parse_equation_system("X*Y = (2,4)")).count == 6);
}

TEST_CASE("modes")
{
    auto s = parse_equation_system("X + Y + Z = (2,1)");
    auto all = solve_all(s);
    CHECK(all.count == all.solutions.size());
    CHECK(all.count > 3);

    auto first = solve(s, {SolveMode::First});
    REQUIRE(first.solutions.size() == 1);
    CHECK(first.solutions[0] == all.solutions[0]);

    auto count = solve(s, {SolveMode::Count});
    CHECK(count.count == all.count);
    CHECK(count.solutions.empty());

    for (unsigned threads : {2u, 3u, 8u}) {
        CHECK(solve_all(s, threads).solutions == all.solutions);
        CHECK(solve(s, {SolveMode::First, default_max_candidates, threads}).solutions == first.solutions);
        CHECK(solve(s, {SolveMode::Count, default_max_candidates, threads}).count == all.count);
    }
}

TEST_CASE("agreement with the brute-force oracle")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        auto s = testing::random_equation_system(rng, 3, 3, 5);
        auto expected = brute_force_oracle(s);
        auto got = solve_all(s);
        CHECK(got.solutions == expected);
        CHECK(got.count == expected.size());
        for (auto & a : got.solutions)
            CHECK(satisfies(s, a));

        auto first = solve(s, {SolveMode::First, default_max_candidates, 2});
        if (expected.empty())
            CHECK(first.solutions.empty());
        else {
            REQUIRE(first.solutions.size() == 1);
            CHECK(first.solutions[0] == expected[0]);
        }
    }
}

TEST_CASE("oracle edge cases")
{
    EquationSystem empty;
    CHECK(brute_force_oracle(empty) == std::vector<Assignment>{Assignment{}});
    CHECK(solve(empty).solutions == std::vector<Assignment>{Assignment{}});
    CHECK(brute_force_oracle(parse_equation_system("X + (1) = (0)")).empty());

    auto constant_only = parse_equation_system("(1,1) = (1,1)");
    CHECK(solve(constant_only).count == 1);
    CHECK(solve(parse_equation_system("(1,1) = (1,2)")).count == 0);
}

TEST_CASE("bounded candidates lose no solvable system")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 80; ++trial) {
        auto s = testing::random_equation_system(rng, 2, 2, 4);
        auto bound = candidate_bound(s);
        std::vector<count_t> wider(bound.length() + 1, 0);
        for (std::size_t j = 0; j <= bound.length(); ++j)
            wider[j] = bound[j] + 2;
        CHECK(any_solution_in_box(s, make_profile(wider)) == (solve(s, {SolveMode::First}).count > 0));
    }
}

TEST_CASE("size projection of solutions")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = testing::random_equation_system(rng, 3, 2, 5);
        auto projected = size_projection(s);
        for (auto & a : solve_all(s).solutions) {
            std::vector<std::uint64_t> sizes;
            for (auto & p : a)
                sizes.push_back(size(p));
            CHECK(satisfies(projected, sizes));
        }
    }
}

TEST_CASE("natural coefficients: profile solutions exist iff natural ones do")
{
    std::mt19937_64 rng(44);
    int solvable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto s = testing::random_equation_system(rng, 2, 2, 6);
        // Flatten every constant to its size so the system has natural coefficients.
        for (auto & eq : s.equations) {
            Polynomial flat(s.variables.size());
            for (auto & m : eq.lhs.monomials())
                flat.add_term(embed_nat(size(m.coefficient)), m.exponents);
            eq.lhs = flat;
            eq.rhs = embed_nat(size(eq.rhs));
        }
        auto projected = size_projection(s);
        REQUIRE(projected.exact);

        std::uint64_t bound = 0;
        for (auto & eq : projected.equations)
            bound = std::max(bound, eq.rhs);
        bool natural = false;
        std::vector<std::uint64_t> v(s.variables.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (natural)
                return;
            if (k == v.size()) {
                natural = satisfies(projected, v);
                return;
            }
            for (std::uint64_t x = 0; x <= bound; ++x) {
                v[k] = x;
                rec(k + 1);
            }
        };
        rec(0);

        auto profile_solvable = solve(s, {SolveMode::First}).count > 0;
        CHECK(profile_solvable == natural);
        solvable += natural;
    }
    CHECK(solvable > 10);
}

TEST_CASE("search guard")
{
    auto s = parse_equation_system("X + Y + Z + W = (4,4,4)");
    try {
        (void) solve(s, {SolveMode::All, 1000, 1});
        FAIL("expected the search guard to trip");
    }
    catch (const SearchLimitError & e) {
        CHECK(e.cardinality() == candidate_space_size(s));
        CHECK(! e.cardinality_saturated());
        CHECK(std::string(e.what()).find(std::to_string(e.cardinality())) != std::string::npos);
    }
    CHECK_THROWS_AS((void) solve(s, {SolveMode::Count, 1000, 4}), SearchLimitError);
    CHECK_THROWS_AS((void) brute_force_oracle(s, 1000), SearchLimitError);
}

TEST_CASE("large entries are pruned rather than overflowing")
{
    CHECK(solve_all(parse_equation_system("X^15 = (1,32767)")).solutions == std::vector<Assignment>{{P({1, 1})}});
    // k^15 overflows 64 bits for k >= 20; those candidates must be cut, not wrapped.
    CHECK(solve_all(parse_equation_system("X^15 = (100000)")).solutions.empty());
    CHECK(solve_all(parse_equation_system("X^3 = (1000000)")).solutions == std::vector<Assignment>{{P({100})}});
    CHECK_THROWS_AS((void) solve_all(parse_equation_system("X = (4294967296,4294967296)")), SearchLimitError);
}
