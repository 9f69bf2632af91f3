#include "generators.hpp"

#include <profiles/equations.hpp>
#include <profiles/errors.hpp>

#include <doctest.h>

#include <random>

using namespace profiles;

namespace
{
    auto P(std::initializer_list<count_t> c) { return make_profile(c); }

    auto parse_error_at(std::string_view text) -> std::pair<std::size_t, std::size_t>
    {
        try {
            (void) parse_equation_system(text);
        }
        catch (const ParseError & e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    }
}

TEST_CASE("parsing equations")
{
    auto s = parse_equation_system("3*X = (3,6)");
    REQUIRE(s.equations.size() == 1);
    CHECK(s.variables == std::vector<std::string>{"X"});
    REQUIRE(s.equations[0].lhs.monomials().size() == 1);
    CHECK(s.equations[0].lhs.monomials()[0].coefficient == P({3}));
    CHECK(s.equations[0].lhs.monomials()[0].exponents == std::vector<unsigned>{1});
    CHECK(s.equations[0].rhs == P({3, 6}));

    auto t = parse_equation_system("(1,1)*X + Y^2 = (2,4)");
    CHECK(t.variables == std::vector<std::string>{"X", "Y"});
    REQUIRE(t.equations[0].lhs.monomials().size() == 2);
    CHECK(t.equations[0].lhs.monomials()[0].coefficient == P({1, 1}));
    CHECK(t.equations[0].lhs.monomials()[1].exponents == std::vector<unsigned>{0, 2});

    auto u = parse_equation_system("# comment\n\nX*Y*X + 2*X^2*Y = 1  # trailing\nZ_1 + 0 = (0)\n");
    CHECK(u.variables == std::vector<std::string>{"X", "Y", "Z_1"});
    REQUIRE(u.equations.size() == 2);
    REQUIRE(u.equations[0].lhs.monomials().size() == 1);
    CHECK(u.equations[0].lhs.monomials()[0].coefficient == P({3}));
    CHECK(u.equations[0].lhs.monomials()[0].exponents == std::vector<unsigned>{2, 1, 0});
    CHECK(u.equations[1].lhs.monomials()[0].exponents == std::vector<unsigned>{0, 0, 1});
    CHECK(u.equations[1].rhs.is_zero());

    auto constants = parse_equation_system("(1,1)*(2)*3 + X^0 = (8,8)");
    REQUIRE(constants.equations[0].lhs.monomials().size() == 1);
    CHECK(constants.equations[0].lhs.monomials()[0].coefficient == P({7, 6}));
}

TEST_CASE("equation parse errors")
{
    CHECK(parse_error_at("X = Y") == std::pair<std::size_t, std::size_t>{1, 5});
    CHECK(parse_error_at("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_error_at("# only a comment\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_error_at("X + = 1") == std::pair<std::size_t, std::size_t>{1, 5});
    CHECK(parse_error_at("X = 1\nX ^ 16 = 1") == std::pair<std::size_t, std::size_t>{2, 5});
    CHECK(parse_error_at("X = (1,0,2)").first == 1);
    CHECK(parse_error_at("X (1)") == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(parse_error_at("X = (1,2") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(parse_error_at("X = 1 2") == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(parse_error_at("X - 1 = 2") == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(parse_error_at("X^15 = 1") == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(parse_error_at("X^8*X^8 = 1").first == 1);
}

TEST_CASE("evaluation")
{
    auto s = parse_equation_system("3*X = (3,6)\nX^0 = 1\nX*Y = (2,4)");
    std::vector<Profile> v{P({1, 2}), Profile::zero()};
    CHECK(evaluate(s.equations[0].lhs, v) == P({3, 6}));
    CHECK(evaluate(s.equations[1].lhs, v) == P({1}));
    CHECK(evaluate(s.equations[1].lhs, std::vector<Profile>{Profile::zero(), Profile::zero()}) == P({1}));
    CHECK(evaluate(s.equations[2].lhs, std::vector<Profile>{P({1, 1}), P({2, 1})}) == P({2, 4}));
    CHECK(satisfies(s, std::vector<Profile>{P({1, 2}), P({2})}));
    CHECK(! satisfies(s, std::vector<Profile>{P({1, 2}), P({3})}));

    // p (q + r) and p q + p r evaluate identically.
    std::mt19937_64 rng(31);
    auto d = parse_equation_system("X*Y + X*Z = 0");
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Profile> values{testing::random_profile(rng, 4, 6), testing::random_profile(rng, 4, 6), testing::random_profile(rng, 4, 6)};
        CHECK(evaluate(d.equations[0].lhs, values) == values[0] * (values[1] + values[2]));
    }
}

TEST_CASE("polynomial normal form")
{
    Polynomial p(2);
    p.add_term(P({1, 1}), {1, 0});
    p.add_term(P({2}), {0, 1});
    p.add_term(P({1}), {1, 0});
    p.add_term(Profile::zero(), {1, 1});
    REQUIRE(p.monomials().size() == 2);
    CHECK(p.monomials()[0].coefficient == P({2, 1}));

    auto scaled = scale(P({1, 1}), p);
    CHECK(scaled.monomials()[0].coefficient == P({2, 1}) * P({1, 1}));
    CHECK(scale(Profile::zero(), p).empty());
    CHECK((p + p).monomials()[1].coefficient == P({4}));
}

TEST_CASE("formatting round-trips through the parser")
{
    auto text = "3*X + (1,1)*Y^2 + X*Y + (2,1) = (3,6)\nX = (0)\n";
    auto s = parse_equation_system(text);
    CHECK(format_system(s) == "3*X + (1,1)*Y^2 + X*Y + (2,1) = (3,6)\nX = (0)\n");

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        auto sys = testing::random_equation_system(rng, 3, 3, 6);
        // Reparsing may renumber variables by first occurrence; after that the text is a fixed point.
        auto once = format_system(parse_equation_system(format_system(sys)));
        CHECK(format_system(parse_equation_system(once)) == once);
    }

    std::vector<Assignment> sols{{P({1}), Profile::zero()}, {Profile::zero(), P({1, 2})}};
    auto two = parse_equation_system("X + Y = 1");
    CHECK(format_solutions(two, sols) == "X = (1)\nY = (0)\n---\nX = (0)\nY = (1,2)\n");
}

TEST_CASE("size projection")
{
    auto exact = size_projection(parse_equation_system("3*X = (9)"));
    CHECK(exact.exact);
    REQUIRE(exact.equations.size() == 1);
    CHECK(exact.equations[0].lhs[0].coefficient == 3);
    CHECK(exact.equations[0].rhs == 9);
    CHECK(satisfies(exact, std::vector<std::uint64_t>{3}));
    CHECK(! satisfies(exact, std::vector<std::uint64_t>{2}));

    auto necessary = size_projection(parse_equation_system("3*X = (3,6)"));
    CHECK(! necessary.exact);
    CHECK(necessary.equations[0].rhs == 9);
    CHECK(satisfies(necessary, std::vector<std::uint64_t>{3}));

    auto coefficient = size_projection(parse_equation_system("(1,1)*X = 4"));
    CHECK(! coefficient.exact);
    CHECK(coefficient.equations[0].lhs[0].coefficient == 2);

    auto quadratic = size_projection(parse_equation_system("X^2 + 2*X*Y + 1 = 10"));
    CHECK(quadratic.exact);
    CHECK(evaluate(quadratic.equations[0], std::vector<std::uint64_t>{1, 4}) == 10);
}

TEST_CASE("ones profiles are linearly independent")
{
    for (std::size_t n = 1; n <= 8; ++n) {
        // Column i holds the length-n prefix of the all-ones profile of length i + 1.
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            auto e = ones_profile(i + 1);
            for (std::size_t r = 0; r < n; ++r)
                m[r][i] = static_cast<double>(e[r]);
        }
        double det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            auto pivot = c;
            while (pivot < n && m[pivot][c] == 0)
                ++pivot;
            REQUIRE(pivot < n);
            if (pivot != c) {
                std::swap(m[pivot], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (auto r = c + 1; r < n; ++r) {
                auto f = m[r][c] / m[c][c];
                for (auto k = c; k < n; ++k)
                    m[r][k] -= f * m[c][k];
            }
        }
        CHECK(det == doctest::Approx(1.0));
    }
}

TEST_CASE("combining a system into one equation")
{
    auto one = parse_equation_system("X + Y = 1");
    auto combined = combine_to_single(one);
    REQUIRE(combined.equations.size() == 1);
    CHECK(combined.equations[0].rhs == P({1}));
    CHECK(format_system(combined) == "X + Y = (1)\n");

    auto two = combine_to_single(parse_equation_system("X + Y = 1\nX + Z = 1"));
    CHECK(two.equations[0].rhs == P({2, 1}));
    CHECK(format_system(two) == "(2,1)*X + Y + (1,1)*Z = (2,1)\n");

    CHECK_THROWS_AS((void) combine_to_single(parse_equation_system("X = 1\nX = 2")), DomainError);
}
