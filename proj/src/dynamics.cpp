#include <profiles/dynamics.hpp>
#include <profiles/errors.hpp>

#include <cctype>
#include <deque>
#include <limits>

namespace profiles
{
    FiniteDynamicalSystem::FiniteDynamicalSystem(std::vector<state_t> successors) :
        _successors(std::move(successors))
    {
        for (std::size_t i = 0; i < _successors.size(); ++i)
            if (_successors[i] >= _successors.size())
                throw DomainError("successor of state " + std::to_string(i) + " is " + std::to_string(_successors[i]) +
                    ", outside [0, " + std::to_string(_successors.size()) + ")");
    }

    auto periodic_states(const FiniteDynamicalSystem & sys) -> std::vector<bool>
    {
        enum class Colour : unsigned char
        {
            Unvisited,
            OnPath,
            Done
        };

        auto n = sys.size();
        std::vector<Colour> colour(n, Colour::Unvisited);
        std::vector<bool> periodic(n, false);

        for (state_t start = 0; start < n; ++start) {
            if (colour[start] != Colour::Unvisited)
                continue;

            state_t x = start;
            while (colour[x] == Colour::Unvisited) {
                colour[x] = Colour::OnPath;
                x = sys.successor(x);
            }

            // Reaching a state on the current walk closes a new cycle through x.
            if (colour[x] == Colour::OnPath) {
                state_t y = x;
                do {
                    periodic[y] = true;
                    y = sys.successor(y);
                } while (y != x);
            }

            for (state_t y = start; colour[y] == Colour::OnPath; y = sys.successor(y))
                colour[y] = Colour::Done;
        }

        return periodic;
    }

    auto heights(const FiniteDynamicalSystem & sys) -> HeightMap
    {
        auto n = sys.size();
        auto periodic = periodic_states(sys);

        // Reverse adjacency in compressed form.
        std::vector<std::size_t> offset(n + 1, 0);
        for (auto s : sys.successors())
            ++offset[s + 1];
        for (std::size_t i = 0; i < n; ++i)
            offset[i + 1] += offset[i];
        std::vector<state_t> preimages(n);
        auto fill = offset;
        for (state_t i = 0; i < n; ++i)
            preimages[fill[sys.successor(i)]++] = i;

        constexpr auto unknown = std::numeric_limits<std::uint64_t>::max();
        HeightMap result(n, unknown);
        std::deque<state_t> queue;
        for (state_t i = 0; i < n; ++i)
            if (periodic[i]) {
                result[i] = 0;
                queue.push_back(i);
            }

        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (auto k = offset[x]; k < offset[x + 1]; ++k) {
                auto y = preimages[k];
                if (result[y] == unknown) {
                    result[y] = result[x] + 1;
                    queue.push_back(y);
                }
            }
        }

        return result;
    }

    auto profile_of(const FiniteDynamicalSystem & sys) -> Profile
    {
        std::vector<count_t> counts;
        for (auto h : heights(sys)) {
            if (h >= counts.size())
                counts.resize(h + 1, 0);
            ++counts[h];
        }
        return make_profile(counts);
    }

    auto disjoint_sum(const FiniteDynamicalSystem & a, const FiniteDynamicalSystem & b) -> FiniteDynamicalSystem
    {
        state_t total;
        if (__builtin_add_overflow(state_t(a.size()), state_t(b.size()), &total))
            throw CapacityError("disjoint sum has too many states");

        std::vector<state_t> succ;
        succ.reserve(total);
        succ.insert(succ.end(), a.successors().begin(), a.successors().end());
        for (auto s : b.successors())
            succ.push_back(s + a.size());
        return FiniteDynamicalSystem{std::move(succ)};
    }

    auto tensor_product(const FiniteDynamicalSystem & a, const FiniteDynamicalSystem & b) -> FiniteDynamicalSystem
    {
        state_t total;
        if (__builtin_mul_overflow(state_t(a.size()), state_t(b.size()), &total))
            throw CapacityError("tensor product has too many states");

        std::vector<state_t> succ(total);
        state_t nb = b.size();
        for (state_t i = 0; i < a.size(); ++i)
            for (state_t j = 0; j < nb; ++j)
                succ[i * nb + j] = a.successor(i) * nb + b.successor(j);
        return FiniteDynamicalSystem{std::move(succ)};
    }

    auto realize(const Profile & p) -> FiniteDynamicalSystem
    {
        auto n = size(p);
        if (n > std::numeric_limits<std::size_t>::max() / sizeof(state_t))
            throw CapacityError("profile " + format_profile(p) + " is too large to realise");

        std::vector<state_t> succ;
        succ.reserve(n);
        state_t level_start = 0;
        for (std::size_t level = 0; level < p.length(); ++level) {
            state_t target = level == 0 ? 0 : level_start;
            state_t first = succ.size();
            for (count_t k = 0; k < p[level]; ++k)
                succ.push_back(level == 0 ? first + k : target);
            level_start = first;
        }
        return FiniteDynamicalSystem{std::move(succ)};
    }

    namespace
    {
        struct Token
        {
            std::string_view text;
            std::size_t column;
        };

        auto split_line(std::string_view line) -> std::vector<Token>
        {
            std::vector<Token> tokens;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                    ++pos;
                auto start = pos;
                while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
                    ++pos;
                if (pos > start)
                    tokens.push_back({line.substr(start, pos - start), start + 1});
            }
            return tokens;
        }

        auto parse_decimal(const Token & token, std::size_t line) -> std::uint64_t
        {
            std::uint64_t value = 0;
            for (std::size_t i = 0; i < token.text.size(); ++i) {
                char c = token.text[i];
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(line, token.column + i, "expected a decimal number");
                if (__builtin_mul_overflow(value, std::uint64_t{10}, &value) || __builtin_add_overflow(value, std::uint64_t(c - '0'), &value))
                    throw ParseError(line, token.column, "number does not fit in 64 bits");
            }
            return value;
        }
    }

    auto parse_fds(std::string_view text) -> FiniteDynamicalSystem
    {
        std::vector<std::string_view> lines;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            auto line = text.substr(pos, eol - pos);
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            lines.push_back(line);
            pos = eol + 1;
        }

        if (lines.empty())
            throw ParseError(1, 1, "missing state count");

        auto header = split_line(lines[0]);
        if (header.size() != 1)
            throw ParseError(1, header.empty() ? 1 : header[1 % header.size()].column, "expected exactly one state count");
        auto n = parse_decimal(header[0], 1);

        auto body = lines.size() > 1 ? split_line(lines[1]) : std::vector<Token>{};
        if (body.size() != n) {
            auto column = body.size() > n ? body[n].column : lines.size() > 1 ? lines[1].size() + 1 : 1;
            throw ParseError(2, column, "expected " + std::to_string(n) + " successors, found " + std::to_string(body.size()));
        }

        for (std::size_t l = 2; l < lines.size(); ++l)
            if (! split_line(lines[l]).empty())
                throw ParseError(l + 1, 1, "unexpected content after the successor line");

        std::vector<state_t> succ;
        succ.reserve(n);
        for (auto & token : body) {
            auto s = parse_decimal(token, 2);
            if (s >= n)
                throw ParseError(2, token.column, "successor " + std::to_string(s) + " is out of range for " + std::to_string(n) + " states");
            succ.push_back(s);
        }
        return FiniteDynamicalSystem{std::move(succ)};
    }

    auto serialize_fds(const FiniteDynamicalSystem & sys) -> std::string
    {
        std::string out = std::to_string(sys.size()) + "\n";
        for (std::size_t i = 0; i < sys.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += std::to_string(sys.successor(i));
        }
        out += '\n';
        return out;
    }

    auto export_dot(const FiniteDynamicalSystem & sys) -> std::string
    {
        auto h = heights(sys);
        std::string out = "digraph fds {\n";
        for (std::size_t i = 0; i < sys.size(); ++i)
            out += "    s" + std::to_string(i) + " [height=" + std::to_string(h[i]) + "];\n";
        for (std::size_t i = 0; i < sys.size(); ++i)
            out += "    s" + std::to_string(i) + " -> s" + std::to_string(sys.successor(i)) + ";\n";
        out += "}\n";
        return out;
    }
}
