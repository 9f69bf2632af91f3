#include <profiles/cli.hpp>
#include <profiles/dynamics.hpp>
#include <profiles/equations.hpp>
#include <profiles/errors.hpp>
#include <profiles/factorization.hpp>
#include <profiles/reductions.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace profiles::cli
{
    namespace
    {
        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw Error("cannot open '" + path + "'");
            std::ostringstream s;
            s << in.rdbuf();
            return s.str();
        }

        auto print_solutions(const EquationSystem & system, const SolveResult & result, SolveMode mode, std::ostream & out) -> int
        {
            if (mode == SolveMode::Count) {
                out << result.count << '\n';
                return result.count > 0 ? success : negative;
            }
            if (result.solutions.empty()) {
                out << "no solutions\n";
                return negative;
            }
            out << format_solutions(system, result.solutions);
            return success;
        }

        auto join(const Factorisation & f) -> std::string
        {
            if (f.empty())
                return "1";
            std::string s;
            for (auto & p : f) {
                if (! s.empty())
                    s += " * ";
                s += format_profile(p);
            }
            return s;
        }
    }

    auto format_table(unsigned max_size) -> std::string
    {
        std::vector<Profile> headers;
        for (count_t s = 0; s <= max_size; ++s)
            for (auto & p : profiles_of_size(s))
                headers.push_back(p);

        std::vector<std::vector<std::string>> cells;
        cells.emplace_back().push_back("x");
        for (auto & q : headers)
            cells[0].push_back(format_profile(q));
        for (auto & p : headers) {
            auto & row = cells.emplace_back();
            row.push_back(format_profile(p));
            for (auto & q : headers)
                row.push_back(format_profile(mul(p, q)));
        }

        std::size_t width = 0;
        for (auto & row : cells)
            for (auto & c : row)
                width = std::max(width, c.size());

        std::string out;
        for (auto & row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0)
                    out += ' ';
                out += std::string(width - row[c].size(), ' ') + row[c];
            }
            out += '\n';
        }
        return out;
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Topographic profiles of finite dynamical systems", "profiles"};
        app.require_subcommand(1, 1);

        std::string path, literal, mode_name = "all";
        unsigned max_size = 0, threads = 1;
        count_t census_n = 0, census_limit = default_census_limit;
        std::uint64_t max_candidates = default_max_candidates;
        bool single = false, dot = false, machine = false;

        std::map<std::string, SolveMode> modes{{"first", SolveMode::First}, {"all", SolveMode::All}, {"count", SolveMode::Count}};
        auto add_solver_flags = [&](CLI::App * sub) {
            sub->add_option("--mode", mode_name, "first, all or count")->check(CLI::IsMember({"first", "all", "count"}));
            sub->add_option("--max-candidates", max_candidates, "Abort after visiting this many candidate tuples");
            sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
        };

        auto * profile_cmd = app.add_subcommand("profile", "Print the profile of a system in FDS format");
        profile_cmd->add_option("file", path, "FDS file")->required();

        auto * table_cmd = app.add_subcommand("table", "Multiplication table of all profiles up to a size");
        table_cmd->add_option("max-size", max_size)->required()->check(CLI::Range(0u, 12u));

        auto * factor_cmd = app.add_subcommand("factor", "All factorisations into irreducibles");
        factor_cmd->add_option("profile", literal)->required();
        auto * divisors_cmd = app.add_subcommand("divisors", "All divisors");
        divisors_cmd->add_option("profile", literal)->required();
        auto * irreducible_cmd = app.add_subcommand("irreducible", "Irreducibility test (exit 1 if reducible)");
        irreducible_cmd->add_option("profile", literal)->required();

        auto * solve_cmd = app.add_subcommand("solve", "Solve a system of equations with constant right-hand sides");
        solve_cmd->add_option("file", path, "Equation file")->required();
        add_solver_flags(solve_cmd);

        auto * sat_cmd = app.add_subcommand("sat", "Solve a one-in-three 3SAT instance through its profile encoding");
        sat_cmd->add_option("file", path, "oitcnf file")->required();
        sat_cmd->add_flag("--single", single, "Fold the system into one equation first");
        add_solver_flags(sat_cmd);

        auto * census_cmd = app.add_subcommand("census", "Count reducible profiles of size at most n");
        census_cmd->add_option("n", census_n)->required();
        census_cmd->add_option("--limit", census_limit, "Largest n accepted");
        census_cmd->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
        census_cmd->add_flag("--machine", machine, "Emit 'n total reducible bound ratio' lines");

        auto * realize_cmd = app.add_subcommand("realize", "Build a system with the given profile");
        realize_cmd->add_option("profile", literal)->required();
        realize_cmd->add_flag("--dot", dot, "Emit Graphviz instead of FDS");

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? success : failure;
        }

        auto mode = modes.at(mode_name);

        try {
            if (*profile_cmd) {
                out << format_profile(profile_of(parse_fds(read_file(path)))) << '\n';
            }
            else if (*table_cmd) {
                out << format_table(max_size);
            }
            else if (*factor_cmd) {
                for (auto & f : factorisations(parse_profile(literal)))
                    out << join(f) << '\n';
            }
            else if (*divisors_cmd) {
                for (auto & d : divisors(parse_profile(literal)))
                    out << format_profile(d) << '\n';
            }
            else if (*irreducible_cmd) {
                auto p = parse_profile(literal);
                if (p.is_zero() || p.is_one())
                    throw DomainError(format_profile(p) + " is neither irreducible nor reducible");
                if (auto d = nontrivial_divisor(p)) {
                    out << "reducible: " << format_profile(*d) << " * " << format_profile(*try_divide(p, *d)) << '\n';
                    return negative;
                }
                out << "irreducible\n";
            }
            else if (*solve_cmd) {
                auto system = parse_equation_system(read_file(path));
                return print_solutions(system, solve(system, {mode, max_candidates, threads}), mode, out);
            }
            else if (*sat_cmd) {
                auto system = sat_to_system(parse_cnf3(read_file(path)));
                if (single)
                    system = combine_to_single(system);
                return print_solutions(system, solve(system, {mode, max_candidates, threads}), mode, out);
            }
            else if (*census_cmd) {
                auto rows = census_table(census_n, census_limit, threads);
                if (census_n > 0)
                    rows.erase(rows.begin());
                out << (machine ? format_census_lines(rows) : format_census_table(rows));
            }
            else if (*realize_cmd) {
                auto sys = realize(parse_profile(literal));
                out << (dot ? export_dot(sys) : serialize_fds(sys));
            }
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return failure;
        }
        return success;
    }
}
