/*
 * Copyright 2026 The grundy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grundy/algebra.hpp"
#include "grundy/digraph.hpp"
#include "grundy/hackenbush.hpp"
#include "grundy/oracle.hpp"
#include "grundy/solvers.hpp"

using namespace grundy;

namespace {

enum Exit { Ok = 0, Usage = 1, NotSupported = 2, Mismatch = 3, Internal = 4 };

ParsedDigraph load_checked(const std::string& path)
{
    ParsedDigraph p = load_digraph(path);
    for (const auto& w : p.warnings) std::cerr << path << ": warning: " << w << '\n';
    return p;
}

Assignment solve_with(const GameDigraph& d, const std::string& theory, bool trace)
{
    SolveOptions opt{trace};
    if (theory == "auto") return solve_auto(d, opt);
    auto t = theory_from_string(theory);
    if (!t) throw CLI::ValidationError("--theory", "unknown theory '" + theory + "'");
    return solve_as(d, *t, opt);
}

int cmd_solve(std::ostream& out, const std::string& path, const std::string& theory, bool trace)
{
    ParsedDigraph p = load_checked(path);
    Assignment a = solve_with(p.digraph, theory, trace);
    std::string used = theory == "auto" ? to_string(classify(p.digraph)) : theory;
    if (a.trace) out << format_trace(*a.trace);
    out << "# theory " << used << ", steps " << a.steps << '\n';
    for (NodeId x = 0; x < p.digraph.size(); ++x) out << x << ": " << a.format(x) << '\n';
    return Ok;
}

int cmd_sum(std::ostream& out, const std::vector<std::string>& literals)
{
    WhiteValue v = parse_value(literals.front());
    for (std::size_t i = 1; i < literals.size(); ++i) v = sum_value(v, parse_value(literals[i]));
    out << "value " << format_value(v) << ", outcome " << to_string(outcome_of(v)) << '\n';
    return Ok;
}

void print_advice(std::ostream& out, const WhiteValue& v, const MoveAdvice& a)
{
    out << "value " << format_value(v) << ", outcome " << to_string(outcome_of(v)) << '\n';
    out << "verdict " << to_string(a.verdict) << ": " << a.rationale << '\n';
}

int cmd_best_move(std::ostream& out, const std::vector<std::string>& paths)
{
    SumPosition sum;
    for (const auto& path : paths) {
        ParsedDigraph p = load_checked(path);
        if (!p.start) throw CLI::ValidationError(path, "no start line");
        sum.components.push_back(Component::solved({p.digraph, *p.start}));
    }
    MoveAdvice a = best_move(sum);
    print_advice(out, position_value(sum), a);
    out << format_line(a.line);
    return Ok;
}

int cmd_oracle(std::ostream& out, std::size_t nodes, std::size_t trials, std::uint64_t seed,
               const std::string& theory, double density, double gray)
{
    auto t = theory_from_string(theory);
    if (!t) throw CLI::ValidationError("--theory", "unknown theory '" + theory + "'");
    if (*t == TheoryClass::Short || *t == TheoryClass::Cyclic) gray = 0.0;
    std::size_t ok = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        std::uint64_t s = seed * 1000003ULL + 2 * i;
        Game v = random_game(nodes, density, gray, *t, s);
        Game u = random_game(nodes, density, gray, *t, s + 1);
        ConsistencyReport r = check_consistency(v, u);
        if (r.match()) {
            ++ok;
        } else {
            out << "trial " << i << ": " << r.describe() << '\n';
        }
    }
    out << ok << '/' << trials << " consistent\n";
    return ok == trials ? Ok : Mismatch;
}

int cmd_hb_solve(std::ostream& out, const std::string& path, std::size_t cap)
{
    hb::CompiledGame g = hb::compile_to_digraph(hb::load_position(path), cap);
    Assignment a = solve_carry(g.digraph);
    const WhiteValue& v = a.value(g.root);
    out << "value " << format_value(v) << ", outcome " << to_string(outcome_of(v)) << '\n';
    out << "# " << g.digraph.size() << " nodes, " << g.digraph.arc_count() << " arcs, steps " << a.steps << '\n';
    return Ok;
}

int cmd_hb_best_move(std::ostream& out, const std::vector<std::string>& paths, std::size_t cap)
{
    std::vector<hb::Position> ps;
    for (const auto& path : paths) ps.push_back(hb::load_position(path));
    hb::SumAnalysis r = hb::analyze_sum(ps, cap);
    print_advice(out, r.value, r.advice);
    for (const hb::HbStep& s : r.line)
        out << "component#" << s.component << ": " << s.move.describe() << (s.carry_on ? " (carry-on)" : "") << '\n';
    return Ok;
}

int cmd_hb_dot(std::ostream& out, const std::string& path, std::size_t cap)
{
    hb::CompiledGame g = hb::compile_to_digraph(hb::load_position(path), cap);
    Assignment a = solve_carry(g.digraph);
    out << to_dot(g.digraph, &a, g.root);
    return Ok;
}

int cmd_dot(std::ostream& out, const std::string& path, bool with_values)
{
    ParsedDigraph p = load_checked(path);
    if (!with_values) {
        out << to_dot(p.digraph, nullptr, p.start);
        return Ok;
    }
    Assignment a = solve_auto(p.digraph);
    out << to_dot(p.digraph, &a, p.start);
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grundy values and outcomes for loopy impartial game digraphs"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output,-o", output, "write the report to this file");

    std::string theory = "auto";
    bool trace = false;
    std::string file;
    auto* solve = app.add_subcommand("solve", "per-node values of a digraph file");
    solve->add_option("file", file)->required()->check(CLI::ExistingFile);
    solve->add_option("--theory", theory, "auto, short, cyclic, entailing or carry");
    solve->add_flag("--trace", trace, "print the newly assigned nodes of every step");

    std::vector<std::string> literals;
    auto* sum = app.add_subcommand("sum", "value and outcome of a sum of value literals");
    sum->add_option("values", literals)->required();

    std::string literal;
    auto* outcome = app.add_subcommand("outcome", "outcome class of a value literal");
    outcome->add_option("value", literal)->required();

    std::vector<std::string> files;
    auto* best = app.add_subcommand("best-move", "advice for a sum of digraph games");
    best->add_option("files", files)->required()->check(CLI::ExistingFile);

    std::size_t nodes = 6, trials = 100, cap = hb::default_cap;
    std::uint64_t seed = 1;
    double density = 0.3, gray = 0.25;
    std::string oracle_theory = "carry";
    auto* oracle = app.add_subcommand("oracle-check", "compare the sum table with product retrograde analysis");
    oracle->add_option("--nodes", nodes)->check(CLI::Range(1, 12));
    oracle->add_option("--trials", trials);
    oracle->add_option("--seed", seed);
    oracle->add_option("--theory", oracle_theory);
    oracle->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    oracle->add_option("--gray", gray)->check(CLI::Range(0.0, 1.0));

    auto* hbc = app.add_subcommand("hb", "green-lime hackenbush");
    hbc->require_subcommand(1);
    auto* hb_solve = hbc->add_subcommand("solve", "value of a position file");
    hb_solve->add_option("file", file)->required()->check(CLI::ExistingFile);
    hb_solve->add_option("--cap", cap, "maximum number of positions");
    auto* hb_best = hbc->add_subcommand("best-move", "advice for a sum of positions");
    hb_best->add_option("files", files)->required()->check(CLI::ExistingFile);
    hb_best->add_option("--cap", cap, "maximum number of positions");
    auto* hb_dot = hbc->add_subcommand("dot", "compiled digraph with values, as DOT");
    hb_dot->add_option("file", file)->required()->check(CLI::ExistingFile);
    hb_dot->add_option("--cap", cap, "maximum number of positions");

    bool values = false;
    auto* dot = app.add_subcommand("dot", "digraph file as DOT");
    dot->add_option("file", file)->required()->check(CLI::ExistingFile);
    dot->add_flag("--values", values, "label nodes with their values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    std::ostringstream out;
    int code = Ok;
    try {
        if (*solve) code = cmd_solve(out, file, theory, trace);
        else if (*sum) code = cmd_sum(out, literals);
        else if (*outcome) out << to_string(outcome_of(parse_value(literal))) << '\n';
        else if (*best) code = cmd_best_move(out, files);
        else if (*oracle) code = cmd_oracle(out, nodes, trials, seed, oracle_theory, density, gray);
        else if (*hb_solve) code = cmd_hb_solve(out, file, cap);
        else if (*hb_best) code = cmd_hb_best_move(out, files, cap);
        else if (*hb_dot) code = cmd_hb_dot(out, file, cap);
        else if (*dot) code = cmd_dot(out, file, values);
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return NotSupported;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }

    if (output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "error: cannot write " << output << '\n';
            return Usage;
        }
        f << out.str();
    }
    return code;
}
