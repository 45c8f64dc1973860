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

#include "grundy/hackenbush.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace grundy::hb {

Position::Position(std::uint32_t ground, std::vector<std::uint32_t> nodes, std::vector<Edge> edges)
    : ground_(ground), nodes_(std::move(nodes)), edges_(std::move(edges))
{
    if (std::find(nodes_.begin(), nodes_.end(), ground_) == nodes_.end()) nodes_.push_back(ground_);
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (i && edges_[i - 1].id == e.id) throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
        if (!std::binary_search(nodes_.begin(), nodes_.end(), e.a) ||
            !std::binary_search(nodes_.begin(), nodes_.end(), e.b))
            throw std::invalid_argument("edge " + std::to_string(e.id) + " has an undeclared endpoint");
    }
}

const Edge* Position::edge(std::uint32_t id) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, std::uint32_t v) { return e.id < v; });
    return it != edges_.end() && it->id == id ? &*it : nullptr;
}

std::string Position::key() const
{
    std::string k;
    for (const Edge& e : edges_) {
        k += std::to_string(e.id);
        k += e.color == EdgeColor::Green ? 'g' : 'l';
    }
    return k;
}

std::string Move::describe() const
{
    if (kind == Kind::Remove) return "remove edge " + std::to_string(edge);
    return "toggle lime " + std::to_string(edge) + " with green " + std::to_string(green);
}

std::pair<Position, std::vector<Edge>> fall_away(const Position& p)
{
    std::set<std::uint32_t> reached{p.ground()};
    for (bool grew = true; grew;) {
        grew = false;
        for (const Edge& e : p.edges()) {
            bool ra = reached.count(e.a), rb = reached.count(e.b);
            if (ra != rb) {
                reached.insert(ra ? e.b : e.a);
                grew = true;
            }
        }
    }
    std::vector<Edge> kept, fallen;
    for (const Edge& e : p.edges()) (reached.count(e.a) ? kept : fallen).push_back(e);
    return {Position(p.ground(), p.nodes(), std::move(kept)), std::move(fallen)};
}

namespace {

bool adjacent(const Edge& x, const Edge& y)
{
    return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

}  // namespace

std::vector<LegalMove> legal_moves(const Position& p)
{
    std::vector<LegalMove> out;
    const auto& edges = p.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::vector<Edge> rest = edges;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        auto [result, fallen] = fall_away(Position(p.ground(), p.nodes(), std::move(rest)));
        bool lime_fell = std::any_of(fallen.begin(), fallen.end(), [](const Edge& e) { return e.color == EdgeColor::Lime; });
        Move m{Move::Kind::Remove, edges[i].id, 0};
        out.push_back({m, std::move(result), edges[i].color == EdgeColor::Green && lime_fell});
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].color != EdgeColor::Lime) continue;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (edges[j].color != EdgeColor::Green || !adjacent(edges[i], edges[j])) continue;
            std::vector<Edge> swapped = edges;
            swapped[i].color = EdgeColor::Green;
            swapped[j].color = EdgeColor::Lime;
            Move m{Move::Kind::Toggle, edges[i].id, edges[j].id};
            out.push_back({m, Position(p.ground(), p.nodes(), std::move(swapped)), false});
        }
    }
    return out;
}

CompiledGame compile_to_digraph(const Position& p0, std::size_t cap)
{
    std::vector<NodeColor> colors;
    std::vector<Arc> arcs;
    std::vector<std::optional<Position>> position_of;
    std::unordered_map<std::string, NodeId> white_of;
    std::unordered_map<NodeId, NodeId> gray_of;  // carry-on target -> gray node
    std::deque<NodeId> queue;
    std::size_t positions = 0;

    auto intern = [&](const Position& p) {
        auto [it, fresh] = white_of.emplace(p.key(), static_cast<NodeId>(colors.size()));
        if (fresh) {
            if (++positions > cap)
                throw CapExceeded("more than " + std::to_string(cap) + " reachable positions");
            colors.push_back(NodeColor::White);
            position_of.push_back(p);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(p0);
    while (!queue.empty()) {
        NodeId x = queue.front();
        queue.pop_front();
        Position p = *position_of[x];
        for (const LegalMove& m : legal_moves(p)) {
            NodeId y = intern(m.result);
            if (!m.carry_on) {
                arcs.push_back({x, y});
                continue;
            }
            auto [it, fresh] = gray_of.emplace(y, static_cast<NodeId>(colors.size()));
            if (fresh) {
                colors.push_back(NodeColor::Gray);
                position_of.push_back(std::nullopt);
                arcs.push_back({it->second, y});
            }
            arcs.push_back({x, it->second});
        }
    }
    return {GameDigraph(std::move(colors), arcs), std::move(position_of), 0};
}

WhiteValue solve_position(const Position& p, std::size_t cap)
{
    CompiledGame g = compile_to_digraph(p, cap);
    return solve_carry(g.digraph).value(g.root);
}

SumAnalysis analyze_sum(const std::vector<Position>& ps, std::size_t cap)
{
    if (ps.empty()) throw std::invalid_argument("analyze_sum: no components");
    std::vector<CompiledGame> compiled;
    SumPosition sum;
    for (const Position& p : ps) {
        compiled.push_back(compile_to_digraph(p, cap));
        sum.components.push_back(Component::solved({compiled.back().digraph, compiled.back().root}));
    }
    SumAnalysis r{position_value(sum), position_outcome(sum), best_move(sum), {}};
    for (const LineStep& s : r.advice.line) {
        if (s.forced) continue;
        const CompiledGame& g = compiled[s.component];
        bool carry = g.digraph.is_gray(s.arc.to);
        NodeId target = carry ? g.digraph.options(s.arc.to).front() : s.arc.to;
        const std::string want = g.position_of[target]->key();
        for (const LegalMove& m : legal_moves(*g.position_of[s.arc.from])) {
            if (m.carry_on == carry && m.result.key() == want) {
                r.line.push_back({s.component, m.move, carry});
                break;
            }
        }
    }
    return r;
}

Position parse_position(std::string_view text)
{
    std::optional<std::uint32_t> ground;
    std::vector<std::uint32_t> nodes;
    std::vector<Edge> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::vector<std::pair<std::string, std::size_t>> toks;
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            toks.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        if (toks.empty()) continue;
        auto num = [&](std::size_t i) -> std::uint32_t {
            if (i >= toks.size()) throw ParseError(lineno, line.size() + 1, "missing argument");
            const auto& [t, col] = toks[i];
            if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError(lineno, col, "expected a nonnegative integer, got '" + t + "'");
            return static_cast<std::uint32_t>(std::stoul(t));
        };
        auto arity = [&](std::size_t n) {
            if (toks.size() > n) throw ParseError(lineno, toks[n].second, "unexpected token '" + toks[n].first + "'");
        };
        const std::string& kw = toks[0].first;
        if (kw == "ground") {
            if (ground) throw ParseError(lineno, toks[0].second, "ground declared twice");
            ground = num(1);
            arity(2);
            nodes.push_back(*ground);
        } else if (kw == "node") {
            nodes.push_back(num(1));
            arity(2);
        } else if (kw == "edge") {
            Edge e{num(1), num(2), num(3), EdgeColor::Green};
            if (toks.size() < 5) throw ParseError(lineno, line.size() + 1, "missing edge color");
            arity(5);
            if (toks[4].first == "lime")
                e.color = EdgeColor::Lime;
            else if (toks[4].first != "green")
                throw ParseError(lineno, toks[4].second, "color must be 'green' or 'lime'");
            edges.push_back(e);
        } else {
            throw ParseError(lineno, toks[0].second, "unknown keyword '" + kw + "'");
        }
    }
    if (!ground) throw ParseError(lineno + 1, 1, "no ground declared");
    Position p;
    try {
        p = Position(*ground, nodes, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 1, e.what());
    }
    if (!fall_away(p).second.empty()) throw ParseError(lineno, 1, "some edges are not connected to the ground");
    return p;
}

Position load_position(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_position(ss.str());
}

std::string format_position(const Position& p)
{
    std::ostringstream os;
    os << "ground " << p.ground() << '\n';
    for (auto n : p.nodes())
        if (n != p.ground()) os << "node " << n << '\n';
    for (const Edge& e : p.edges())
        os << "edge " << e.id << ' ' << e.a << ' ' << e.b << (e.color == EdgeColor::Green ? " green\n" : " lime\n");
    return os.str();
}

}  // namespace grundy::hb
