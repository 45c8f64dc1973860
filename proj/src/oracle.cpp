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

#include "grundy/oracle.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "grundy/algebra.hpp"
#include "grundy/solvers.hpp"

namespace grundy {

Product cartproduct(const GameDigraph& v, const GameDigraph& u)
{
    Product p;
    p.right_size = u.size();
    p.index.assign(v.size() * u.size(), -1);
    std::vector<NodeColor> colors;
    for (NodeId x = 0; x < v.size(); ++x) {
        for (NodeId y = 0; y < u.size(); ++y) {
            if (v.is_gray(x) && u.is_gray(y)) continue;
            p.index[x * u.size() + y] = static_cast<std::int64_t>(p.coords.size());
            p.coords.push_back({x, y});
            colors.push_back(v.is_gray(x) || u.is_gray(y) ? NodeColor::Gray : NodeColor::White);
        }
    }
    std::vector<Arc> arcs;
    for (NodeId id = 0; id < p.coords.size(); ++id) {
        auto [x, y] = p.coords[id];
        if (u.is_white(y))
            for (NodeId x2 : v.options(x)) arcs.push_back({id, static_cast<NodeId>(p.node(x2, y))});
        if (v.is_white(x))
            for (NodeId y2 : u.options(y)) arcs.push_back({id, static_cast<NodeId>(p.node(x, y2))});
    }
    p.digraph = GameDigraph(std::move(colors), arcs);
    return p;
}

std::vector<Outcome> retrograde_labels(const GameDigraph& d)
{
    enum : char { Unknown, P, N };
    const std::size_t n = d.size();
    std::vector<char> label(n, Unknown);
    std::vector<std::size_t> remaining(n);
    std::vector<NodeId> work;
    for (NodeId x = 0; x < n; ++x) {
        remaining[x] = d.options(x).size();
        if (remaining[x] == 0) {
            label[x] = P;
            work.push_back(x);
        }
    }
    while (!work.empty()) {
        NodeId y = work.back();
        work.pop_back();
        for (NodeId x : d.predecessors(y)) {
            if (label[x] != Unknown) continue;
            if (label[y] == P) {
                label[x] = N;
                work.push_back(x);
            } else if (--remaining[x] == 0) {
                label[x] = P;
                work.push_back(x);
            }
        }
    }
    std::vector<Outcome> out(n, Outcome::D);
    for (NodeId x = 0; x < n; ++x) {
        if (label[x] == P) out[x] = Outcome::P;
        if (label[x] == N) out[x] = Outcome::N;
    }
    return out;
}

Outcome retrograde_outcome(const GameDigraph& d, NodeId start)
{
    return retrograde_labels(d).at(start);
}

std::string ConsistencyReport::describe() const
{
    std::ostringstream os;
    os << format_value(left_value) << " + " << format_value(right_value) << " = " << format_value(sum)
       << ": algebra " << to_string(algebra) << ", oracle " << to_string(oracle)
       << (match() ? "" : "  MISMATCH");
    return os.str();
}

ConsistencyReport check_consistency(const Game& v, const Game& u)
{
    if (!v.digraph.is_white(v.start) || !u.digraph.is_white(u.start))
        throw GrayStart("consistency check needs white starts");
    ConsistencyReport r;
    r.left_value = solve_carry(v.digraph).value(v.start);
    r.right_value = solve_carry(u.digraph).value(u.start);
    r.sum = sum_value(r.left_value, r.right_value);
    r.algebra = outcome_of(r.sum);
    Product p = cartproduct(v.digraph, u.digraph);
    r.oracle = retrograde_outcome(p.digraph, static_cast<NodeId>(p.node(v.start, u.start)));
    return r;
}

namespace {

// platform-independent draws from mt19937_64
double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

NodeId pick(std::mt19937_64& rng, std::size_t n)
{
    return static_cast<NodeId>(rng() % n);
}

}  // namespace

GameDigraph random_digraph(std::size_t n, double density, double gray_fraction, TheoryClass theory,
                           std::uint64_t seed)
{
    if (n == 0) throw std::invalid_argument("random_digraph: need at least one node");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("random_digraph: density outside [0,1]");
    if (!(gray_fraction >= 0.0 && gray_fraction <= 1.0))
        throw std::invalid_argument("random_digraph: gray fraction outside [0,1]");
    bool gray_allowed = theory == TheoryClass::Entailing || theory == TheoryClass::CarryOn;
    if (!gray_allowed && gray_fraction > 0.0)
        throw std::invalid_argument("random_digraph: " + to_string(theory) + " digraphs have no gray nodes");
    bool acyclic = theory == TheoryClass::Short || theory == TheoryClass::Entailing;

    std::mt19937_64 rng(seed);
    std::vector<NodeColor> colors(n, NodeColor::White);
    for (auto& c : colors)
        if (unit(rng) < gray_fraction) c = NodeColor::Gray;

    std::vector<Arc> arcs;
    for (NodeId x = 0; x < n; ++x) {
        if (theory == TheoryClass::CarryOn && colors[x] == NodeColor::Gray) {
            // a single option, never itself
            if (n > 1 && unit(rng) < 0.85) {
                NodeId y = pick(rng, n - 1);
                if (y >= x) ++y;
                arcs.push_back({x, y});
            }
            continue;
        }
        // acyclic digraphs only point to lower ids
        NodeId limit = acyclic ? x : static_cast<NodeId>(n);
        for (NodeId y = 0; y < limit; ++y)
            if (unit(rng) < density) arcs.push_back({x, y});
    }
    return GameDigraph(std::move(colors), arcs);
}

Game random_game(std::size_t n, double density, double gray_fraction, TheoryClass theory, std::uint64_t seed)
{
    GameDigraph d = random_digraph(n, density, gray_fraction, theory, seed);
    std::vector<NodeId> whites;
    for (NodeId x = 0; x < d.size(); ++x)
        if (d.is_white(x)) whites.push_back(x);
    if (whites.empty()) {
        // recolor the highest node white; still valid for every class
        auto colors = d.colors();
        colors.back() = NodeColor::White;
        d = GameDigraph(std::move(colors), d.arcs());
        whites.push_back(static_cast<NodeId>(d.size() - 1));
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    return {std::move(d), whites[rng() % whites.size()]};
}

}  // namespace grundy
