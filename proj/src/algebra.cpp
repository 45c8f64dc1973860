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

#include "grundy/algebra.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace grundy {

namespace {

using K = WhiteValue::Kind;

int rank(K k)
{
    switch (k) {
    case K::Inf: return 0;
    case K::Moon: return 1;
    case K::Nym: return 2;
    case K::Finite: return 3;
    case K::FullMoon: return 4;
    }
    return 5;
}

}  // namespace

WhiteValue sum_value(const WhiteValue& g0, const WhiteValue& h0)
{
    if (g0.is(K::FullMoon) || h0.is(K::FullMoon)) return WhiteValue::full_moon();
    const WhiteValue* g = &g0;
    const WhiteValue* h = &h0;
    if (rank(g->kind()) > rank(h->kind())) std::swap(g, h);

    if (g->unadorned() || h->unadorned()) {
        // a single lunar value with no phase: absorbs numbers and moons only
        if (g->is(K::Moon) && (h->is(K::Moon) || h->is(K::Finite))) return WhiteValue::unadorned_moon();
        throw Unsupported("unadorned moon summed with a cyclic value");
    }

    switch (g->kind()) {
    case K::Inf:
        switch (h->kind()) {
        case K::Inf: return WhiteValue::inf();
        case K::Moon: return WhiteValue::inf(xor_sets(g->adorn(), h->adorn()));
        default: return WhiteValue::inf(xor_set(h->number(), g->adorn()));
        }
    case K::Moon:
        if (h->is(K::Moon)) return WhiteValue::moon(xor_sets(g->adorn(), h->adorn()));
        return WhiteValue::moon(xor_set(h->number(), g->adorn()));
    case K::Nym:
        return WhiteValue::nym(nim_sum(g->number(), h->number()));
    case K::Finite:
        return WhiteValue::finite(nim_sum(g->number(), h->number()));
    case K::FullMoon:
        break;
    }
    return WhiteValue::full_moon();
}

Outcome outcome_of(const WhiteValue& g)
{
    switch (g.kind()) {
    case K::Finite: return g.number() == 0 ? Outcome::P : Outcome::N;
    case K::Moon:
    case K::FullMoon: return Outcome::N;
    case K::Inf: return g.adorn().contains(0) ? Outcome::N : Outcome::D;
    case K::Nym: return g.number() == 0 ? Outcome::D : Outcome::N;
    }
    return Outcome::D;
}

std::string to_string(PresenceVerdict v)
{
    switch (v) {
    case PresenceVerdict::Win: return "win";
    case PresenceVerdict::Loss: return "loss";
    case PresenceVerdict::TiePossible: return "tie-possible";
    }
    return "?";
}

PresenceVerdict gray_presence_verdict(const GrayValue& c, Nat k)
{
    switch (c.kind()) {
    case GrayValue::Kind::NewMoon: return PresenceVerdict::Loss;
    case GrayValue::Kind::FullMoon: return PresenceVerdict::Win;
    case GrayValue::Kind::Cover: return c.covered().contains(k) ? PresenceVerdict::Loss : PresenceVerdict::Win;
    case GrayValue::Kind::Cyclic: return PresenceVerdict::TiePossible;
    }
    return PresenceVerdict::TiePossible;
}

Component Component::solved(Game g)
{
    Component c{std::move(g), {}};
    c.values = solve_carry(c.game.digraph);
    return c;
}

namespace {

using Nodes = std::vector<NodeId>;

Nodes starts(const SumPosition& p)
{
    Nodes out;
    for (std::size_t i = 0; i < p.components.size(); ++i) {
        const Component& c = p.components[i];
        if (c.game.digraph.is_gray(c.game.start))
            throw GrayStart("component " + std::to_string(i) + " starts on a gray node");
        out.push_back(c.game.start);
    }
    return out;
}

WhiteValue value_at(const SumPosition& p, const Nodes& at)
{
    if (p.components.empty()) throw std::invalid_argument("empty sum");
    WhiteValue v = p.components[0].values.value(at[0]);
    for (std::size_t i = 1; i < at.size(); ++i) v = sum_value(v, p.components[i].values.value(at[i]));
    return v;
}

struct Frontier {
    Nodes at;
    std::vector<LineStep> line;
};

enum class ChainEnd { OpponentStuck, MoverStuck, MoverToMove, OpponentToMove, Endless };

// follows forced responses after the mover enters gray node g of component i
ChainEnd follow_chain(const GameDigraph& d, std::size_t i, NodeId g, Nodes& at, std::vector<LineStep>& line)
{
    bool opponent_entailed = true;
    std::set<NodeId> seen;
    NodeId cur = g;
    while (true) {
        if (!seen.insert(cur).second) return ChainEnd::Endless;
        if (d.is_terminal(cur)) return opponent_entailed ? ChainEnd::OpponentStuck : ChainEnd::MoverStuck;
        NodeId z = d.options(cur).front();
        line.push_back({i, {cur, z}, true});
        at[i] = z;
        if (d.is_white(z)) return opponent_entailed ? ChainEnd::MoverToMove : ChainEnd::OpponentToMove;
        opponent_entailed = !opponent_entailed;
        cur = z;
    }
}

// a sequence of turn-keeping moves that returns to a state already on the path
bool find_loop(const SumPosition& p, const Nodes& at, std::set<Nodes>& on_path, std::set<Nodes>& done,
               std::vector<LineStep>& line)
{
    on_path.insert(at);
    for (std::size_t i = 0; i < at.size(); ++i) {
        const GameDigraph& d = p.components[i].game.digraph;
        for (NodeId y : d.options(at[i])) {
            if (d.is_white(y)) continue;
            Nodes next = at;
            next[i] = y;
            std::size_t mark = line.size();
            line.push_back({i, {at[i], y}, false});
            ChainEnd end = follow_chain(d, i, y, next, line);
            if (end == ChainEnd::Endless) return true;
            if (end == ChainEnd::MoverToMove) {
                if (on_path.count(next)) return true;
                if (!done.count(next) && find_loop(p, next, on_path, done, line)) return true;
            }
            line.resize(mark);
        }
    }
    on_path.erase(at);
    done.insert(at);
    return false;
}

}  // namespace

WhiteValue position_value(const SumPosition& p)
{
    return value_at(p, starts(p));
}

Outcome position_outcome(const SumPosition& p)
{
    return outcome_of(position_value(p));
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Win: return "win";
    case Verdict::Draw: return "draw";
    case Verdict::Loss: return "loss";
    }
    return "?";
}

MoveAdvice best_move(const SumPosition& p)
{
    Nodes init = starts(p);
    Outcome o = outcome_of(value_at(p, init));
    MoveAdvice advice;

    if (o == Outcome::P) {
        advice.verdict = Verdict::Loss;
        advice.rationale = "every move hands the opponent a winning position";
        for (std::size_t i = 0; i < init.size() && advice.line.empty(); ++i) {
            const GameDigraph& d = p.components[i].game.digraph;
            if (d.is_terminal(init[i])) continue;
            NodeId y = d.options(init[i]).front();
            Nodes at = init;
            at[i] = y;
            advice.line.push_back({i, {init[i], y}, false});
            if (d.is_gray(y)) follow_chain(d, i, y, at, advice.line);
        }
        if (advice.line.empty()) advice.rationale = "no move available";
        return advice;
    }

    // breadth-first over the mover's continuations, so shorter lines win ties
    const Outcome target = o == Outcome::N ? Outcome::P : Outcome::D;
    std::deque<Frontier> queue{{init, {}}};
    std::set<Nodes> visited{init};
    while (!queue.empty()) {
        Frontier f = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < f.at.size(); ++i) {
            const GameDigraph& d = p.components[i].game.digraph;
            for (NodeId y : d.options(f.at[i])) {
                Nodes at = f.at;
                at[i] = y;
                std::vector<LineStep> line = f.line;
                line.push_back({i, {f.at[i], y}, false});
                ChainEnd end = d.is_white(y) ? ChainEnd::OpponentToMove : follow_chain(d, i, y, at, line);
                switch (end) {
                case ChainEnd::OpponentStuck:
                    if (target == Outcome::P) {
                        advice.verdict = Verdict::Win;
                        advice.line = std::move(line);
                        advice.rationale = "the opponent is forced onto a terminal gray node";
                        return advice;
                    }
                    break;
                case ChainEnd::Endless:
                    if (target == Outcome::D) {
                        advice.verdict = Verdict::Draw;
                        advice.line = std::move(line);
                        advice.rationale = "forced responses cycle forever";
                        return advice;
                    }
                    break;
                case ChainEnd::MoverStuck:
                    break;
                case ChainEnd::MoverToMove:
                    if (visited.insert(at).second) queue.push_back({at, std::move(line)});
                    break;
                case ChainEnd::OpponentToMove: {
                    WhiteValue v = value_at(p, at);
                    if (outcome_of(v) == target) {
                        advice.verdict = target == Outcome::P ? Verdict::Win : Verdict::Draw;
                        advice.line = std::move(line);
                        advice.rationale = "leaves the opponent a position of value " + format_value(v);
                        return advice;
                    }
                    break;
                }
                }
            }
        }
    }
    if (target == Outcome::D) {
        std::set<Nodes> on_path, done;
        if (find_loop(p, init, on_path, done, advice.line)) {
            advice.verdict = Verdict::Draw;
            advice.rationale = "the mover can keep the turn forever";
            return advice;
        }
    }
    throw InternalError("no line realizes the " + to_string(o) + " outcome of value " +
                        format_value(value_at(p, init)));
}

std::string format_line(const std::vector<LineStep>& line)
{
    std::ostringstream os;
    for (const LineStep& s : line) {
        os << "component#" << s.component << ": " << s.arc.from << "->" << s.arc.to;
        if (s.forced) os << " (forced)";
        os << '\n';
    }
    return os.str();
}

}  // namespace grundy
