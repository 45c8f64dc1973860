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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "grundy/algebra.hpp"
#include "grundy/oracle.hpp"
#include "grundy/solvers.hpp"

using namespace grundy;

namespace {

std::string val(const Assignment& a, const fixtures::Named& n, const std::string& name)
{
    return a.format(n[name]);
}

// plain depth-limited unrolling of the least-fixpoint definitions
bool dr_depth(const GameDigraph& d, NodeId x, Nat k, const Snapshot& s, int depth)
{
    if (depth == 0) return false;
    for (NodeId y : d.options(x)) {
        if (d.is_white(y)) {
            if (s.white[y] && s.white[y]->is(WhiteValue::Kind::Finite) && s.white[y]->number() == k) return true;
            continue;
        }
        bool all = true;
        for (NodeId z : d.options(y)) all = all && dr_depth(d, z, k, s, depth - 1);
        if (all) return true;
    }
    return false;
}

bool fr_depth(const GameDigraph& d, NodeId x, Nat k, const Snapshot& s, int depth)
{
    if (depth == 0) return false;
    for (NodeId y : d.options(x)) {
        if (!d.is_gray(y)) continue;
        for (NodeId z : d.options(y)) {
            if (d.is_white(z) && s.white[z] && s.white[z]->is(WhiteValue::Kind::Finite) && s.white[z]->number() == k)
                return true;
            if (fr_depth(d, z, k, s, depth - 1)) return true;
        }
    }
    return false;
}

GameDigraph relabel(const GameDigraph& d, const std::vector<NodeId>& perm)
{
    std::vector<NodeColor> colors(d.size());
    for (NodeId x = 0; x < d.size(); ++x) colors[perm[x]] = d.color(x);
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) arcs.push_back({perm[a.from], perm[a.to]});
    return GameDigraph(std::move(colors), arcs);
}

}  // namespace

TEST_CASE("cyclic example with three pieces")
{
    auto n = fixtures::fraenkel();
    for (auto a : {solve_cyclic(n.d), solve_carry(n.d)}) {
        CHECK(val(a, n, "a") == "0");
        CHECK(val(a, n, "b") == "1");
        CHECK(val(a, n, "c") == "2");
        CHECK(val(a, n, "d") == "3");
        CHECK(val(a, n, "h") == "1");
        CHECK(val(a, n, "e") == "inf{2,3}");
        CHECK(val(a, n, "f") == "inf");
        CHECK(val(a, n, "g") == "inf{1}");
    }
}

TEST_CASE("tree and its cyclic variant")
{
    auto t = fixtures::short_nine();
    Assignment s = solve_short(t.d);
    std::string got;
    for (const char* x : {"a", "b", "c", "d", "e", "f", "g", "h", "i"}) got += val(s, t, x) + " ";
    CHECK(got == "1 0 0 1 2 0 0 1 0 ");

    auto n = fixtures::cycle_ten();
    Assignment a = solve_cyclic(n.d);
    got.clear();
    for (const char* x : {"d", "e", "f", "g", "h", "i", "j"}) got += val(a, n, x) + " ";
    CHECK(got == "1 2 0 0 1 0 1 ");
    CHECK(val(a, n, "a") == "inf");
    CHECK(val(a, n, "b") == "inf{1}");
    CHECK(val(a, n, "c") == "inf{2}");
    CHECK(a.steps <= n.d.size());
}

TEST_CASE("entailing values")
{
    auto n = fixtures::protected_one();
    Assignment a = solve_entailing(n.d);
    CHECK(val(a, n, "x") == "1");
    CHECK(val(a, n, "g1") == "N\\{1}");
    CHECK(val(a, n, "n4") == "moon");

    auto m = fixtures::entailing_two();
    Assignment b = solve_entailing(m.d);
    CHECK(val(b, m, "A") == "N\\{0}");
    CHECK(val(b, m, "B") == "N\\{1}");
    CHECK(val(b, m, "a") == "1");
    std::size_t moons = 0;
    for (NodeId x = 0; x < m.d.size(); ++x)
        if (m.d.is_white(x) && b.value(x).is_lunar()) ++moons;
    CHECK(moons == 1);
}

TEST_CASE("cover sets and the acyclic protection test")
{
    auto n = fixtures::protected_one();
    Assignment a = solve_entailing(n.d);
    CHECK(cr_acyclic(n.d, n["g1"], 5, a));
    CHECK_FALSE(cr_acyclic(n.d, n["g1"], 1, a));
    for (NodeId x = 0; x < n.d.size(); ++x) {
        if (!n.d.is_gray(x)) continue;
        NatSet c = covered_values(n.d, x, a);
        for (Nat k = 0; k < 64; ++k) CHECK(c.contains(k) == cr_acyclic(n.d, x, k, a));
    }
    for (std::uint64_t s = 0; s < 200; ++s) {
        GameDigraph d = random_digraph(2 + s % 7, 0.35, 0.35, TheoryClass::Entailing, s);
        Assignment e = solve_entailing(d);
        for (NodeId x = 0; x < d.size(); ++x) {
            if (!d.is_gray(x) || d.is_terminal(x)) continue;
            NatSet c = covered_values(d, x, e);
            for (Nat k = 0; k < 40; ++k) CHECK(c.contains(k) == cr_acyclic(d, x, k, e));
        }
    }
}

TEST_CASE("carry-on values")
{
    auto n = fixtures::carry_seven();
    Assignment a = solve_carry(n.d);
    CHECK(val(a, n, "s") == "1");
    CHECK(val(a, n, "A") == "N\\{1}");
    CHECK(val(a, n, "z1") == "inf{1}");
    CHECK(a.gray_value(n["z2"]).is(GrayValue::Kind::Cyclic));

    auto l = fixtures::moon_chain_left();
    Assignment b = solve_carry(l.d);
    CHECK(val(b, l, "w") == "full");
    CHECK(val(b, l, "g1") == "new");
    CHECK(val(b, l, "g2") == "full");
    CHECK(val(b, l, "g3") == "new");

    auto r = fixtures::moon_chain_right();
    Assignment c = solve_carry(r.d);
    CHECK(val(c, r, "w") == "0");
    CHECK(val(c, r, "g1") == "full");
    CHECK(val(c, r, "g2") == "new");

    for (unsigned k = 1; k <= 4; ++k) {
        auto p = fixtures::pass_with_carry(k);
        CHECK(solve_carry(p.d).value(p["J"]) == WhiteValue::nym(k));
    }
}

TEST_CASE("a carry-on back into the moving node")
{
    // 7 can carry on through 3 straight back to itself; 5 reaches 7 the same way
    std::vector<NodeColor> c{NodeColor::White, NodeColor::Gray, NodeColor::Gray, NodeColor::Gray,
                             NodeColor::Gray,  NodeColor::White, NodeColor::White, NodeColor::White};
    GameDigraph d(c, {{0, 7}, {1, 2}, {3, 7}, {4, 0}, {5, 3}, {5, 4}, {7, 3}, {7, 5}, {7, 6}});
    Assignment a = solve_carry(d);
    auto lab = retrograde_labels(d);
    CHECK(a.format(5) == "moon{0}");
    for (NodeId x = 0; x < d.size(); ++x)
        if (d.is_white(x)) CHECK(outcome_of(a.value(x)) == lab[x]);
}

TEST_CASE("winning carry-on chains are settled before any moon")
{
    std::vector<NodeColor> c{NodeColor::Gray,  NodeColor::Gray,  NodeColor::Gray, NodeColor::Gray,
                             NodeColor::White, NodeColor::White, NodeColor::White};
    GameDigraph d(c, {{0, 3}, {1, 0}, {2, 5}, {4, 5}, {4, 6}, {6, 1}, {6, 2}, {6, 5}});
    Assignment a = solve_carry(d);
    CHECK(a.format(6) == "full");
    CHECK(a.assigned_at[6] == std::size_t{0});
}

TEST_CASE("unrolled definitions agree with the fixpoint tables")
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        GameDigraph d = random_digraph(2 + s % 7, 0.3, 0.4, TheoryClass::CarryOn, s);
        Assignment a = solve_carry(d);
        int depth = static_cast<int>(d.size()) + 1;
        for (Nat k : present_values(a)) {
            auto dt = dr_table(d, k, a);
            auto ft = fr_table(d, k, a);
            for (NodeId x = 0; x < d.size(); ++x) {
                CHECK(static_cast<bool>(dt[x]) == dr_depth(d, x, k, a, depth));
                CHECK(static_cast<bool>(ft[x]) == fr_depth(d, x, k, a, depth));
            }
        }
    }
}

TEST_CASE("assignments are permanent and steps stay within the node count")
{
    SolveOptions opt{true};
    for (std::uint64_t s = 0; s < 400; ++s) {
        TheoryClass t = s % 2 ? TheoryClass::CarryOn : TheoryClass::Cyclic;
        GameDigraph d = random_digraph(1 + s % 8, 0.3, t == TheoryClass::CarryOn ? 0.3 : 0.0, t, s);
        Assignment a = solve_as(d, t, opt);
        REQUIRE(a.trace);
        const auto& snaps = a.trace->snapshots;
        CHECK(a.steps <= d.size());
        for (std::size_t i = 1; i < snaps.size(); ++i) {
            for (NodeId x = 0; x < d.size(); ++x) {
                if (snaps[i - 1].white[x]) CHECK(snaps[i].white[x] == snaps[i - 1].white[x]);
                if (snaps[i - 1].gray[x]) CHECK(snaps[i].gray[x] == snaps[i - 1].gray[x]);
            }
        }
        for (NodeId x = 0; x < d.size(); ++x)
            if (a.assigned_at[x]) CHECK(*a.assigned_at[x] <= a.steps);
    }
    CHECK(solve_cyclic(GameDigraph()).steps == 0);
}

TEST_CASE("values do not depend on node numbering")
{
    std::mt19937_64 rng(99);
    for (std::uint64_t s = 0; s < 300; ++s) {
        GameDigraph d = random_digraph(2 + s % 7, 0.3, 0.3, TheoryClass::CarryOn, s);
        std::vector<NodeId> perm(d.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Assignment a = solve_carry(d), b = solve_carry(relabel(d, perm));
        for (NodeId x = 0; x < d.size(); ++x) CHECK(a.format(x) == b.format(perm[x]));
        CHECK(a.steps == b.steps);
    }
}

TEST_CASE("a single piece has the outcome its value predicts")
{
    for (std::uint64_t s = 0; s < 1500; ++s) {
        GameDigraph d = random_digraph(1 + s % 8, 0.15 + 0.05 * (s % 5), 0.1 * (s % 6), TheoryClass::CarryOn, s);
        Assignment a = solve_carry(d);
        auto lab = retrograde_labels(d);
        for (NodeId x = 0; x < d.size(); ++x) {
            if (!d.is_white(x)) continue;
            CAPTURE(s);
            CHECK(outcome_of(a.value(x)) == lab[x]);
        }
    }
}

TEST_CASE("solvers refuse digraphs outside their class")
{
    CHECK_THROWS_AS(solve_short(fixtures::cycle_ten().d), Unsupported);
    CHECK_THROWS_AS(solve_cyclic(fixtures::protected_one().d), Unsupported);
    CHECK_THROWS_AS(solve_entailing(fixtures::carry_seven().d), Unsupported);
    CHECK_THROWS_AS(solve_carry(fixtures::protected_one().d), Unsupported);
    CHECK(classify(fixtures::protected_one().d) == TheoryClass::Entailing);
    CHECK_NOTHROW(solve_auto(fixtures::protected_one().d));
}

TEST_CASE("trace lists newly assigned nodes")
{
    auto n = fixtures::heap(2);
    Assignment a = solve_short(n.d, {true});
    REQUIRE(a.trace);
    std::string t = format_trace(*a.trace);
    CHECK(t.find("step 1:") != std::string::npos);
    CHECK(t.find("step 2: 0=2") != std::string::npos);
}
