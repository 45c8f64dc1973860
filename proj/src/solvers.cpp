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

#include "grundy/solvers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace grundy {

const WhiteValue& Assignment::value(NodeId x) const
{
    if (!white[x]) throw std::invalid_argument("node " + std::to_string(x) + " has no white value");
    return *white[x];
}

const GrayValue& Assignment::gray_value(NodeId x) const
{
    if (!gray[x]) throw std::invalid_argument("node " + std::to_string(x) + " has no gray value");
    return *gray[x];
}

std::string Assignment::format(NodeId x) const
{
    if (white[x]) return format_value(*white[x]);
    if (gray[x]) return format_value(*gray[x]);
    return "?";
}

namespace {

void require(const GameDigraph& d, TheoryClass t, const char* solver)
{
    auto v = validate(d, t);
    if (!v.empty()) throw Unsupported(std::string(solver) + ": " + v.front());
}

bool finite_equals(const std::optional<WhiteValue>& v, Nat k)
{
    return v && v->is(WhiteValue::Kind::Finite) && v->number() == k;
}

/*
 * Jacobi iteration shared by all four solvers. assign(x, cur, next, step)
 * may write a value for the unassigned node x into next, reading cur only.
 */
template <class AssignFn>
Assignment iterate(const GameDigraph& d, const Snapshot& init, const SolveOptions& opt, AssignFn assign)
{
    const std::size_t n = d.size();
    Assignment a;
    a.assigned_at.assign(n, std::nullopt);
    if (opt.trace) a.trace.emplace();

    Snapshot cur = init;
    for (NodeId x = 0; x < n; ++x)
        if (cur.assigned(x)) a.assigned_at[x] = 0;
    if (a.trace) a.trace->snapshots.push_back(cur);

    std::size_t step = 0;
    while (n > 0) {
        Snapshot next = cur;
        bool changed = false;
        for (NodeId x = 0; x < n; ++x) {
            if (cur.assigned(x)) continue;
            if (assign(x, cur, next, step)) {
                a.assigned_at[x] = step + 1;
                changed = true;
            }
        }
        if (!changed) {
            a.steps = step + 1;
            break;
        }
        cur = std::move(next);
        ++step;
        if (a.trace) a.trace->snapshots.push_back(cur);
        if (step > n) throw InternalError("assignment did not halt within the node bound");
    }
    static_cast<Snapshot&>(a) = std::move(cur);
    return a;
}

bool options_assigned(const GameDigraph& d, NodeId x, const Snapshot& s)
{
    for (NodeId y : d.options(x))
        if (!s.assigned(y)) return false;
    return true;
}

std::vector<Nat> finite_option_values(const GameDigraph& d, NodeId x, const Snapshot& s)
{
    std::vector<Nat> out;
    for (NodeId y : d.options(x)) {
        const auto& v = s.white[y];
        if (v && v->is(WhiteValue::Kind::Finite)) out.push_back(v->number());
    }
    return out;
}

}  // namespace

Assignment solve_short(const GameDigraph& d, SolveOptions opt)
{
    require(d, TheoryClass::Short, "solve_short");
    Snapshot init(d.size());
    for (NodeId x = 0; x < d.size(); ++x)
        if (d.is_terminal(x)) init.white[x] = WhiteValue::finite(0);
    return iterate(d, init, opt, [&](NodeId x, const Snapshot& cur, Snapshot& next, std::size_t) {
        if (!options_assigned(d, x, cur)) return false;
        next.white[x] = WhiteValue::finite(mex(finite_option_values(d, x, cur)));
        return true;
    });
}

Assignment solve_cyclic(const GameDigraph& d, SolveOptions opt)
{
    require(d, TheoryClass::Cyclic, "solve_cyclic");
    Snapshot init(d.size());
    for (NodeId x = 0; x < d.size(); ++x)
        if (d.is_terminal(x)) init.white[x] = WhiteValue::finite(0);
    Assignment a = iterate(d, init, opt, [&](NodeId x, const Snapshot& cur, Snapshot& next, std::size_t) {
        Nat m = mex(finite_option_values(d, x, cur));
        for (NodeId y : d.options(x)) {
            const auto& v = cur.white[y];
            if (v && v->number() <= m) continue;
            // y is unassigned or above m: it must revert to m
            bool reverts = false;
            for (NodeId z : d.options(y))
                if (finite_equals(cur.white[z], m)) reverts = true;
            if (!reverts) return false;
        }
        next.white[x] = WhiteValue::finite(m);
        return true;
    });
    for (NodeId x = 0; x < d.size(); ++x)
        if (!a.white[x]) a.white[x] = WhiteValue::inf(NatSet::finite(finite_option_values(d, x, a)));
    return a;
}

bool cr_acyclic(const GameDigraph& d, NodeId x, Nat k, const Snapshot& partial)
{
    for (NodeId y : d.options(x)) {
        if (d.is_white(y)) {
            const auto& v = partial.white[y];
            if (!v) throw std::invalid_argument("cr_acyclic: option " + std::to_string(y) + " unassigned");
            if (finite_equals(v, k)) return false;
        } else {
            const auto& g = partial.gray[y];
            if (!g || !g->is(GrayValue::Kind::Cover))
                throw std::invalid_argument("cr_acyclic: option " + std::to_string(y) + " has no cover");
            if (g->covered().contains(k)) return false;
        }
    }
    return true;
}

NatSet covered_values(const GameDigraph& d, NodeId x, const Snapshot& partial)
{
    if (d.is_terminal(x)) return NatSet::all();
    bool any_cofinite = false;
    std::vector<Nat> excluded_union;
    Nat bound = 0;  // exceeds every finite cover element and white value
    for (NodeId y : d.options(x)) {
        if (d.is_white(y)) {
            const auto& v = partial.white[y];
            if (v && v->is(WhiteValue::Kind::Finite)) bound = std::max(bound, v->number() + 1);
            continue;
        }
        const auto& g = partial.gray[y];
        if (!g || !g->is(GrayValue::Kind::Cover)) continue;
        const NatSet& c = g->covered();
        if (c.is_cofinite()) {
            any_cofinite = true;
            excluded_union.insert(excluded_union.end(), c.basis().begin(), c.basis().end());
        } else if (!c.basis().empty()) {
            bound = std::max(bound, c.basis().back() + 1);
        }
    }
    if (any_cofinite) {
        // above every excluded value some option covers k, so the set is finite
        std::vector<Nat> members;
        if (!excluded_union.empty()) {
            Nat l = *std::max_element(excluded_union.begin(), excluded_union.end());
            for (Nat k = 0; k <= l; ++k)
                if (cr_acyclic(d, x, k, partial)) members.push_back(k);
        }
        return NatSet::finite(std::move(members));
    }
    std::vector<Nat> missing;
    for (Nat k = 0; k < bound; ++k)
        if (!cr_acyclic(d, x, k, partial)) missing.push_back(k);
    return NatSet::cofinite(std::move(missing));
}

Assignment solve_entailing(const GameDigraph& d, SolveOptions opt)
{
    require(d, TheoryClass::Entailing, "solve_entailing");
    Snapshot init(d.size());
    for (NodeId x = 0; x < d.size(); ++x) {
        if (!d.is_terminal(x)) continue;
        if (d.is_white(x))
            init.white[x] = WhiteValue::finite(0);
        else
            init.gray[x] = GrayValue::cover(NatSet::all());
    }
    return iterate(d, init, opt, [&](NodeId x, const Snapshot& cur, Snapshot& next, std::size_t) {
        if (!options_assigned(d, x, cur)) return false;
        if (d.is_gray(x)) {
            next.gray[x] = GrayValue::cover(covered_values(d, x, cur));
            return true;
        }
        NatSet dp = NatSet::finite(finite_option_values(d, x, cur));
        for (NodeId y : d.options(x))
            if (d.is_gray(y)) dp = dp.unite(cur.gray[y]->covered());
        if (dp.is_all())
            next.white[x] = WhiteValue::unadorned_moon();
        else
            next.white[x] = WhiteValue::finite(mex(dp));
        return true;
    });
}

std::vector<char> cr_carry_table(const GameDigraph& d, Nat k, const Snapshot& partial)
{
    const std::size_t n = d.size();
    std::vector<char> has_k(n, 0);
    for (NodeId y = 0; y < n; ++y)
        for (NodeId z : d.options(y))
            if (d.is_white(z) && finite_equals(partial.white[z], k)) has_k[y] = 1;

    std::vector<char> cr(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (NodeId x = 0; x < n; ++x) {
            if (!d.is_gray(x) || cr[x]) continue;
            bool ok = d.is_terminal(x);
            for (NodeId y : d.options(x)) {
                const auto& v = partial.white[y];
                bool cond = d.is_white(y) && v && (v->is_lunar() || (v->is(WhiteValue::Kind::Finite) && v->number() != k));
                cond = cond || has_k[y];
                for (NodeId z : d.options(y))
                    if (d.is_gray(z) && cr[z]) cond = true;
                ok = ok || cond;
            }
            if (ok) {
                cr[x] = 1;
                changed = true;
            }
        }
    }
    return cr;
}

bool cr_carry(const GameDigraph& d, NodeId x, Nat k, const Snapshot& partial)
{
    return cr_carry_table(d, k, partial)[x];
}

std::vector<char> dr_table(const GameDigraph& d, Nat k, const Snapshot& final_values)
{
    const std::size_t n = d.size();
    std::vector<char> dr(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (NodeId x = 0; x < n; ++x) {
            if (dr[x]) continue;
            bool ok = false;
            for (NodeId y : d.options(x)) {
                if (d.is_white(y)) {
                    ok = ok || finite_equals(final_values.white[y], k);
                } else {
                    bool all = true;
                    for (NodeId z : d.options(y)) all = all && dr[z];
                    ok = ok || all;
                }
            }
            if (ok) {
                dr[x] = 1;
                changed = true;
            }
        }
    }
    return dr;
}

std::vector<char> fr_table(const GameDigraph& d, Nat k, const Snapshot& final_values)
{
    const std::size_t n = d.size();
    std::vector<char> fr(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (NodeId x = 0; x < n; ++x) {
            if (fr[x]) continue;
            bool ok = false;
            for (NodeId y : d.options(x)) {
                if (!d.is_gray(y)) continue;
                for (NodeId z : d.options(y))
                    ok = ok || (d.is_white(z) && finite_equals(final_values.white[z], k)) || fr[z];
            }
            if (ok) {
                fr[x] = 1;
                changed = true;
            }
        }
    }
    return fr;
}

bool dr(const GameDigraph& d, NodeId x, Nat k, const Snapshot& final_values)
{
    return dr_table(d, k, final_values)[x];
}

bool fr(const GameDigraph& d, NodeId x, Nat k, const Snapshot& final_values)
{
    return fr_table(d, k, final_values)[x];
}

std::vector<Nat> present_values(const Snapshot& s)
{
    std::vector<Nat> out;
    for (const auto& v : s.white)
        if (v && v->is(WhiteValue::Kind::Finite)) out.push_back(v->number());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

template <class TableFn>
std::vector<NatSet> collect_all(const GameDigraph& d, const Snapshot& s, TableFn table)
{
    std::vector<std::vector<Nat>> members(d.size());
    for (Nat k : present_values(s)) {
        auto t = table(d, k, s);
        for (NodeId x = 0; x < d.size(); ++x)
            if (t[x]) members[x].push_back(k);
    }
    std::vector<NatSet> out;
    out.reserve(d.size());
    for (auto& m : members) out.push_back(NatSet::finite(std::move(m)));
    return out;
}

}  // namespace

std::vector<NatSet> direct_values_all(const GameDigraph& d, const Snapshot& final_values)
{
    return collect_all(d, final_values, dr_table);
}

std::vector<NatSet> forcing_values_all(const GameDigraph& d, const Snapshot& final_values)
{
    return collect_all(d, final_values, fr_table);
}

NatSet direct_values(const GameDigraph& d, NodeId x, const Snapshot& final_values)
{
    std::vector<Nat> out;
    for (Nat k : present_values(final_values))
        if (dr(d, x, k, final_values)) out.push_back(k);
    return NatSet::finite(std::move(out));
}

NatSet forcing_values(const GameDigraph& d, NodeId x, const Snapshot& final_values)
{
    std::vector<Nat> out;
    for (Nat k : present_values(final_values))
        if (fr(d, x, k, final_values)) out.push_back(k);
    return NatSet::finite(std::move(out));
}

Assignment solve_carry(const GameDigraph& d, SolveOptions opt)
{
    require(d, TheoryClass::CarryOn, "solve_carry");
    Snapshot init(d.size());
    for (NodeId x = 0; x < d.size(); ++x) {
        if (!d.is_terminal(x)) continue;
        if (d.is_white(x))
            init.white[x] = WhiteValue::finite(0);
        else
            init.gray[x] = GrayValue::new_moon();
    }
    // winning carry-on chains do not depend on any number, so settle them before the first step
    for (bool grew = true; grew;) {
        grew = false;
        for (NodeId x = 0; x < d.size(); ++x) {
            if (init.assigned(x)) continue;
            if (d.is_white(x)) {
                for (NodeId y : d.options(x)) {
                    if (d.is_gray(y) && init.gray[y] && init.gray[y]->is(GrayValue::Kind::NewMoon)) {
                        init.white[x] = WhiteValue::full_moon();
                        grew = true;
                        break;
                    }
                }
                continue;
            }
            NodeId y = d.options(x).front();
            if (d.is_white(y)) {
                if (init.white[y] && init.white[y]->is(WhiteValue::Kind::FullMoon)) init.gray[x] = GrayValue::new_moon();
            } else if (init.gray[y]) {
                init.gray[x] = init.gray[y]->is(GrayValue::Kind::NewMoon) ? GrayValue::full_moon() : GrayValue::new_moon();
            }
            grew = grew || init.assigned(x);
        }
    }

    std::size_t cache_step = static_cast<std::size_t>(-1);
    std::map<Nat, std::vector<char>> cr_cache;

    auto assign_gray = [&](NodeId x, const Snapshot& cur, Snapshot& next) {
        NodeId y = d.options(x).front();
        if (d.is_white(y)) {
            const auto& v = cur.white[y];
            if (!v) return false;
            if (v->is(WhiteValue::Kind::FullMoon))
                next.gray[x] = GrayValue::new_moon();
            else if (v->is(WhiteValue::Kind::Moon))
                next.gray[x] = GrayValue::cover(NatSet::all());
            else
                next.gray[x] = GrayValue::cover(NatSet::cofinite({v->number()}));
            return true;
        }
        const auto& g = cur.gray[y];
        if (!g) return false;
        switch (g->kind()) {
        case GrayValue::Kind::FullMoon: next.gray[x] = GrayValue::new_moon(); break;
        case GrayValue::Kind::NewMoon: next.gray[x] = GrayValue::full_moon(); break;
        case GrayValue::Kind::Cover: next.gray[x] = GrayValue::cover(g->covered().complement()); break;
        case GrayValue::Kind::Cyclic: return false;
        }
        return true;
    };

    auto assign_white = [&](NodeId x, const Snapshot& cur, Snapshot& next, std::size_t step) {
        for (NodeId y : d.options(x)) {
            if (d.is_gray(y) && cur.gray[y] && cur.gray[y]->is(GrayValue::Kind::NewMoon)) {
                next.white[x] = WhiteValue::full_moon();
                return true;
            }
        }
        NatSet dp = NatSet::finite(finite_option_values(d, x, cur));
        for (NodeId y : d.options(x)) {
            if (!d.is_gray(y) || !cur.gray[y]) continue;
            if (cur.gray[y]->is(GrayValue::Kind::Cover)) dp = dp.unite(cur.gray[y]->covered());
        }
        if (dp.is_all()) {
            next.white[x] = WhiteValue::unadorned_moon();
            return true;
        }
        Nat m = mex(dp);
        if (cache_step != step) {
            cr_cache.clear();
            cache_step = step;
        }
        const std::vector<char>* cr = nullptr;
        for (NodeId y : d.options(x)) {
            if (cur.assigned(y)) continue;
            bool reverts = false;
            for (NodeId z : d.options(y)) {
                if (d.is_white(z)) {
                    reverts = reverts || finite_equals(cur.white[z], m);
                } else {
                    if (!cr) {
                        auto it = cr_cache.find(m);
                        if (it == cr_cache.end()) it = cr_cache.emplace(m, cr_carry_table(d, m, cur)).first;
                        cr = &it->second;
                    }
                    reverts = reverts || (*cr)[z];
                }
            }
            if (!reverts) return false;
        }
        next.white[x] = WhiteValue::finite(m);
        return true;
    };

    Assignment a = iterate(d, init, opt, [&](NodeId x, const Snapshot& cur, Snapshot& next, std::size_t step) {
        return d.is_gray(x) ? assign_gray(x, cur, next) : assign_white(x, cur, next, step);
    });

    auto forcing = forcing_values_all(d, a);
    std::vector<NatSet> direct;
    for (NodeId x = 0; x < d.size(); ++x) {
        if (d.is_gray(x)) {
            if (!a.gray[x]) a.gray[x] = GrayValue::cyclic();
            continue;
        }
        if (a.white[x]) {
            if (a.white[x]->is(WhiteValue::Kind::Moon)) a.white[x] = WhiteValue::moon(forcing[x]);
            continue;
        }
        const NatSet& f = forcing[x];
        if (direct.empty()) direct = direct_values_all(d, a);
        // two forcing values, or forcing f while also exiting to f, protect every heap
        if (f.size() >= 2 || (f.size() == 1 && direct[x].contains(f.basis().front())))
            a.white[x] = WhiteValue::moon(f);
        else if (f.size() == 1)
            a.white[x] = WhiteValue::nym(f.basis().front());
        else
            a.white[x] = WhiteValue::inf(direct[x]);
    }
    return a;
}

Assignment solve_as(const GameDigraph& d, TheoryClass t, SolveOptions opt)
{
    switch (t) {
    case TheoryClass::Short: return solve_short(d, opt);
    case TheoryClass::Cyclic: return solve_cyclic(d, opt);
    case TheoryClass::Entailing: return solve_entailing(d, opt);
    case TheoryClass::CarryOn: return solve_carry(d, opt);
    }
    throw std::invalid_argument("unknown theory");
}

Assignment solve_auto(const GameDigraph& d, SolveOptions opt)
{
    return solve_as(d, classify(d), opt);
}

std::string format_trace(const SolveTrace& t)
{
    std::ostringstream os;
    for (std::size_t s = 0; s < t.snapshots.size(); ++s) {
        const Snapshot& cur = t.snapshots[s];
        os << "step " << s << ':';
        for (NodeId x = 0; x < cur.white.size(); ++x) {
            if (!cur.assigned(x)) continue;
            if (s > 0 && t.snapshots[s - 1].assigned(x)) continue;
            os << ' ' << x << '=' << (cur.white[x] ? format_value(*cur.white[x]) : format_value(*cur.gray[x]));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace grundy
