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

#include "grundy/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "grundy/solvers.hpp"
#include "grundy/values.hpp"

namespace grundy {

GameDigraph::GameDigraph(std::vector<NodeColor> colors, const std::vector<Arc>& arcs)
    : colors_(std::move(colors)), succ_(colors_.size()), pred_(colors_.size())
{
    for (const Arc& a : arcs) {
        if (a.from >= colors_.size() || a.to >= colors_.size())
            throw std::out_of_range("arc endpoint outside the node set");
        auto& s = succ_[a.from];
        if (std::find(s.begin(), s.end(), a.to) != s.end()) {
            ++duplicates_;
            continue;
        }
        s.push_back(a.to);
        pred_[a.to].push_back(a.from);
        ++arc_count_;
    }
}

bool GameDigraph::has_arc(NodeId from, NodeId to) const
{
    const auto& s = succ_[from];
    return std::find(s.begin(), s.end(), to) != s.end();
}

std::vector<Arc> GameDigraph::arcs() const
{
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (NodeId x = 0; x < succ_.size(); ++x)
        for (NodeId y : succ_[x]) out.push_back({x, y});
    return out;
}

std::size_t GameDigraph::gray_count() const
{
    return std::count(colors_.begin(), colors_.end(), NodeColor::Gray);
}

std::string to_string(TheoryClass t)
{
    switch (t) {
    case TheoryClass::Short: return "short";
    case TheoryClass::Cyclic: return "cyclic";
    case TheoryClass::Entailing: return "entailing";
    case TheoryClass::CarryOn: return "carry";
    }
    return "?";
}

std::optional<TheoryClass> theory_from_string(std::string_view s)
{
    if (s == "short") return TheoryClass::Short;
    if (s == "cyclic") return TheoryClass::Cyclic;
    if (s == "entailing") return TheoryClass::Entailing;
    if (s == "carry" || s == "carry-on") return TheoryClass::CarryOn;
    return std::nullopt;
}

namespace {

// returns a node on some cycle, if any
std::optional<NodeId> find_cycle(const GameDigraph& d)
{
    // iterative three-color DFS
    std::vector<char> state(d.size(), 0);
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId root = 0; root < d.size(); ++root) {
        if (state[root]) continue;
        stack.push_back({root, 0});
        state[root] = 1;
        while (!stack.empty()) {
            auto& [x, i] = stack.back();
            if (i < d.options(x).size()) {
                NodeId y = d.options(x)[i++];
                if (state[y] == 1) return y;
                if (state[y] == 0) {
                    state[y] = 1;
                    stack.push_back({y, 0});
                }
            } else {
                state[x] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool has_cycle(const GameDigraph& d)
{
    return find_cycle(d).has_value();
}

std::vector<std::string> validate(const GameDigraph& d, TheoryClass t)
{
    std::vector<std::string> v;
    bool acyclic_required = t == TheoryClass::Short || t == TheoryClass::Entailing;
    bool gray_forbidden = t == TheoryClass::Short || t == TheoryClass::Cyclic;
    if (acyclic_required) {
        if (auto x = find_cycle(d)) v.push_back("cycle through node " + std::to_string(*x));
    }
    for (NodeId x = 0; x < d.size(); ++x) {
        if (!d.is_gray(x)) continue;
        if (gray_forbidden) {
            v.push_back("gray node " + std::to_string(x));
            continue;
        }
        if (t == TheoryClass::CarryOn) {
            if (d.options(x).size() > 1)
                v.push_back("gray outdegree " + std::to_string(d.options(x).size()) + " at node " +
                            std::to_string(x));
            if (d.has_arc(x, x)) v.push_back("gray self-loop at node " + std::to_string(x));
        }
    }
    return v;
}

TheoryClass classify(const GameDigraph& d)
{
    bool cyclic = has_cycle(d);
    bool gray = d.gray_count() > 0;
    if (!gray) return cyclic ? TheoryClass::Cyclic : TheoryClass::Short;
    if (!cyclic) return TheoryClass::Entailing;
    auto v = validate(d, TheoryClass::CarryOn);
    if (!v.empty()) throw Unsupported("cyclic digraph outside the carry-on class: " + v.front());
    return TheoryClass::CarryOn;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         msg),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
    }
    return out;
}

bool is_nat(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

ParsedDigraph parse_digraph(std::string_view text)
{
    struct PendingRef {
        Token tok;
        std::size_t line;
    };
    ParsedDigraph out;
    std::map<std::string, NodeId> ids;
    std::vector<NodeColor> colors;
    std::vector<std::pair<PendingRef, PendingRef>> arc_refs;
    std::optional<PendingRef> start_ref;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        auto expect = [&](std::size_t n) {
            if (toks.size() < n) {
                std::size_t col = toks.back().column + toks.back().text.size();
                throw ParseError(lineno, col, "'" + kw + "' expects " + std::to_string(n - 1) + " arguments");
            }
            if (toks.size() > n) throw ParseError(lineno, toks[n].column, "unexpected token '" + toks[n].text + "'");
        };
        auto expect_id = [&](const Token& t) {
            if (!is_nat(t.text)) throw ParseError(lineno, t.column, "node id must be a nonnegative integer");
        };
        if (kw == "node") {
            expect(3);
            expect_id(toks[1]);
            NodeColor c;
            if (toks[2].text == "white") {
                c = NodeColor::White;
            } else if (toks[2].text == "gray" || toks[2].text == "grey") {
                c = NodeColor::Gray;
            } else {
                throw ParseError(lineno, toks[2].column, "color must be 'white' or 'gray'");
            }
            if (ids.count(toks[1].text)) throw ParseError(lineno, toks[1].column, "duplicate node " + toks[1].text);
            ids[toks[1].text] = static_cast<NodeId>(colors.size());
            colors.push_back(c);
            out.labels.push_back(toks[1].text);
        } else if (kw == "arc") {
            expect(3);
            expect_id(toks[1]);
            expect_id(toks[2]);
            arc_refs.push_back({{toks[1], lineno}, {toks[2], lineno}});
        } else if (kw == "start") {
            expect(2);
            expect_id(toks[1]);
            if (start_ref) throw ParseError(lineno, toks[0].column, "more than one start line");
            start_ref = PendingRef{toks[1], lineno};
        } else {
            throw ParseError(lineno, toks[0].column, "unknown keyword '" + kw + "'");
        }
    }

    auto resolve = [&](const PendingRef& r) {
        auto it = ids.find(r.tok.text);
        if (it == ids.end()) throw ParseError(r.line, r.tok.column, "undeclared node " + r.tok.text);
        return it->second;
    };
    std::vector<Arc> arcs;
    for (const auto& [a, b] : arc_refs) arcs.push_back({resolve(a), resolve(b)});
    if (start_ref) out.start = resolve(*start_ref);
    out.digraph = GameDigraph(std::move(colors), arcs);
    if (out.digraph.duplicates_dropped())
        out.warnings.push_back(std::to_string(out.digraph.duplicates_dropped()) + " duplicate arc(s) collapsed");
    return out;
}

ParsedDigraph load_digraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_digraph(ss.str());
}

std::string format_digraph(const GameDigraph& d, std::optional<NodeId> start)
{
    std::ostringstream os;
    for (NodeId x = 0; x < d.size(); ++x)
        os << "node " << x << (d.is_gray(x) ? " gray\n" : " white\n");
    for (const Arc& a : d.arcs()) os << "arc " << a.from << ' ' << a.to << '\n';
    if (start) os << "start " << *start << '\n';
    return os.str();
}

std::string to_dot(const GameDigraph& d, const Assignment* values, std::optional<NodeId> start)
{
    std::ostringstream os;
    os << "digraph G {\n  node [shape=circle];\n";
    for (NodeId x = 0; x < d.size(); ++x) {
        os << "  n" << x << " [label=\"" << x;
        if (values) os << "\\n" << values->format(x);
        os << '"';
        if (d.is_gray(x)) os << ", style=filled, fillcolor=gray";
        if (values && !values->assigned_at[x]) os << ", penwidth=3";
        if (start && *start == x) os << ", peripheries=2";
        os << "];\n";
    }
    for (const Arc& a : d.arcs()) os << "  n" << a.from << " -> n" << a.to << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace grundy
