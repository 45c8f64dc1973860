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

#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixtures {

using grundy::Arc;
using grundy::NodeColor;

std::string Named::name_of(NodeId x) const
{
    for (const auto& [n, i] : id)
        if (i == x) return n;
    return "?";
}

Named build(const std::vector<std::string>& nodes, const std::vector<std::pair<std::string, std::string>>& arcs)
{
    Named out;
    std::vector<NodeColor> colors;
    for (const std::string& raw : nodes) {
        bool gray = !raw.empty() && raw.back() == '*';
        std::string name = gray ? raw.substr(0, raw.size() - 1) : raw;
        out.id[name] = static_cast<NodeId>(colors.size());
        colors.push_back(gray ? NodeColor::Gray : NodeColor::White);
    }
    std::vector<Arc> as;
    for (const auto& [a, b] : arcs) as.push_back({out.id.at(a), out.id.at(b)});
    out.d = GameDigraph(std::move(colors), as);
    return out;
}

Named fraenkel()
{
    return build({"a", "b", "c", "d", "e", "f", "g", "h"},
                 {{"b", "a"}, {"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}, {"d", "c"},
                  {"e", "c"}, {"e", "d"}, {"e", "f"}, {"f", "g"}, {"g", "e"}, {"g", "b"},
                  {"h", "g"}, {"h", "a"}});
}

Named short_nine()
{
    return build({"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                 {{"a", "c"}, {"b", "a"}, {"b", "d"}, {"d", "f"}, {"c", "e"}, {"e", "g"}, {"e", "h"}, {"h", "i"}});
}

Named cycle_ten()
{
    return build({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
                 {{"a", "c"}, {"c", "b"}, {"b", "a"}, {"b", "d"}, {"d", "f"}, {"c", "e"}, {"e", "g"},
                  {"e", "h"}, {"h", "i"}, {"j", "b"}, {"j", "f"}});
}

Named protected_one()
{
    return build({"x", "n1", "g1*", "n2", "n3", "n4", "n5", "g2*", "n6", "n7", "n8", "n9"},
                 {{"x", "n1"}, {"x", "g1"}, {"n1", "n9"}, {"n1", "n7"}, {"n7", "n8"}, {"g1", "n2"},
                  {"g1", "n4"}, {"n2", "n3"}, {"n4", "n5"}, {"n4", "g2"}, {"g2", "n6"}});
}

Named entailing_two()
{
    return build({"a", "B*", "c", "d", "e", "f", "g", "A*", "i"},
                 {{"a", "c"}, {"a", "B"}, {"B", "d"}, {"d", "f"}, {"c", "e"}, {"e", "g"}, {"e", "A"}, {"A", "i"}});
}

Named carry_seven()
{
    return build({"s", "a", "A*", "b", "c", "z1", "z2*", "z3", "z4", "z5", "w", "w0"},
                 {{"s", "a"}, {"s", "A"}, {"A", "b"}, {"b", "c"}, {"s", "z1"}, {"z1", "z2"}, {"z2", "z3"},
                  {"z3", "z4"}, {"z4", "z5"}, {"z5", "z3"}, {"z3", "w"}, {"w", "w0"}});
}

Named moon_chain_left()
{
    return build({"w", "g1*", "g2*", "g3*"}, {{"w", "g1"}, {"g1", "g2"}, {"g2", "g3"}});
}

Named moon_chain_right()
{
    return build({"w", "g1*", "g2*"}, {{"w", "g1"}, {"g1", "g2"}});
}

namespace {

void add_heap(std::vector<std::string>& nodes, std::vector<std::pair<std::string, std::string>>& arcs,
              const std::string& prefix, unsigned n)
{
    for (unsigned i = 0; i <= n; ++i) {
        nodes.push_back(prefix + std::to_string(i));
        for (unsigned j = 0; j < i; ++j) arcs.push_back({prefix + std::to_string(i), prefix + std::to_string(j)});
    }
}

}  // namespace

Named heap(unsigned n)
{
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> arcs;
    add_heap(nodes, arcs, "h", n);
    // start first
    std::rotate(nodes.begin(), nodes.end() - 1, nodes.end());
    return build(nodes, arcs);
}

Named pass_with_heaps(unsigned n)
{
    std::vector<std::string> nodes{"J"};
    std::vector<std::pair<std::string, std::string>> arcs{{"J", "J"}};
    add_heap(nodes, arcs, "h", n == 0 ? 0 : n - 1);
    for (unsigned i = 0; i < n; ++i) arcs.push_back({"J", "h" + std::to_string(i)});
    return build(nodes, arcs);
}

Named pass_with_carry(unsigned n)
{
    std::vector<std::string> nodes{"J", "G*"};
    std::vector<std::pair<std::string, std::string>> arcs{{"J", "J"}, {"J", "G"}, {"G", "h" + std::to_string(n)}};
    add_heap(nodes, arcs, "h", n);
    return build(nodes, arcs);
}

std::vector<std::pair<std::string, Named>> all_digraphs()
{
    return {{"fraenkel", fraenkel()},
            {"short_nine", short_nine()},
            {"cycle_ten", cycle_ten()},
            {"protected_one", protected_one()},
            {"entailing_two", entailing_two()},
            {"carry_seven", carry_seven()},
            {"moon_chain_left", moon_chain_left()},
            {"moon_chain_right", moon_chain_right()},
            {"pass_with_heaps3", pass_with_heaps(3)},
            {"pass_with_carry3", pass_with_carry(3)},
            {"heap4", heap(4)}};
}

namespace {

hb::EdgeColor color(char c)
{
    if (c == 'g') return hb::EdgeColor::Green;
    if (c == 'l') return hb::EdgeColor::Lime;
    throw std::invalid_argument("edge color must be g or l");
}

}  // namespace

hb::Position stalk(const std::string& colors)
{
    std::vector<std::uint32_t> nodes;
    std::vector<hb::Edge> edges;
    for (std::uint32_t i = 0; i < colors.size(); ++i) {
        nodes.push_back(i + 1);
        edges.push_back({i, i, i + 1, color(colors[i])});
    }
    return hb::Position(0, nodes, edges);
}

hb::Position glass(char bottom, char left, char right)
{
    return hb::Position(0, {1, 2, 3}, {{0, 0, 1, color(bottom)}, {1, 1, 2, color(left)}, {2, 1, 3, color(right)}});
}

hb::Position full_glass()
{
    return hb::Position(0, {1, 2, 3},
                        {{0, 0, 1, hb::EdgeColor::Green},
                         {1, 1, 2, hb::EdgeColor::Green},
                         {2, 1, 3, hb::EdgeColor::Green},
                         {3, 2, 3, hb::EdgeColor::Lime}});
}

std::vector<hb::Position> bar_puzzle()
{
    return {full_glass(), stalk("ll"), glass('l', 'g', 'l'), glass('g', 'l', 'l')};
}

}  // namespace fixtures
