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

#ifndef GRUNDY_TESTS_FIXTURES_HPP
#define GRUNDY_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grundy/digraph.hpp"
#include "grundy/hackenbush.hpp"

namespace fixtures {

using grundy::GameDigraph;
using grundy::NodeId;

// a digraph with named nodes; a trailing '*' in a name marks a gray node
struct Named {
    GameDigraph d;
    std::map<std::string, NodeId> id;
    std::string name_of(NodeId x) const;
    NodeId operator[](const std::string& n) const { return id.at(n); }
};

Named build(const std::vector<std::string>& nodes, const std::vector<std::pair<std::string, std::string>>& arcs);

Named fraenkel();       // cyclic, pieces at h, d and e
Named short_nine();     // nine-node acyclic example
Named cycle_ten();      // the same with a 3-cycle and an extra node
Named protected_one();  // entailing, start x has protected set N\{1}
Named entailing_two();  // entailing, gray A and B
Named carry_seven();    // carry-on with a cyclic zone
Named moon_chain_left();
Named moon_chain_right();

// white self-loop plus arcs to heaps *0..*(n-1)
Named pass_with_heaps(unsigned n);
// white self-loop plus a carry-on arc onto *n
Named pass_with_carry(unsigned n);
// nim heap *n
Named heap(unsigned n);

std::vector<std::pair<std::string, Named>> all_digraphs();

namespace hb = grundy::hb;

hb::Position stalk(const std::string& colors_bottom_up);  // e.g. "gl"
hb::Position glass(char bottom, char left, char right);
hb::Position full_glass();
std::vector<hb::Position> bar_puzzle();

}  // namespace fixtures

#endif
