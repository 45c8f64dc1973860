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

#ifndef GRUNDY_ORACLE_HPP
#define GRUNDY_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grundy/digraph.hpp"
#include "grundy/values.hpp"

namespace grundy {

struct ProductNode {
    NodeId left;
    NodeId right;
};

/**
 * Two-piece position space: a node per pair of factor nodes that are not
 * both gray. A piece may move only while the other piece sits on white.
 */
struct Product {
    GameDigraph digraph;
    std::vector<ProductNode> coords;
    std::vector<std::int64_t> index;  // left * |U| + right -> node or -1
    std::size_t right_size = 0;

    std::int64_t node(NodeId left, NodeId right) const { return index[left * right_size + right]; }
};

Product cartproduct(const GameDigraph& v, const GameDigraph& u);

// P/N/D of every node, by backward induction with draw residue
std::vector<Outcome> retrograde_labels(const GameDigraph& d);
Outcome retrograde_outcome(const GameDigraph& d, NodeId start);

struct ConsistencyReport {
    WhiteValue left_value;
    WhiteValue right_value;
    WhiteValue sum;
    Outcome algebra = Outcome::D;
    Outcome oracle = Outcome::D;
    bool match() const { return algebra == oracle; }
    std::string describe() const;
};

ConsistencyReport check_consistency(const Game& v, const Game& u);

GameDigraph random_digraph(std::size_t n_nodes, double arc_density, double gray_fraction, TheoryClass theory,
                           std::uint64_t seed);

// a random game on a digraph whose start node is white
Game random_game(std::size_t n_nodes, double arc_density, double gray_fraction, TheoryClass theory,
                 std::uint64_t seed);

}  // namespace grundy

#endif
