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

#ifndef GRUNDY_HACKENBUSH_HPP
#define GRUNDY_HACKENBUSH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grundy/algebra.hpp"
#include "grundy/digraph.hpp"
#include "grundy/solvers.hpp"
#include "grundy/values.hpp"

namespace grundy::hb {

enum class EdgeColor { Green, Lime };

struct Edge {
    std::uint32_t id;
    std::uint32_t a;
    std::uint32_t b;
    EdgeColor color;
    bool operator==(const Edge&) const = default;
};

/**
 * Green-lime hackenbush picture. Edges are kept sorted by id; two positions
 * are the same exactly when they hold the same edge ids in the same colors.
 */
class Position {
public:
    Position() = default;
    Position(std::uint32_t ground, std::vector<std::uint32_t> nodes, std::vector<Edge> edges);

    std::uint32_t ground() const { return ground_; }
    const std::vector<std::uint32_t>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge* edge(std::uint32_t id) const;
    bool empty() const { return edges_.empty(); }

    std::string key() const;
    bool operator==(const Position& o) const { return ground_ == o.ground_ && edges_ == o.edges_; }

private:
    std::uint32_t ground_ = 0;
    std::vector<std::uint32_t> nodes_;
    std::vector<Edge> edges_;
};

struct Move {
    enum class Kind { Remove, Toggle };
    Kind kind = Kind::Remove;
    std::uint32_t edge = 0;   // removed edge, or the lime edge of a toggle
    std::uint32_t green = 0;  // green edge of a toggle
    std::string describe() const;
};

struct LegalMove {
    Move move;
    Position result;
    bool carry_on = false;
};

std::pair<Position, std::vector<Edge>> fall_away(const Position& p);
std::vector<LegalMove> legal_moves(const Position& p);

struct CompiledGame {
    GameDigraph digraph;
    std::vector<std::optional<Position>> position_of;  // white nodes only
    NodeId root = 0;
};

constexpr std::size_t default_cap = 100000;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CompiledGame compile_to_digraph(const Position& p0, std::size_t cap = default_cap);
WhiteValue solve_position(const Position& p, std::size_t cap = default_cap);

struct HbStep {
    std::size_t component;
    Move move;
    bool carry_on;
};

struct SumAnalysis {
    WhiteValue value;
    Outcome outcome;
    MoveAdvice advice;         // in compiled digraph terms
    std::vector<HbStep> line;  // the mover's own moves
};

SumAnalysis analyze_sum(const std::vector<Position>& ps, std::size_t cap = default_cap);

Position parse_position(std::string_view text);
Position load_position(const std::string& path);
std::string format_position(const Position& p);

}  // namespace grundy::hb

#endif
