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

#ifndef GRUNDY_DIGRAPH_HPP
#define GRUNDY_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grundy {

using NodeId = std::uint32_t;

enum class NodeColor { White, Gray };

struct Arc {
    NodeId from;
    NodeId to;
    bool operator==(const Arc&) const = default;
};

/**
 * Finite game digraph with white and gray nodes. Immutable once built;
 * successor lists keep the order in which arcs were added.
 */
class GameDigraph {
public:
    GameDigraph() = default;
    // duplicate arcs are dropped and counted; out-of-range endpoints throw
    GameDigraph(std::vector<NodeColor> colors, const std::vector<Arc>& arcs);

    std::size_t size() const { return colors_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    NodeColor color(NodeId x) const { return colors_[x]; }
    bool is_gray(NodeId x) const { return colors_[x] == NodeColor::Gray; }
    bool is_white(NodeId x) const { return colors_[x] == NodeColor::White; }
    const std::vector<NodeId>& options(NodeId x) const { return succ_[x]; }
    const std::vector<NodeId>& predecessors(NodeId x) const { return pred_[x]; }
    bool is_terminal(NodeId x) const { return succ_[x].empty(); }
    bool has_arc(NodeId from, NodeId to) const;
    std::vector<Arc> arcs() const;
    const std::vector<NodeColor>& colors() const { return colors_; }
    std::size_t duplicates_dropped() const { return duplicates_; }
    std::size_t gray_count() const;

    bool operator==(const GameDigraph& o) const { return colors_ == o.colors_ && succ_ == o.succ_; }

private:
    std::vector<NodeColor> colors_;
    std::vector<std::vector<NodeId>> succ_;
    std::vector<std::vector<NodeId>> pred_;
    std::size_t arc_count_ = 0;
    std::size_t duplicates_ = 0;
};

struct Game {
    GameDigraph digraph;
    NodeId start = 0;
};

enum class TheoryClass { Short, Cyclic, Entailing, CarryOn };

std::string to_string(TheoryClass t);
std::optional<TheoryClass> theory_from_string(std::string_view s);

bool has_cycle(const GameDigraph& d);

// empty result means ok
std::vector<std::string> validate(const GameDigraph& d, TheoryClass t);

// throws Unsupported when a gray node has two or more options in a cyclic digraph
TheoryClass classify(const GameDigraph& d);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ParsedDigraph {
    GameDigraph digraph;
    std::optional<NodeId> start;
    std::vector<std::string> labels;  // file id of each dense node
    std::vector<std::string> warnings;
};

ParsedDigraph parse_digraph(std::string_view text);
ParsedDigraph load_digraph(const std::string& path);
std::string format_digraph(const GameDigraph& d, std::optional<NodeId> start = std::nullopt);

struct Assignment;
std::string to_dot(const GameDigraph& d, const Assignment* values = nullptr,
                   std::optional<NodeId> start = std::nullopt);

}  // namespace grundy

#endif
