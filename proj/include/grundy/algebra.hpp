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

#ifndef GRUNDY_ALGEBRA_HPP
#define GRUNDY_ALGEBRA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/digraph.hpp"
#include "grundy/solvers.hpp"
#include "grundy/values.hpp"

namespace grundy {

class GrayStart : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

WhiteValue sum_value(const WhiteValue& g, const WhiteValue& h);
Outcome outcome_of(const WhiteValue& g);

enum class PresenceVerdict { Win, Loss, TiePossible };
std::string to_string(PresenceVerdict v);

// from the point of view of the player entailed to move at a gray node
PresenceVerdict gray_presence_verdict(const GrayValue& c, Nat k);

struct Component {
    Game game;
    Assignment values;

    static Component solved(Game g);  // solves with solve_carry
};

struct SumPosition {
    std::vector<Component> components;
};

WhiteValue position_value(const SumPosition& p);
Outcome position_outcome(const SumPosition& p);

enum class Verdict { Win, Draw, Loss };
std::string to_string(Verdict v);

struct LineStep {
    std::size_t component;
    Arc arc;
    bool forced;  // a response compelled by a gray node
};

struct MoveAdvice {
    Verdict verdict = Verdict::Loss;
    std::vector<LineStep> line;
    std::string rationale;
};

/**
 * Recommends a line for the player to move. A line runs through every
 * forced response up to the first move that hands the turn over freely.
 */
MoveAdvice best_move(const SumPosition& p);

std::string format_line(const std::vector<LineStep>& line);

}  // namespace grundy

#endif
