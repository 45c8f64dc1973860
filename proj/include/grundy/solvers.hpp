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

#ifndef GRUNDY_SOLVERS_HPP
#define GRUNDY_SOLVERS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/digraph.hpp"
#include "grundy/values.hpp"

namespace grundy {

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Values of a partially solved digraph. A white slot holds a value once the
 * node is assigned; gray slots likewise. Slots of the other color stay empty.
 */
struct Snapshot {
    std::vector<std::optional<WhiteValue>> white;
    std::vector<std::optional<GrayValue>> gray;

    Snapshot() = default;
    explicit Snapshot(std::size_t n) : white(n), gray(n) {}
    bool assigned(NodeId x) const { return white[x].has_value() || gray[x].has_value(); }
    bool operator==(const Snapshot&) const = default;
};

struct SolveTrace {
    std::vector<Snapshot> snapshots;  // index = step
};

struct Assignment : Snapshot {
    std::vector<std::optional<std::size_t>> assigned_at;
    std::size_t steps = 0;
    std::optional<SolveTrace> trace;

    const WhiteValue& value(NodeId x) const;
    const GrayValue& gray_value(NodeId x) const;
    std::string format(NodeId x) const;
};

struct SolveOptions {
    bool trace = false;
};

Assignment solve_short(const GameDigraph& d, SolveOptions opt = {});
Assignment solve_cyclic(const GameDigraph& d, SolveOptions opt = {});
Assignment solve_entailing(const GameDigraph& d, SolveOptions opt = {});
Assignment solve_carry(const GameDigraph& d, SolveOptions opt = {});
Assignment solve_auto(const GameDigraph& d, SolveOptions opt = {});
Assignment solve_as(const GameDigraph& d, TheoryClass t, SolveOptions opt = {});

// acyclic protection test; every option of x must be assigned in partial
bool cr_acyclic(const GameDigraph& d, NodeId x, Nat k, const Snapshot& partial);
NatSet covered_values(const GameDigraph& d, NodeId x, const Snapshot& partial);

// least fixpoints, indexed by node
std::vector<char> cr_carry_table(const GameDigraph& d, Nat k, const Snapshot& partial);
std::vector<char> dr_table(const GameDigraph& d, Nat k, const Snapshot& final_values);
std::vector<char> fr_table(const GameDigraph& d, Nat k, const Snapshot& final_values);

bool cr_carry(const GameDigraph& d, NodeId x, Nat k, const Snapshot& partial);
bool dr(const GameDigraph& d, NodeId x, Nat k, const Snapshot& final_values);
bool fr(const GameDigraph& d, NodeId x, Nat k, const Snapshot& final_values);

// finite white values occurring anywhere in the snapshot
std::vector<Nat> present_values(const Snapshot& s);
NatSet direct_values(const GameDigraph& d, NodeId x, const Snapshot& final_values);
NatSet forcing_values(const GameDigraph& d, NodeId x, const Snapshot& final_values);
std::vector<NatSet> direct_values_all(const GameDigraph& d, const Snapshot& final_values);
std::vector<NatSet> forcing_values_all(const GameDigraph& d, const Snapshot& final_values);

// "step <n>: <id>=<value> ..." per step, newly assigned nodes only
std::string format_trace(const SolveTrace& t);

}  // namespace grundy

#endif
