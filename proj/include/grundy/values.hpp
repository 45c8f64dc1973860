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

#ifndef GRUNDY_VALUES_HPP
#define GRUNDY_VALUES_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grundy {

using Nat = std::uint64_t;

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoMex : public std::domain_error {
public:
    NoMex() : std::domain_error("mex of the full set of naturals") {}
};

class ValueParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A set of nonnegative integers that is either finite or cofinite.
 * For a cofinite set the basis holds the excluded elements.
 */
class NatSet {
public:
    enum class Kind { Finite, Cofinite };

    NatSet() = default;
    NatSet(std::initializer_list<Nat> elems);

    static NatSet finite(std::vector<Nat> elems);
    static NatSet cofinite(std::vector<Nat> excluded);
    static NatSet all() { return cofinite({}); }
    static NatSet empty() { return NatSet(); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_cofinite() const { return kind_ == Kind::Cofinite; }
    const std::vector<Nat>& basis() const { return basis_; }

    bool contains(Nat k) const;
    bool is_all() const { return is_cofinite() && basis_.empty(); }
    bool is_empty() const { return is_finite() && basis_.empty(); }
    std::size_t size() const;  // finite sets only

    NatSet unite(const NatSet& other) const;
    NatSet intersect(const NatSet& other) const;
    NatSet complement() const;

    bool operator==(const NatSet&) const = default;

private:
    Kind kind_ = Kind::Finite;
    std::vector<Nat> basis_;
};

// least element not in s; throws NoMex when s is everything
Nat mex(const NatSet& s);
Nat mex(const std::vector<Nat>& s);

inline Nat nim_sum(Nat a, Nat b) { return a ^ b; }

NatSet xor_set(Nat m, const NatSet& s);
// throws Unsupported if either argument is cofinite
NatSet xor_sets(const NatSet& a, const NatSet& b);

// "{0,2}", "N", "N\{1}"
std::string format_natset(const NatSet& s);

class WhiteValue {
public:
    enum class Kind { Finite, Inf, Nym, Moon, FullMoon };

    static WhiteValue finite(Nat n);
    static WhiteValue inf(NatSet d = {});
    static WhiteValue nym(Nat f);
    static WhiteValue moon(NatSet f = {});
    static WhiteValue unadorned_moon();
    static WhiteValue full_moon();

    Kind kind() const { return kind_; }
    bool is(Kind k) const { return kind_ == k; }
    // value of Finite, or the forcing value of Nym
    Nat number() const { return n_; }
    // D of Inf, F of Moon
    const NatSet& adorn() const { return adorn_; }
    // Moon produced by the entailing solver, which carries no phase
    bool unadorned() const { return unadorned_; }
    bool is_lunar() const { return kind_ == Kind::Moon || kind_ == Kind::FullMoon; }

    bool operator==(const WhiteValue&) const = default;

private:
    Kind kind_ = Kind::Finite;
    Nat n_ = 0;
    NatSet adorn_;
    bool unadorned_ = false;
};

class GrayValue {
public:
    enum class Kind { NewMoon, FullMoon, Cover, Cyclic };

    static GrayValue new_moon();
    static GrayValue full_moon();
    static GrayValue cover(NatSet c);
    static GrayValue cyclic();

    Kind kind() const { return kind_; }
    bool is(Kind k) const { return kind_ == k; }
    const NatSet& covered() const { return cover_; }

    bool operator==(const GrayValue&) const = default;

private:
    Kind kind_ = Kind::Cyclic;
    NatSet cover_;
};

enum class Outcome { P, N, D };

std::string format_value(const WhiteValue& v);
std::string format_value(const GrayValue& v);
WhiteValue parse_value(std::string_view text);
std::string to_string(Outcome o);

}  // namespace grundy

#endif
