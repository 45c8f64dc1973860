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

#include "grundy/values.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>

namespace grundy {

namespace {

void normalize(std::vector<Nat>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Nat> set_union(const std::vector<Nat>& a, const std::vector<Nat>& b)
{
    std::vector<Nat> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<Nat> set_intersection(const std::vector<Nat>& a, const std::vector<Nat>& b)
{
    std::vector<Nat> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<Nat> set_difference(const std::vector<Nat>& a, const std::vector<Nat>& b)
{
    std::vector<Nat> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::string join(const std::vector<Nat>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

NatSet::NatSet(std::initializer_list<Nat> elems) : basis_(elems)
{
    normalize(basis_);
}

NatSet NatSet::finite(std::vector<Nat> elems)
{
    NatSet s;
    s.kind_ = Kind::Finite;
    s.basis_ = std::move(elems);
    normalize(s.basis_);
    return s;
}

NatSet NatSet::cofinite(std::vector<Nat> excluded)
{
    NatSet s;
    s.kind_ = Kind::Cofinite;
    s.basis_ = std::move(excluded);
    normalize(s.basis_);
    return s;
}

bool NatSet::contains(Nat k) const
{
    bool in_basis = std::binary_search(basis_.begin(), basis_.end(), k);
    return is_finite() ? in_basis : !in_basis;
}

std::size_t NatSet::size() const
{
    if (is_cofinite()) throw std::logic_error("size of a cofinite set");
    return basis_.size();
}

NatSet NatSet::unite(const NatSet& o) const
{
    if (is_finite() && o.is_finite()) return finite(set_union(basis_, o.basis_));
    if (is_cofinite() && o.is_cofinite()) return cofinite(set_intersection(basis_, o.basis_));
    const NatSet& fin = is_finite() ? *this : o;
    const NatSet& cof = is_finite() ? o : *this;
    return cofinite(set_difference(cof.basis_, fin.basis_));
}

NatSet NatSet::intersect(const NatSet& o) const
{
    if (is_finite() && o.is_finite()) return finite(set_intersection(basis_, o.basis_));
    if (is_cofinite() && o.is_cofinite()) return cofinite(set_union(basis_, o.basis_));
    const NatSet& fin = is_finite() ? *this : o;
    const NatSet& cof = is_finite() ? o : *this;
    return finite(set_difference(fin.basis_, cof.basis_));
}

NatSet NatSet::complement() const
{
    return is_finite() ? cofinite(basis_) : finite(basis_);
}

Nat mex(const NatSet& s)
{
    if (s.is_cofinite()) {
        if (s.basis().empty()) throw NoMex();
        return s.basis().front();
    }
    Nat m = 0;
    for (Nat x : s.basis()) {
        if (x != m) break;
        ++m;
    }
    return m;
}

Nat mex(const std::vector<Nat>& s)
{
    return mex(NatSet::finite(s));
}

NatSet xor_set(Nat m, const NatSet& s)
{
    // x -> x^m is a bijection of the naturals, so it commutes with complement
    std::vector<Nat> r;
    r.reserve(s.basis().size());
    for (Nat x : s.basis()) r.push_back(x ^ m);
    return s.is_finite() ? NatSet::finite(std::move(r)) : NatSet::cofinite(std::move(r));
}

NatSet xor_sets(const NatSet& a, const NatSet& b)
{
    if (a.is_cofinite() || b.is_cofinite()) throw Unsupported("xor of cofinite sets");
    std::vector<Nat> r;
    r.reserve(a.basis().size() * b.basis().size());
    for (Nat x : a.basis())
        for (Nat y : b.basis()) r.push_back(x ^ y);
    return NatSet::finite(std::move(r));
}

std::string format_natset(const NatSet& s)
{
    if (s.is_finite()) return "{" + join(s.basis()) + "}";
    if (s.basis().empty()) return "N";
    return "N\\{" + join(s.basis()) + "}";
}

WhiteValue WhiteValue::finite(Nat n)
{
    WhiteValue v;
    v.kind_ = Kind::Finite;
    v.n_ = n;
    return v;
}

WhiteValue WhiteValue::inf(NatSet d)
{
    if (d.is_cofinite()) throw std::invalid_argument("inf adorn must be finite");
    WhiteValue v;
    v.kind_ = Kind::Inf;
    v.adorn_ = std::move(d);
    return v;
}

WhiteValue WhiteValue::nym(Nat f)
{
    WhiteValue v;
    v.kind_ = Kind::Nym;
    v.n_ = f;
    return v;
}

WhiteValue WhiteValue::moon(NatSet f)
{
    if (f.is_cofinite()) throw std::invalid_argument("moon adorn must be finite");
    WhiteValue v;
    v.kind_ = Kind::Moon;
    v.adorn_ = std::move(f);
    return v;
}

WhiteValue WhiteValue::unadorned_moon()
{
    WhiteValue v;
    v.kind_ = Kind::Moon;
    v.unadorned_ = true;
    return v;
}

WhiteValue WhiteValue::full_moon()
{
    WhiteValue v;
    v.kind_ = Kind::FullMoon;
    return v;
}

GrayValue GrayValue::new_moon()
{
    GrayValue g;
    g.kind_ = Kind::NewMoon;
    return g;
}

GrayValue GrayValue::full_moon()
{
    GrayValue g;
    g.kind_ = Kind::FullMoon;
    return g;
}

GrayValue GrayValue::cover(NatSet c)
{
    GrayValue g;
    g.kind_ = Kind::Cover;
    g.cover_ = std::move(c);
    return g;
}

GrayValue GrayValue::cyclic()
{
    return GrayValue();
}

std::string format_value(const WhiteValue& v)
{
    switch (v.kind()) {
    case WhiteValue::Kind::Finite:
        return std::to_string(v.number());
    case WhiteValue::Kind::Inf:
        return v.adorn().is_empty() ? "inf" : "inf" + format_natset(v.adorn());
    case WhiteValue::Kind::Nym:
        return "nym" + std::to_string(v.number());
    case WhiteValue::Kind::Moon:
        return v.unadorned() ? "moon" : "moon" + format_natset(v.adorn());
    case WhiteValue::Kind::FullMoon:
        return "full";
    }
    return "?";
}

std::string format_value(const GrayValue& v)
{
    switch (v.kind()) {
    case GrayValue::Kind::NewMoon:
        return "new";
    case GrayValue::Kind::FullMoon:
        return "full";
    case GrayValue::Kind::Cover:
        return format_natset(v.covered());
    case GrayValue::Kind::Cyclic:
        return "inf";
    }
    return "?";
}

namespace {

Nat parse_nat(std::string_view s, std::string_view whole)
{
    Nat n = 0;
    if (s.empty()) throw ValueParseError("missing number in '" + std::string(whole) + "'");
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ValueParseError("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
    return n;
}

NatSet parse_braced(std::string_view s, std::string_view whole)
{
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ValueParseError("expected {...} in '" + std::string(whole) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<Nat> elems;
    if (s.empty()) return NatSet::finite(elems);
    while (true) {
        auto comma = s.find(',');
        elems.push_back(parse_nat(s.substr(0, comma), whole));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return NatSet::finite(std::move(elems));
}

bool starts_with(std::string_view s, std::string_view p)
{
    return s.substr(0, p.size()) == p;
}

}  // namespace

WhiteValue parse_value(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    if (s == "full") return WhiteValue::full_moon();
    if (s == "inf") return WhiteValue::inf();
    if (s == "moon") return WhiteValue::unadorned_moon();
    if (starts_with(s, "inf{")) return WhiteValue::inf(parse_braced(s.substr(3), text));
    if (starts_with(s, "moon{")) return WhiteValue::moon(parse_braced(s.substr(4), text));
    if (starts_with(s, "nym")) return WhiteValue::nym(parse_nat(s.substr(3), text));
    return WhiteValue::finite(parse_nat(s, text));
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::P: return "P";
    case Outcome::N: return "N";
    case Outcome::D: return "D";
    }
    return "?";
}

}  // namespace grundy
