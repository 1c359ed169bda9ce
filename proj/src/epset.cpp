// Copyright (c) the vpow contributors
// SPDX-License-Identifier: Apache-2.0
#include "vpow/epset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vpow/errors.hpp"

namespace vpow {

namespace {

// Length of the shortest word w with bits == w^k.
std::size_t primitiveLength(const std::vector<std::uint8_t>& bits) {
    const std::size_t p = bits.size();
    for (std::size_t q = 1; q < p; ++q) {
        if (p % q != 0) continue;
        bool ok = true;
        for (std::size_t i = q; i < p && ok; ++i) ok = bits[i] == bits[i % q];
        if (ok) return q;
    }
    return p;
}

} // namespace

EpSet::EpSet() : pattern_{0} {}

EpSet::EpSet(std::vector<std::uint8_t> explicitBits, std::vector<std::uint8_t> pattern)
    : explicit_(std::move(explicitBits)), pattern_(std::move(pattern)) {
    if (pattern_.empty()) pattern_ = {0};
    for (auto& b : explicit_) b = b ? 1 : 0;
    for (auto& b : pattern_) b = b ? 1 : 0;
    canonicalize();
}

void EpSet::canonicalize() {
    pattern_.resize(primitiveLength(pattern_));
    // Absorb explicit bits that already agree with the periodic continuation.
    // Moving the pattern start left by one rotates the pattern right by one.
    while (!explicit_.empty() && explicit_.back() == pattern_.back()) {
        explicit_.pop_back();
        std::rotate(pattern_.rbegin(), pattern_.rbegin() + 1, pattern_.rend());
    }
}

EpSet EpSet::empty() { return EpSet(); }

EpSet EpSet::naturals() { return EpSet({}, {1}); }

EpSet EpSet::finite(const std::vector<std::uint64_t>& values) {
    std::vector<std::uint8_t> bits;
    for (std::uint64_t v : values) {
        if (v >= bits.size()) bits.resize(v + 1, 0);
        bits[v] = 1;
    }
    return EpSet(std::move(bits), {0});
}

EpSet EpSet::singleton(std::uint64_t v) { return finite({v}); }

EpSet EpSet::below(std::uint64_t n) {
    return EpSet(std::vector<std::uint8_t>(n, 1), {0});
}

EpSet EpSet::arithmetic(std::uint64_t first, std::uint64_t step) {
    if (step == 0) return singleton(first);
    std::vector<std::uint8_t> pattern(step, 0);
    pattern[0] = 1;
    return EpSet(std::vector<std::uint8_t>(first, 0), std::move(pattern));
}

bool EpSet::member(std::uint64_t n) const {
    if (n < explicit_.size()) return explicit_[n] != 0;
    return pattern_[(n - explicit_.size()) % pattern_.size()] != 0;
}

bool EpSet::isEmpty() const {
    return std::none_of(explicit_.begin(), explicit_.end(), [](auto b) { return b; }) &&
           std::none_of(pattern_.begin(), pattern_.end(), [](auto b) { return b; });
}

bool EpSet::isFinite() const {
    return std::none_of(pattern_.begin(), pattern_.end(), [](auto b) { return b; });
}

std::uint64_t EpSet::min() const {
    for (std::size_t n = 0; n < explicit_.size(); ++n)
        if (explicit_[n]) return n;
    for (std::size_t i = 0; i < pattern_.size(); ++i)
        if (pattern_[i]) return explicit_.size() + i;
    throw MinOfEmpty();
}

std::uint64_t EpSet::cardIfFinite() const {
    if (!isFinite()) throw CardOfInfinite();
    return static_cast<std::uint64_t>(
        std::count(explicit_.begin(), explicit_.end(), std::uint8_t{1}));
}

std::vector<std::uint64_t> EpSet::finiteValues() const {
    if (!isFinite()) throw CardOfInfinite();
    std::vector<std::uint64_t> out;
    for (std::size_t n = 0; n < explicit_.size(); ++n)
        if (explicit_[n]) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> EpSet::firstValues(std::size_t count) const {
    std::vector<std::uint64_t> out;
    if (count == 0) return out;
    const bool fin = isFinite();
    for (std::uint64_t n = 0; out.size() < count; ++n) {
        if (member(n)) out.push_back(n);
        if (fin && n + 1 >= explicit_.size()) break;
    }
    return out;
}

bool EpSet::subsetOf(const EpSet& other) const { return (*this - other).isEmpty(); }

namespace {

EpSet combineBits(const EpSet& a, const EpSet& b,
                  std::uint8_t (*op)(std::uint8_t, std::uint8_t)) {
    const std::uint64_t n = std::max(a.explicitBits().size(), b.explicitBits().size());
    const std::uint64_t p = std::lcm(a.pattern().size(), b.pattern().size());
    std::vector<std::uint8_t> explicitBits(n), pattern(p);
    for (std::uint64_t i = 0; i < n; ++i)
        explicitBits[i] = op(a.member(i), b.member(i));
    for (std::uint64_t i = 0; i < p; ++i)
        pattern[i] = op(a.member(n + i), b.member(n + i));
    return EpSet(std::move(explicitBits), std::move(pattern));
}

} // namespace

EpSet EpSet::complement() const {
    std::vector<std::uint8_t> e(explicit_), p(pattern_);
    for (auto& b : e) b = b ? 0 : 1;
    for (auto& b : p) b = b ? 0 : 1;
    return EpSet(std::move(e), std::move(p));
}

EpSet operator|(const EpSet& a, const EpSet& b) {
    return combineBits(a, b, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x | y; });
}

EpSet operator&(const EpSet& a, const EpSet& b) {
    return combineBits(a, b, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x & y; });
}

EpSet operator-(const EpSet& a, const EpSet& b) {
    return combineBits(a, b,
                       [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x & (y ? 0 : 1); });
}

std::string EpSet::describe() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t n = 0; n < explicit_.size(); ++n) {
        if (!explicit_[n]) continue;
        if (!first) out += ",";
        out += std::to_string(n);
        first = false;
    }
    out += "}";
    if (!isFinite()) {
        const std::uint64_t start = explicit_.size();
        out += " + {n>=" + std::to_string(start) + " : (n-" + std::to_string(start) + ")%" +
               std::to_string(pattern_.size()) + " in {";
        bool f2 = true;
        for (std::size_t i = 0; i < pattern_.size(); ++i) {
            if (!pattern_[i]) continue;
            if (!f2) out += ",";
            out += std::to_string(i);
            f2 = false;
        }
        out += "}}";
    }
    return out;
}

} // namespace vpow
