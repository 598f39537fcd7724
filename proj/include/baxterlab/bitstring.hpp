#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "baxterlab/error.hpp"

namespace baxterlab {

// Finite 0/1 sequence. Houses fingerprints, bodyprints and their reduced
// forms; indices are 0-based throughout.
struct BitString {
    std::vector<uint8_t> bits;

    BitString() = default;
    explicit BitString(std::vector<uint8_t> b) : bits(std::move(b)) {}
    explicit BitString(const std::string &s);

    size_t size() const { return bits.size(); }
    bool empty() const { return bits.empty(); }
    uint8_t operator[](size_t i) const { return bits[i]; }
    bool operator==(const BitString &o) const = default;
    bool operator<(const BitString &o) const { return bits < o.bits; }

    size_t ones() const;
    std::string str() const;

    void push(uint8_t b) { bits.push_back(b ? 1 : 0); }
};

BitString reverse(const BitString &s);
BitString complement(const BitString &s);
BitString concat(const BitString &a, const BitString &b);

// Drops the first and last entry; requires first bit 1 and last bit 0.
BitString reduced(const BitString &s);

// tau dominates sigma: equal length, equal weight, and every prefix sum of
// tau is >= the prefix sum of sigma.
bool dominates(const BitString &tau, const BitString &sigma);

// (10)^n; dominance over it is the Dyck/ballot property.
BitString alternating_word(size_t n);

} // namespace baxterlab
