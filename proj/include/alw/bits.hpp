#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace alw {

// Elements of a complex algebra: one bit per atom, width fixed by the algebra.
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits empty_bits(std::size_t n) { return Bits(n); }

inline Bits full_bits(std::size_t n) {
    Bits b(n);
    b.set();
    return b;
}

inline Bits single_bit(std::size_t n, std::size_t i) {
    Bits b(n);
    b.set(i);
    return b;
}

template <class F>
inline void for_each_bit(const Bits& b, F&& f) {
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

inline std::vector<std::size_t> bit_list(const Bits& b) {
    std::vector<std::size_t> out;
    for_each_bit(b, [&](std::size_t i) { out.push_back(i); });
    return out;
}

inline std::size_t hash_bits(const Bits& b) {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    std::size_t h = b.size();
    for (auto w : blocks) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return hash_bits(b); }
};

// Total order used wherever sets of elements must be listed reproducibly.
inline bool bits_less(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return b[i];
    }
    return a.size() < b.size();
}

}  // namespace alw
