#pragma once

#include "alw/bits.hpp"
#include "alw/ca.hpp"
#include "alw/ra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace alw {

// A subalgebra of a finite Boolean algebra is atomic; we keep its atoms
// (blocks partitioning the atoms of A). Its universe is all unions of blocks.
struct Subalgebra {
    std::size_t width = 0;
    std::vector<Bits> blocks;

    bool contains(const Bits& x) const {
        for (auto& b : blocks)
            if (b.intersects(x) && !b.is_subset_of(x)) return false;
        return true;
    }
    std::size_t atom_count() const { return blocks.size(); }
    std::vector<Bits> elements(std::size_t cap = 1u << 16) const {
        if (blocks.size() >= 63 || (std::size_t(1) << blocks.size()) > cap)
            throw std::length_error("subalgebra too large to list");
        std::vector<Bits> out;
        for (std::size_t m = 0; m < (std::size_t(1) << blocks.size()); ++m) {
            Bits x(width);
            for (std::size_t b = 0; b < blocks.size(); ++b)
                if (m >> b & 1) x |= blocks[b];
            out.push_back(x);
        }
        return out;
    }
};

namespace detail {
// Split every block by x. Returns true if anything changed.
inline bool refine(std::vector<Bits>& blocks, const Bits& x) {
    bool changed = false;
    std::vector<Bits> next;
    next.reserve(blocks.size() + 1);
    for (auto& b : blocks) {
        Bits in = b & x;
        Bits out = b - x;
        if (in.any() && out.any()) {
            next.push_back(in);
            next.push_back(out);
            changed = true;
        } else {
            next.push_back(b);
        }
    }
    blocks.swap(next);
    return changed;
}

inline void sort_blocks(std::vector<Bits>& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Bits& a, const Bits& b) { return a.find_first() < b.find_first(); });
}

template <class Unary, class Binary>
Subalgebra close_blocks(std::size_t width, const std::vector<Bits>& seeds, Unary unary, Binary binary) {
    std::vector<Bits> blocks;
    if (width) blocks.push_back(full_bits(width));
    for (auto& s : seeds) refine(blocks, s);
    // Operations are additive, so closure on blocks implies closure on unions.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Bits> images;
        for (auto& b : blocks) unary(b, images);
        for (auto& b : blocks)
            for (auto& c : blocks) binary(b, c, images);
        for (auto& x : images) changed = refine(blocks, x) || changed;
    }
    sort_blocks(blocks);
    return {width, blocks};
}
}  // namespace detail

inline Subalgebra sg_generate(const RaAlgebra& A, const std::vector<Bits>& gens) {
    std::vector<Bits> seeds(gens);
    seeds.push_back(A.identity);
    return detail::close_blocks(
        A.size(), seeds, [&](const Bits& b, std::vector<Bits>& out) { out.push_back(ra_converse(A, b)); },
        [&](const Bits& b, const Bits& c, std::vector<Bits>& out) { out.push_back(ra_compose(A, b, c)); });
}

inline Subalgebra sg_generate(const CaAlgebra& A, const std::vector<Bits>& gens) {
    std::vector<Bits> seeds(gens);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) seeds.push_back(A.d(i, j));
    return detail::close_blocks(
        A.size(), seeds,
        [&](const Bits& b, std::vector<Bits>& out) {
            for (int i = 0; i < A.dim; ++i) out.push_back(ca_cylindrify(A, i, b));
        },
        [](const Bits&, const Bits&, std::vector<Bits>&) {});
}

// B given as an explicit list of elements; must be a subuniverse of A.
template <class Alg>
Subalgebra as_subalgebra(const Alg& A, const std::vector<Bits>& B) {
    std::set<Bits, decltype(&bits_less)> elems(&bits_less);
    for (auto& x : B) {
        if (x.size() != A.size()) throw std::invalid_argument("element width does not match the algebra");
        elems.insert(x);
    }
    Subalgebra S = sg_generate(A, B);
    // S is generated by B; B is closed iff it already contains every element of S.
    if (S.blocks.size() >= 24) throw std::invalid_argument("subset is not closed under the operations");
    for (auto& x : S.elements())
        if (!elems.count(x)) throw std::invalid_argument("subset is not closed under the operations");
    return S;
}

// Finite case: B is dense in A iff B contains every atom of A.
inline bool is_dense_subalgebra(const Subalgebra& B) {
    for (auto& b : B.blocks)
        if (b.count() != 1) return false;
    return true;
}

// Finite case: every subalgebra preserves the (finite) joins that exist.
inline bool is_complete_subalgebra(const Subalgebra&) { return true; }

template <class Alg>
bool is_dense_subalgebra(const std::vector<Bits>& B, const Alg& A) {
    return is_dense_subalgebra(as_subalgebra(A, B));
}
template <class Alg>
bool is_complete_subalgebra(const std::vector<Bits>& B, const Alg& A) {
    return is_complete_subalgebra(as_subalgebra(A, B));
}

}  // namespace alw
