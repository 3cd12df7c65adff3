#pragma once

#include "alw/ra.hpp"

#include <stdexcept>
#include <vector>

namespace alw {

struct MonkParams {
    int greens = 3;
    int reds = 1;
};

struct SplitParams {
    int indexBound = 1;  // I: indices i < I
    int alpha = 1;       // parts of r(0)
};

// Monk-style atoms: Id, g0:i (i < G), r:j (1 <= j <= R), all self-converse.
// Forbidden: (Id,x,y) for x != y, (r_j,r_j,r_j), and every all-green triangle.
inline RaAtomStructure monk_ra(const MonkParams& p) {
    if (p.greens < 1 || p.reds < 1) throw std::invalid_argument("monk_ra needs at least one green and one red");
    std::vector<AtomTag> atoms{AtomTag("Id")};
    for (int i = 0; i < p.greens; ++i) atoms.emplace_back("g0", std::vector<int>{i});
    for (int j = 1; j <= p.reds; ++j) atoms.emplace_back("r", std::vector<int>{j});
    RaAtomStructure s(atoms);
    s.identity.set(0);
    int N = int(s.size());
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            if (x != y) s.forbid(0, x, y);
    for (int a = 1; a <= p.greens; ++a)
        for (int b = 1; b <= p.greens; ++b)
            for (int c = 1; c <= p.greens; ++c) s.forbid(a, b, c);
    for (int j = 0; j < p.reds; ++j) {
        int r = 1 + p.greens + j;
        s.forbid(r, r, r);
    }
    return s;
}

inline RaAtomStructure monk_ra(int greens, int reds) { return monk_ra(MonkParams{greens, reds}); }

// r(0) split into alpha parts r0:k; further atoms r:i (1 <= i < I), y:i, b:i (i < I).
inline RaAtomStructure split_ra(const SplitParams& p) {
    if (p.indexBound < 1 || p.alpha < 1) throw std::invalid_argument("split_ra parameters must be positive");
    std::vector<AtomTag> atoms{AtomTag("Id")};
    std::vector<int> r0, r, y, b;
    for (int k = 0; k < p.alpha; ++k) {
        r0.push_back(int(atoms.size()));
        atoms.emplace_back("r0", std::vector<int>{k});
    }
    for (int i = 1; i < p.indexBound; ++i) {
        r.push_back(int(atoms.size()));
        atoms.emplace_back("r", std::vector<int>{i});
    }
    for (int i = 0; i < p.indexBound; ++i) {
        y.push_back(int(atoms.size()));
        atoms.emplace_back("y", std::vector<int>{i});
    }
    for (int i = 0; i < p.indexBound; ++i) {
        b.push_back(int(atoms.size()));
        atoms.emplace_back("b", std::vector<int>{i});
    }
    RaAtomStructure s(atoms);
    s.identity.set(0);
    int N = int(s.size());
    for (int x = 0; x < N; ++x)
        for (int z = 0; z < N; ++z)
            if (x != z) s.forbid(0, x, z);
    int I = p.indexBound;
    for (int i = 0; i < I; ++i)
        for (int j = i; j < I; ++j) {
            s.forbid(y[i], y[i], y[j]);
            s.forbid(b[i], b[i], b[j]);
        }
    // r(i) for i >= 1 lives at r[i-1]
    for (int i = 1; i < I; ++i)
        for (int j = i; j < I; ++j) s.forbid(r[i - 1], r[i - 1], r[j - 1]);
    for (int k : r0)
        for (int l : r0) {
            for (int j : r) s.forbid(k, l, j);
            for (int m : r0) s.forbid(k, l, m);
        }
    return s;
}

inline RaAtomStructure split_ra(int I, int alpha) { return split_ra(SplitParams{I, alpha}); }

}  // namespace alw
