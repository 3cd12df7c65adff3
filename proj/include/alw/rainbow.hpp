#pragma once

#include "alw/ca.hpp"
#include "alw/parallel.hpp"
#include "alw/report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

// Rainbow colour rules, version 1.
//
// Edge colours on an ordered pair (x, y):
//   greens  g_j (1 <= j <= n-2) and g_0^t (t < greenCount)   symmetric
//   whites  w_j (0 <= j <= n-2)                               symmetric
//   reds    r_kl (k != l < n), with (y, x) coloured r_lk
// Forbidden triangles (x, y, z distinct):
//   any all-green triangle
//   (g_0^s, g_0^t, w_0) for all tints s, t
//   (g_j, g_j, w_j) for j >= 1
//   all-red triangles unless the indices match: N(x,y) = r_ij,
//   N(y,z) = r_jk, N(x,z) = r_ik
// Yellow shades sit on (n-1)-sets without green edges. The white/yellow
// clauses come from the wider rainbow literature, not from the red rule;
// the materialised structure carries only the full shade, so shades never
// constrain atoms here. Cone rule (used by strategies): a cone with tint t
// on a base of shade S needs t in S.
struct RainbowRules {
    static constexpr int version = 1;
    int n = 3;
    int greenCount = 4;

    enum Kind { Green, Green0, White, Red };
    struct Colour {
        Kind kind;
        int i = 0, j = 0;  // g_i / g_0^i / w_i / r_ij
    };
    std::vector<Colour> colours;
    std::vector<int> conv;

    RainbowRules(int dim = 3, int greens = -1) : n(dim), greenCount(greens < 0 ? dim + 1 : greens) {
        if (n < 3) throw std::invalid_argument("rainbow dimension must be at least 3");
        for (int j = 1; j <= n - 2; ++j) colours.push_back({Green, j, 0});
        for (int t = 0; t < greenCount; ++t) colours.push_back({Green0, t, 0});
        for (int j = 0; j <= n - 2; ++j) colours.push_back({White, j, 0});
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                if (k != l) colours.push_back({Red, k, l});
        conv.resize(colours.size());
        for (std::size_t c = 0; c < colours.size(); ++c) {
            conv[c] = int(c);
            if (colours[c].kind == Red) conv[c] = red(colours[c].j, colours[c].i);
        }
    }

    int size() const { return int(colours.size()); }
    bool is_green(int c) const { return colours[c].kind == Green || colours[c].kind == Green0; }
    bool is_red(int c) const { return colours[c].kind == Red; }
    int green(int j) const { return j - 1; }
    int green0(int t) const { return n - 2 + t; }
    int white(int j) const { return n - 2 + greenCount + j; }
    int red(int k, int l) const {
        int base = n - 2 + greenCount + n - 1;
        int idx = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if (a == k && b == l) return base + idx;
                ++idx;
            }
        throw std::out_of_range("no such red");
    }

    std::string name(int c) const {
        const Colour& k = colours[c];
        switch (k.kind) {
            case Green: return "g" + std::to_string(k.i);
            case Green0: return "g0^" + std::to_string(k.i);
            case White: return "w" + std::to_string(k.i);
            default: return "r" + std::to_string(k.i) + std::to_string(k.j);
        }
    }

    // xy, yz, xz coloured a, b, c
    bool triangle_ok(int a, int b, int c) const {
        const Colour &A = colours[a], &B = colours[b], &C = colours[c];
        if (is_green(a) && is_green(b) && is_green(c)) return false;
        int cols[3] = {a, b, c};
        for (int w = 0; w < 3; ++w) {
            const Colour& W = colours[cols[w]];
            if (W.kind != White) continue;
            const Colour& P = colours[cols[(w + 1) % 3]];
            const Colour& Q = colours[cols[(w + 2) % 3]];
            if (W.i == 0 && P.kind == Green0 && Q.kind == Green0) return false;
            if (W.i >= 1 && P.kind == Green && Q.kind == Green && P.i == W.i && Q.i == W.i) return false;
        }
        if (A.kind == Red && B.kind == Red && C.kind == Red) return A.i == C.i && A.j == B.i && B.j == C.j;
        return true;
    }
};

// Atoms of the finite rainbow structure are coloured graphs presented by a
// surjection from the n coordinates. For coordinates i < j we store the
// colour of the edge a(i) -> a(j), or -1 when a(i) = a(j).
struct RainbowAtom {
    std::vector<int> edge;  // pairs in order (0,1),(0,2),...,(n-2,n-1)
};

inline int pair_index(int n, int i, int j) {
    int k = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++k)
            if (a == i && b == j) return k;
    throw std::out_of_range("pair index");
}

struct RainbowStructure {
    RainbowRules rules;
    CaAtomStructure at;
    std::vector<RainbowAtom> graphs;
    std::map<std::vector<int>, int> index;  // edge vector -> atom

    // Colour of the edge from coordinate i to coordinate j of atom a, -1 if equal.
    int colour(int a, int i, int j) const {
        if (i == j) return -1;
        int n = rules.n;
        if (i < j) return graphs[a].edge[pair_index(n, i, j)];
        int c = graphs[a].edge[pair_index(n, j, i)];
        return c < 0 ? -1 : rules.conv[c];
    }
    int find(const std::vector<int>& edge) const {
        auto it = index.find(edge);
        return it == index.end() ? -1 : it->second;
    }
    bool is_red_atom(int a) const {
        for (int c : graphs[a].edge)
            if (c >= 0 && rules.is_red(c)) return true;
        return false;
    }
    Bits red_atoms() const {
        Bits b(at.size());
        for (std::size_t a = 0; a < at.size(); ++a)
            if (is_red_atom(int(a))) b.set(a);
        return b;
    }
    std::string pretty(int a) const {
        std::string s;
        int n = rules.n, k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k) {
                int c = graphs[a].edge[k];
                s += (k ? " " : "") + std::to_string(i) + std::to_string(j) + ":" + (c < 0 ? "=" : rules.name(c));
            }
        return s;
    }
};

// Enumerate the finite rainbow atom structure of dimension n. Only n = 3
// is intended for exhaustive work; larger n is rejected above a size budget.
inline RainbowStructure rainbow_finite(int n = 3, int greenCount = -1, std::size_t maxAtoms = 200000) {
    RainbowStructure R{RainbowRules(n, greenCount), {}, {}, {}};
    const RainbowRules& rr = R.rules;
    int P = n * (n - 1) / 2;
    double est = 1;
    for (int k = 0; k < P; ++k) est *= rr.size() + 1;
    if (est > double(maxAtoms) * 50) throw std::length_error("rainbow parameters too large to enumerate");

    // surjections a: n -> {0..k-1} in restricted-growth form
    std::vector<std::vector<int>> surj;
    std::vector<int> cur(n);
    auto rgs = [&](auto&& self, int pos, int mx) -> void {
        if (pos == n) {
            surj.push_back(cur);
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            cur[pos] = v;
            self(self, pos + 1, std::max(mx, v));
        }
    };
    cur[0] = 0;
    rgs(rgs, 1, 0);
    std::stable_sort(surj.begin(), surj.end(), [](auto& x, auto& y) {
        return *std::max_element(x.begin(), x.end()) < *std::max_element(y.begin(), y.end());
    });

    std::vector<RainbowAtom> atoms;
    for (auto& s : surj) {
        int k = *std::max_element(s.begin(), s.end()) + 1;
        // coloured graph on k nodes: colour for each ordered node pair u < v
        int E = k * (k - 1) / 2;
        std::vector<int> col(E, 0);
        auto eidx = [&](int u, int v) {
            int idx = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b, ++idx)
                    if (a == u && b == v) return idx;
            return -1;
        };
        auto get = [&](int u, int v) { return u < v ? col[eidx(u, v)] : rr.conv[col[eidx(v, u)]]; };
        for (;;) {
            bool ok = true;
            for (int x = 0; x < k && ok; ++x)
                for (int y = x + 1; y < k && ok; ++y)
                    for (int z = y + 1; z < k && ok; ++z) ok = rr.triangle_ok(get(x, y), get(y, z), get(x, z));
            if (ok) {
                RainbowAtom a;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) a.edge.push_back(s[i] == s[j] ? -1 : get(s[i], s[j]));
                atoms.push_back(a);
                if (atoms.size() > maxAtoms) throw std::length_error("rainbow atom budget exceeded");
            }
            int p = 0;
            while (p < E && ++col[p] == rr.size()) col[p++] = 0;
            if (p == E) break;
        }
    }
    std::vector<AtomTag> tags;
    for (auto& a : atoms) tags.emplace_back("rb", a.edge);
    R.at = CaAtomStructure(n, tags);
    R.graphs = atoms;
    std::size_t N = atoms.size();
    for (std::size_t a = 0; a < N; ++a) R.index[atoms[a].edge] = int(a);
    for (int i = 0; i < n; ++i) {
        // restriction to n \ {i}: the entries for pairs avoiding i
        std::map<std::vector<int>, std::size_t> keys;
        std::vector<std::size_t> cls(N);
        for (std::size_t a = 0; a < N; ++a) {
            std::vector<int> key;
            int q = 0;
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y, ++q)
                    if (x != i && y != i) key.push_back(atoms[a].edge[q]);
            auto [it, fresh] = keys.emplace(key, keys.size());
            cls[a] = it->second;
        }
        R.at.set_classes(i, cls);
        for (int j = i + 1; j < n; ++j) {
            int q = pair_index(n, i, j);
            for (std::size_t a = 0; a < N; ++a)
                if (atoms[a].edge[q] < 0) R.at.set_diag(i, j, a);
        }
    }
    return R;
}

// Local consistency re-check of one atom against the colour rules.
inline bool rainbow_atom_ok(const RainbowStructure& R, int a) {
    int n = R.rules.n;
    // equality must be transitive and colours must agree along it
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (R.colour(a, i, j) < 0 && R.colour(a, j, k) < 0 && R.colour(a, i, k) >= 0) return false;
                if (R.colour(a, i, j) < 0 && R.colour(a, i, k) != R.colour(a, j, k)) return false;
                int x = R.colour(a, i, j), y = R.colour(a, j, k), z = R.colour(a, i, k);
                if (x >= 0 && y >= 0 && z >= 0 && !R.rules.triangle_ok(x, y, z)) return false;
            }
    return true;
}

// ------------------------------------------------------------ blow up and blur

struct SplitBlurResult {
    CaAtomStructure original;
    CaAtomStructure split;
    std::vector<std::vector<int>> copyMap;  // original atom -> its copies
    std::vector<int> source;                // split atom -> original atom
    int lambda = 1;
};

// Red atoms get lambda copies (tag kind suffixed with '^', copy index appended).
// Copies are ≡_i-related exactly when their originals are, and sit in the
// same diagonals, so they are indistinguishable from outside.
inline SplitBlurResult split_blur(const CaAtomStructure& f, const Bits& red, int lambda) {
    if (lambda < 1) throw std::invalid_argument("split_blur needs lambda >= 1");
    if (red.size() != f.size()) throw std::invalid_argument("red set width does not match the structure");
    SplitBlurResult r;
    r.original = f;
    r.lambda = lambda;
    std::vector<AtomTag> tags;
    r.copyMap.resize(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) {
        int copies = red.test(a) ? lambda : 1;
        for (int c = 0; c < copies; ++c) {
            r.copyMap[a].push_back(int(tags.size()));
            r.source.push_back(int(a));
            if (red.test(a)) {
                AtomTag t = f.atoms[a];
                t.kind += "^";
                t.idx.push_back(c);
                tags.push_back(t);
            } else {
                tags.push_back(f.atoms[a]);
            }
        }
    }
    r.split = CaAtomStructure(f.dim, tags);
    std::size_t M = tags.size();
    for (int i = 0; i < f.dim; ++i) {
        // class of a copy = class of its original (first member index as id)
        std::vector<std::size_t> cls(M);
        for (std::size_t x = 0; x < M; ++x) cls[x] = f.eq[i][r.source[x]].find_first();
        r.split.set_classes(i, cls);
        for (int j = 0; j < f.dim; ++j) {
            Bits d(M);
            for (std::size_t x = 0; x < M; ++x)
                if (f.D(i, j).test(r.source[x])) d.set(x);
            r.split.D(i, j) = d;
        }
    }
    return r;
}

// Θ: atom ↦ join of its copies, extended additively; exhaustive check.
inline ValidationReport theta_embed(const SplitBlurResult& r, int threads = 1) {
    ValidationReport rep;
    CaAlgebra A = complex_algebra(r.original);
    CaAlgebra B = complex_algebra(r.split);
    std::size_t N = A.size(), M = B.size();
    auto theta = [&](const Bits& x) {
        Bits out(M);
        for_each_bit(x, [&](std::size_t a) {
            for (int c : r.copyMap[a]) out.set(c);
        });
        return out;
    };
    // copyMap must partition the split atoms
    Bits seen(M);
    for (std::size_t a = 0; a < N; ++a) {
        if (r.copyMap[a].empty()) rep.add("injective", "atom " + A.atoms[a].str() + " maps to 0");
        for (int c : r.copyMap[a]) {
            if (seen.test(c)) rep.add("partition", "copy " + B.atoms[c].str() + " shared");
            seen.set(c);
        }
    }
    if (!seen.all()) rep.add("partition", "some split atom is no copy");
    std::vector<std::vector<Issue>> perAtom(N);
    parallel_for(N, threads, [&](std::size_t a) {
        auto& out = perAtom[a];
        Bits ta = theta(A.atom(a));
        Bits comp = A.atom(a);
        comp.flip();
        Bits tcomp = ta;
        tcomp.flip();
        if (theta(comp) != tcomp) out.push_back({"complement", A.atoms[a].str()});
        for (int i = 0; i < A.dim; ++i)
            if (theta(ca_cylindrify(A, i, A.atom(a))) != ca_cylindrify(B, i, ta))
                out.push_back({"cylindrifier", "c_" + std::to_string(i) + " at " + A.atoms[a].str()});
        // joins: Θ(a + b) = Θa + Θb for atom pairs reduces to disjoint copy sets
    });
    for (auto& v : perAtom)
        for (auto& i : v) rep.add(i.rule, i.detail);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            if (theta(A.d(i, j)) != B.d(i, j)) rep.add("diagonal", "d_" + std::to_string(i) + std::to_string(j));
    if (theta(A.zero()).any()) rep.add("join", "Θ(0) != 0");
    if (theta(A.one()) != B.one()) rep.add("join", "Θ(1) != 1");
    rep.checked = N;
    return rep;
}

// λ = 1: Θ is a bijection on atoms preserving and reflecting ≡_i and diagonals.
inline ValidationReport theta_isomorphism(const SplitBlurResult& r) {
    ValidationReport rep;
    std::size_t N = r.original.size();
    if (r.split.size() != N) {
        rep.add("bijective", "atom counts differ");
        return rep;
    }
    for (std::size_t a = 0; a < N; ++a)
        if (r.copyMap[a].size() != 1) rep.add("bijective", r.original.atoms[a].str());
    if (!rep.ok()) return rep;
    for (int i = 0; i < r.original.dim; ++i)
        for (std::size_t a = 0; a < N; ++a) {
            Bits img(N);
            for_each_bit(r.original.eq[i][a], [&](std::size_t b) { img.set(r.copyMap[b][0]); });
            if (img != r.split.eq[i][r.copyMap[a][0]]) rep.add("accessibility", r.original.atoms[a].str());
        }
    return rep;
}

}  // namespace alw
