#pragma once

#include "alw/network.hpp"
#include "alw/ra.hpp"

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

// ------------------------------------------------------------ census

// Atom structures as ternary networks so isomorphism rejection can reuse
// canonical_key: slot a is atom a, label(a,b,c) = consistency, and the
// diagonal (a,a,a) also records membership in the identity set.
inline std::string structure_key(const RaAtomStructure& s) {
    int N = int(s.size());
    Network net(3, N);
    for (int a = 0; a < N; ++a) net.add_node(a);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
                Label l = s.consistent(a, b, c) ? 1 : 0;
                if (a == b && b == c && s.identity.test(std::size_t(a))) l += 2;
                if (s.converse[a] == b && a == c && b != a) l += 4;
                net.set({a, b, c}, l);
            }
    return canonical_key(net);
}

// Symmetric, identity-lawful, Peircean-closed structures with at most
// maxAtoms atoms whose complex algebra is a relation algebra, one per
// isomorphism class. Every atom a has its identity e(a); a triple of
// diversity atoms can only be consistent when all three share it.
inline std::vector<RaAtomStructure> enumerate_small_ra(int maxAtoms) {
    if (maxAtoms < 1 || maxAtoms > 4) throw std::invalid_argument("census supports 1 to 4 atoms");
    std::vector<RaAtomStructure> out;
    std::set<std::string> seen;
    for (int N = 1; N <= maxAtoms; ++N)
        for (int E = 1; E <= N; ++E) {
            // atoms 0..E-1 are identity atoms; diversity atom d gets home[d] < E
            int D = N - E;
            std::vector<int> home(N);
            for (int e = 0; e < E; ++e) home[e] = e;
            auto homes = [&](auto&& self, int d) -> void {
                if (d == N) {
                    // free triples: multisets of diversity atoms with one home
                    std::vector<Triple> free;
                    for (int a = E; a < N; ++a)
                        for (int b = a; b < N; ++b)
                            for (int c = b; c < N; ++c)
                                if (home[a] == home[b] && home[b] == home[c]) free.push_back({a, b, c});
                    std::size_t F = free.size();
                    for (std::size_t mask = 0; mask < (std::size_t(1) << F); ++mask) {
                        std::vector<AtomTag> atoms;
                        for (int e = 0; e < E; ++e) atoms.emplace_back(E == 1 ? AtomTag("Id") : AtomTag("e", {e}));
                        for (int a = E; a < N; ++a) atoms.emplace_back("d", std::vector<int>{a - E});
                        RaAtomStructure s(atoms);
                        for (int e = 0; e < E; ++e) s.identity.set(std::size_t(e));
                        for (int a = 0; a < N; ++a)
                            for (int b = 0; b < N; ++b)
                                for (int c = 0; c < N; ++c) {
                                    bool ok;
                                    if (a < E || b < E || c < E) {
                                        // (e,x,y): x = y and e is the identity of x, and Peircean images
                                        int idp = a < E ? 0 : b < E ? 1 : 2;
                                        int t[3] = {a, b, c};
                                        int e = t[idp], x = t[(idp + 1) % 3], y = t[(idp + 2) % 3];
                                        ok = x == y && home[x] == e;
                                    } else {
                                        Triple t{a, b, c};
                                        std::sort(t.begin(), t.end());
                                        auto it = std::find(free.begin(), free.end(), t);
                                        ok = it != free.end() && (mask >> (it - free.begin()) & 1u);
                                    }
                                    if (!ok) s.forbid_raw(a, b, c);
                                }
                        if (!validate_ra_atom_structure(s).ok()) continue;
                        if (!check_ra_axioms(complex_algebra(s)).ok()) continue;
                        if (seen.insert(structure_key(s)).second) out.push_back(std::move(s));
                    }
                    return;
                }
                for (int e = 0; e < E; ++e) {
                    home[d] = e;
                    self(self, d + 1);
                }
            };
            (void)D;
            homes(homes, E);
        }
    return out;
}

// ------------------------------------------------------------ representation search

struct RepresentationCandidate {
    int base = 0;
    std::vector<int> label;  // base*base, -1 off the unit
};

struct RepresentResult {
    bool found = false;
    RepresentationCandidate candidate;
    int triedUpTo = 0;
    std::size_t nodes = 0;
};

// Checks a candidate independently of the search: identity atoms exactly on
// the diagonal, converse coherence, triangles, witnesses for every consistent
// triple on every labelled pair, every atom realised.
inline ValidationReport verify_representation(const RaAtomStructure& s, const RepresentationCandidate& c) {
    ValidationReport r;
    int b = c.base, N = int(s.size());
    auto L = [&](int x, int y) { return c.label[std::size_t(x) * b + y]; };
    std::vector<char> seen(N, 0);
    for (int x = 0; x < b; ++x)
        for (int y = 0; y < b; ++y) {
            int a = L(x, y);
            if (x == y && (a < 0 || !s.identity.test(std::size_t(a)))) r.add("identity", "diagonal point " + std::to_string(x));
            if (a < 0) continue;
            seen[a] = 1;
            if (x != y && s.identity.test(std::size_t(a))) r.add("identity", "identity atom off the diagonal");
            if (L(y, x) != s.converse[a]) r.add("converse", std::to_string(x) + "," + std::to_string(y));
        }
    for (int x = 0; x < b; ++x)
        for (int y = 0; y < b; ++y)
            for (int z = 0; z < b; ++z) {
                int p = L(x, y), q = L(y, z), t = L(x, z);
                if (p < 0 || q < 0) continue;
                if (t < 0 || !s.consistent(p, q, t)) r.add("triangle", std::to_string(x) + std::to_string(y) + std::to_string(z));
            }
    for (int x = 0; x < b; ++x)
        for (int y = 0; y < b; ++y) {
            int t = L(x, y);
            if (t < 0) continue;
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q) {
                    if (!s.consistent(p, q, t)) continue;
                    bool w = false;
                    for (int z = 0; z < b && !w; ++z) w = L(x, z) == p && L(z, y) == q;
                    if (!w) r.add("witness", "no witness for (" + s.name(p) + "," + s.name(q) + ") on " + std::to_string(x) + "," + std::to_string(y));
                }
        }
    for (int a = 0; a < N; ++a)
        if (!seen[a]) r.add("realised", s.name(a) + " never used");
    return r;
}

// Backtracking over labellings of bases 1..maxBase. Found is verified by
// verify_representation; Exhausted only means nothing on <= maxBase points.
inline RepresentResult brute_force_represent(const RaAtomStructure& s, int maxBase, std::size_t budget = 50'000'000) {
    if (maxBase < 1 || maxBase > 10) throw std::invalid_argument("max base must be between 1 and 10");
    RepresentResult res;
    int N = int(s.size());
    std::vector<int> idAtoms;
    for (int a = 0; a < N; ++a)
        if (s.identity.test(std::size_t(a))) idAtoms.push_back(a);
    // identity atom of each atom: the e with (a, e, a) consistent... as a domain
    std::vector<int> dom(N, -1), ran(N, -1);
    for (int a = 0; a < N; ++a)
        for (int e : idAtoms) {
            if (s.consistent(e, a, a)) dom[a] = e;
            if (s.consistent(a, e, a)) ran[a] = e;
        }
    for (int b = 1; b <= maxBase && !res.found; ++b) {
        res.triedUpTo = b;
        RepresentationCandidate c;
        c.base = b;
        c.label.assign(std::size_t(b) * b, -1);
        auto L = [&](int x, int y) -> int& { return c.label[std::size_t(x) * b + y]; };
        // pairs in order: first the diagonal point by point, then (x, y) x < y
        std::vector<std::pair<int, int>> order;
        for (int y = 0; y < b; ++y) {
            order.push_back({y, y});
            for (int x = 0; x < y; ++x) order.push_back({x, y});
        }
        bool stop = false;
        // one ordering per triangle suffices: consistency is Peircean-closed
        auto ok_at = [&](int x, int y) {
            for (int z = 0; z < b; ++z) {
                int p = L(x, y), q = L(y, z), u = L(x, z);
                if (p == -2 || q == -2 || u == -2) continue;  // unassigned
                if (p < 0 || q < 0) continue;
                if (u < 0 || !s.consistent(p, q, u)) return false;
            }
            return true;
        };
        for (auto& v : c.label) v = -2;  // -2 unassigned, -1 off the unit
        auto rec = [&](auto&& self, std::size_t k) -> bool {
            if (stop) return false;
            if (++res.nodes > budget) {
                stop = true;
                return false;
            }
            if (k == order.size()) return verify_representation(s, c).ok();
            auto [x, y] = order[k];
            if (x == y) {
                for (int e : idAtoms) {
                    // symmetry: points appear in order of their identity atoms
                    if (y > 0 && e < L(y - 1, y - 1)) continue;
                    L(x, x) = e;
                    if (self(self, k + 1)) return true;
                }
                L(x, x) = -2;
                return false;
            }
            int ex = L(x, x), ey = L(y, y);
            std::vector<int> options;
            for (int a = 0; a < N; ++a)
                if (!s.identity.test(std::size_t(a)) && dom[a] == ex && ran[a] == ey) options.push_back(a);
            if (options.empty()) options.push_back(-1);
            for (int a : options) {
                L(x, y) = a;
                L(y, x) = a < 0 ? -1 : s.converse[a];
                if (ok_at(x, y) && self(self, k + 1)) return true;
            }
            L(x, y) = L(y, x) = -2;
            return false;
        };
        if (rec(rec, 0)) {
            res.found = true;
            res.candidate = c;
        }
        if (stop) break;
    }
    return res;
}

// ------------------------------------------------------------ Ramsey colourings

// Is there an R-colouring of the edges of K_G with no monochromatic triangle?
// The c-neighbourhood of a vertex spans no c-edge, so its size is bounded by
// the largest complete graph with a good (R-1)-colouring; that bound prunes
// the vertex-by-vertex search.
inline int ramsey_max_clique(int R);

inline bool ramsey_colouring_exists(int G, int R) {
    if (G < 0 || G > 16 || R < 1 || R > 3) throw std::invalid_argument("ramsey search supports G <= 16 and 1 <= R <= 3");
    int cap = R == 1 ? 1 : ramsey_max_clique(R - 1);
    std::vector<int> col(std::size_t(G) * G, -1);
    auto C = [&](int x, int y) -> int& { return col[std::size_t(std::min(x, y)) * G + std::max(x, y)]; };
    std::vector<std::vector<int>> deg(G, std::vector<int>(R, 0));
    std::vector<std::pair<int, int>> edges;
    for (int y = 0; y < G; ++y)
        for (int x = 0; x < y; ++x) edges.push_back({x, y});
    std::vector<int> open(G, G - 1);  // uncoloured edges per vertex
    auto room = [&](int v) {
        int r = 0;
        for (int c = 0; c < R; ++c) r += cap - deg[v][c];
        return r >= open[v];
    };
    auto rec = [&](auto&& self, std::size_t k, int used) -> bool {
        if (k == edges.size()) return true;
        auto [x, y] = edges[k];
        // colours are interchangeable: a new colour is only ever the next one
        for (int c = 0; c < std::min(R, used + 1); ++c) {
            if (deg[x][c] >= cap || deg[y][c] >= cap) continue;
            bool ok = true;
            for (int z = 0; z < y && ok; ++z)
                if (z != x) ok = !(C(z, x) == c && C(z, y) == c);
            if (!ok) continue;
            C(x, y) = c;
            ++deg[x][c], ++deg[y][c], --open[x], --open[y];
            if (room(x) && room(y) && self(self, k + 1, std::max(used, c + 1))) return true;
            --deg[x][c], --deg[y][c], ++open[x], ++open[y];
            C(x, y) = -1;
        }
        return false;
    };
    if (G <= 1) return true;
    // Vertex 0 may be taken with its neighbours grouped by colour, largest
    // class first: both are relabellings. Try every such degree profile.
    std::vector<int> d(R, 0);
    auto profile = [&](auto&& self, int c, int left, int maxd) -> bool {
        if (c == R) {
            if (left) return false;
            int v = 1;
            for (int k = 0; k < R; ++k)
                for (int q = 0; q < d[k]; ++q, ++v) {
                    C(0, v) = k;
                    ++deg[0][k], ++deg[v][k], --open[0], --open[v];
                }
            int used = 0;
            for (int k = 0; k < R; ++k) used += d[k] > 0;
            bool found = rec(rec, std::size_t(G - 1), used);
            v = 1;
            for (int k = 0; k < R; ++k)
                for (int q = 0; q < d[k]; ++q, ++v) {
                    C(0, v) = -1;
                    --deg[0][k], --deg[v][k], ++open[0], ++open[v];
                }
            return found;
        }
        for (int x = std::min(maxd, left); x >= 0; --x) {
            d[c] = x;
            if (self(self, c + 1, left - x, x)) return true;
        }
        return false;
    };
    // edges (0, y) come first in `edges` only if ordered by x; reorder
    std::stable_sort(edges.begin(), edges.end(), [](auto& a, auto& b) { return (a.first == 0) > (b.first == 0); });
    return profile(profile, 0, G - 1, cap);
}

inline int ramsey_max_clique(int R) {
    int g = 1;
    while (g < 16 && ramsey_colouring_exists(g + 1, R)) ++g;
    return g;
}

}  // namespace alw
