#pragma once

#include "alw/bits.hpp"
#include "alw/ca.hpp"
#include "alw/ra.hpp"
#include "alw/report.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

using Label = std::uint16_t;
inline constexpr Label kUnset = 0xFFFF;

// Board of every network game. Nodes are small integers (slots) below m;
// labels cover all n-tuples of slots, unset outside the live node set.
// Edge networks over relation algebras are the n = 2 case.
// Long hyperedges (hypernetwork games) map node sequences to hyperlabels;
// short ones are implicitly labelled λ and never stored.
struct Network {
    int n = 2;
    int m = 0;
    std::uint32_t nodes = 0;
    std::vector<Label> lab;
    std::map<std::vector<int>, int> hyper;

    Network() = default;
    Network(int arity, int slots) : n(arity), m(slots) {
        if (slots > 31) throw std::invalid_argument("at most 31 node slots");
        std::size_t s = 1;
        for (int i = 0; i < n; ++i) s *= std::size_t(m);
        lab.assign(s, kUnset);
    }

    bool operator==(const Network&) const = default;

    bool has(int v) const { return nodes >> v & 1u; }
    int node_count() const { return __builtin_popcount(nodes); }
    std::vector<int> node_list() const {
        std::vector<int> out;
        for (int v = 0; v < m; ++v)
            if (has(v)) out.push_back(v);
        return out;
    }
    int free_slot() const {
        for (int v = 0; v < m; ++v)
            if (!has(v)) return v;
        return -1;
    }

    std::size_t index(const int* t) const {
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) k = k * m + t[i];
        return k;
    }
    std::size_t index(const std::vector<int>& t) const { return index(t.data()); }
    void decode(std::size_t k, int* t) const {
        for (int i = n - 1; i >= 0; --i) {
            t[i] = int(k % m);
            k /= m;
        }
    }
    Label get(const std::vector<int>& t) const { return lab[index(t)]; }
    void set(const std::vector<int>& t, Label a) { lab[index(t)] = a; }
    Label edge(int x, int y) const { return lab[std::size_t(x) * m + y]; }

    bool tuple_live(std::size_t k) const {
        int t[8];
        decode(k, t);
        for (int i = 0; i < n; ++i)
            if (!has(t[i])) return false;
        return true;
    }
    bool tuple_has(std::size_t k, int v) const {
        int t[8];
        decode(k, t);
        for (int i = 0; i < n; ++i)
            if (t[i] == v) return true;
        return false;
    }

    void add_node(int v) { nodes |= 1u << v; }
    // Drop a node and every label or hyperedge touching it.
    void remove_node(int v) {
        for (std::size_t k = 0; k < lab.size(); ++k)
            if (tuple_has(k, v)) lab[k] = kUnset;
        for (auto it = hyper.begin(); it != hyper.end();)
            it = std::find(it->first.begin(), it->first.end(), v) != it->first.end() ? hyper.erase(it) : std::next(it);
        nodes &= ~(1u << v);
    }
    // Restriction to a node subset.
    Network restrict(std::uint32_t keep) const {
        Network r = *this;
        for (int v = 0; v < m; ++v)
            if (has(v) && !(keep >> v & 1u)) r.remove_node(v);
        return r;
    }
};

// Equality pattern of a tuple: bit p set for pair p=(i<j) when t_i == t_j.
inline unsigned tuple_pattern(const int* t, int n) {
    unsigned p = 0, bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (t[i] == t[j]) p |= 1u << bit;
    return p;
}

// ---------------------------------------------------------------- RA rules

struct RaRules {
    const RaAtomStructure* s = nullptr;
    std::vector<Bits> comp;  // comp[a*N+b] = {c : (a,b,c) consistent}
    Bits idAtoms, allAtoms;

    RaRules() = default;
    explicit RaRules(const RaAtomStructure& st) : s(&st) {
        std::size_t N = st.size();
        comp.assign(N * N, Bits(N));
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                for (std::size_t c = 0; c < N; ++c)
                    if (st.consistent(int(a), int(b), int(c))) comp[a * N + b].set(c);
        idAtoms = st.identity;
        allAtoms = full_bits(N);
    }
    int arity() const { return 2; }
    std::size_t atom_count() const { return s->size(); }
    std::string atom_name(Label a) const { return s->name(a); }
    bool tri(Label a, Label b, Label c) const { return s->consistent(a, b, c); }
};

inline ValidationReport check_consistency(const RaRules& R, const Network& N) {
    ValidationReport r;
    auto V = N.node_list();
    auto nm = [&](Label a) { return a == kUnset ? std::string("?") : R.atom_name(a); };
    for (int x : V)
        for (int y : V) {
            Label a = N.edge(x, y);
            if (a == kUnset) {
                r.add("total", "edge (" + std::to_string(x) + "," + std::to_string(y) + ") unlabelled");
                continue;
            }
            if (x == y && !R.idAtoms.test(a)) r.add("identity", "diagonal (" + std::to_string(x) + "," + std::to_string(x) + ") = " + nm(a));
            Label b = N.edge(y, x);
            if (b != kUnset && R.s->converse[a] != b)
                r.add("converse", "(" + std::to_string(x) + "," + std::to_string(y) + ")=" + nm(a) + " but reverse is " + nm(b));
        }
    if (r.has("total")) return r;
    for (int l : V)
        for (int m : V)
            for (int n : V)
                if (!R.tri(N.edge(l, m), N.edge(m, n), N.edge(l, n)))
                    r.add("triangle", "(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ") labelled " +
                                          nm(N.edge(l, m)) + "," + nm(N.edge(m, n)) + "," + nm(N.edge(l, n)));
    return r;
}

namespace detail {
struct RaCsp {
    const RaRules& R;
    Network net;
    std::vector<int> V;

    bool edge_ok(int x, int y) const {
        for (int z : V) {
            int p[3] = {x, y, z};
            // every ordering of {x,y,z}; cheap and independent of Peircean closure
            static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (auto& q : perm) {
                int l = p[q[0]], m = p[q[1]], n = p[q[2]];
                Label a = net.edge(l, m), b = net.edge(m, n), c = net.edge(l, n);
                if (a == kUnset || b == kUnset || c == kUnset) continue;
                if (!R.tri(a, b, c)) return false;
            }
        }
        return true;
    }

    Bits domain(int x, int y) const {
        Bits d = (x == y) ? R.idAtoms : R.allAtoms;
        std::size_t N = R.atom_count();
        for (int z : V) {
            if (z == x || z == y) continue;
            Label a = net.edge(x, z), b = net.edge(z, y);
            if (a != kUnset && b != kUnset) d &= R.comp[std::size_t(a) * N + b];
        }
        return d;
    }

    template <class F>
    void search(F& emit) {
        int bx = -1, by = -1;
        std::size_t best = SIZE_MAX;
        Bits bestDom;
        for (int x : V)
            for (int y : V) {
                if (y < x || net.edge(x, y) != kUnset) continue;
                Bits d = domain(x, y);
                std::size_t c = d.count();
                if (c < best) {
                    best = c;
                    bx = x;
                    by = y;
                    bestDom = std::move(d);
                    if (c == 0) return;
                }
            }
        if (bx < 0) {
            emit(net);
            return;
        }
        std::size_t M = std::size_t(net.m);
        for_each_bit(bestDom, [&](std::size_t a) {
            Label conv = Label(R.s->converse[a]);
            if (bx == by && conv != a) return;
            net.lab[bx * M + by] = Label(a);
            net.lab[by * M + bx] = conv;
            if (edge_ok(bx, by)) search(emit);
            net.lab[bx * M + by] = kUnset;
            net.lab[by * M + bx] = kUnset;
        });
    }
};
}  // namespace detail

// Enumerate all consistent completions of the unset edges among live nodes.
template <class F>
void complete(const RaRules& R, const Network& N, F&& emit) {
    detail::RaCsp csp{R, N, N.node_list()};
    // pre-set labels must already be coherent
    for (int x : csp.V)
        for (int y : csp.V) {
            Label a = N.edge(x, y), b = N.edge(y, x);
            if (a == kUnset) continue;
            if (b != kUnset && Label(R.s->converse[a]) != b) return;
            if (x == y && !R.idAtoms.test(a)) return;
            if (b == kUnset) csp.net.lab[std::size_t(y) * N.m + x] = Label(R.s->converse[a]);
        }
    for (int x : csp.V)
        for (int y : csp.V)
            if (csp.net.edge(x, y) != kUnset && !csp.edge_ok(x, y)) return;
    csp.search(emit);
}

// ---------------------------------------------------------------- CA rules

struct CaRules {
    const CaAtomStructure* s = nullptr;
    int n = 0;
    std::vector<Bits> pattern;                    // by tuple pattern mask
    std::vector<unsigned> atomPattern;            // by atom
    std::vector<std::vector<int>> cls;            // [i][atom]
    std::vector<std::vector<Bits>> classBits;     // [i][class]

    CaRules() = default;
    explicit CaRules(const CaAtomStructure& st) : s(&st), n(st.dim) {
        std::size_t N = st.size();
        int pairs = n * (n - 1) / 2;
        pattern.assign(std::size_t(1) << pairs, Bits(N));
        atomPattern.assign(N, 0);
        for (std::size_t a = 0; a < N; ++a) {
            unsigned p = 0, bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (st.D(i, j).test(a)) p |= 1u << bit;
            atomPattern[a] = p;
            pattern[p].set(a);
        }
        cls.assign(n, std::vector<int>(N, -1));
        classBits.assign(n, {});
        for (int i = 0; i < n; ++i)
            for (std::size_t a = 0; a < N; ++a) {
                if (cls[i][a] >= 0) continue;
                int c = int(classBits[i].size());
                classBits[i].push_back(st.eq[i][a]);
                for_each_bit(st.eq[i][a], [&](std::size_t b) { cls[i][b] = c; });
            }
    }
    int arity() const { return n; }
    std::size_t atom_count() const { return s->size(); }
    std::string atom_name(Label a) const { return s->atoms[a].str(); }
};

inline std::string tuple_str(const int* t, int n) {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

inline ValidationReport check_consistency(const CaRules& R, const Network& N) {
    ValidationReport r;
    int n = N.n;
    int t[8], u[8];
    for (std::size_t k = 0; k < N.lab.size(); ++k) {
        if (!N.tuple_live(k)) continue;
        N.decode(k, t);
        Label a = N.lab[k];
        if (a == kUnset) {
            r.add("total", tuple_str(t, n) + " unlabelled");
            continue;
        }
        if (R.atomPattern[a] != tuple_pattern(t, n)) r.add("diagonal", tuple_str(t, n) + " labelled " + R.atom_name(a));
        for (int i = 0; i < n; ++i)
            for (int w : N.node_list()) {
                if (w == t[i]) continue;
                std::copy(t, t + n, u);
                u[i] = w;
                Label b = N.lab[N.index(u)];
                if (b != kUnset && !R.s->eq[i][a].test(b))
                    r.add("cylindric", tuple_str(t, n) + " ≡_" + std::to_string(i) + " " + tuple_str(u, n) + " but labels differ off " + std::to_string(i));
            }
    }
    return r;
}

namespace detail {
struct CaCsp {
    const CaRules& R;
    Network net;
    int n, m;
    std::size_t F;  // faces per coordinate: (m+1)^n
    std::vector<int> faceClass;
    std::vector<std::size_t> vars;
    std::vector<unsigned> varPattern;

    CaCsp(const CaRules& r, const Network& N) : R(r), net(N), n(N.n), m(N.m) {
        F = 1;
        for (int i = 0; i < n; ++i) F *= std::size_t(m + 1);
        faceClass.assign(F * n, -1);
    }

    std::size_t face(int i, std::size_t k) const {
        int t[8];
        net.decode(k, t);
        std::size_t f = 0;
        for (int j = 0; j < n; ++j) f = f * (m + 1) + (j == i ? m : t[j]);
        return std::size_t(i) * F + f;
    }

    // Record the classes of a labelled tuple; false on clash. Pushes changed faces.
    bool stamp(std::size_t k, Label a, std::vector<std::size_t>& changed) {
        for (int i = 0; i < n; ++i) {
            std::size_t f = face(i, k);
            int c = R.cls[i][a];
            if (faceClass[f] < 0) {
                faceClass[f] = c;
                changed.push_back(f);
            } else if (faceClass[f] != c) {
                return false;
            }
        }
        return true;
    }

    Bits domain(std::size_t v) const {
        Bits d = R.pattern[varPattern[v]];
        for (int i = 0; i < n; ++i) {
            int c = faceClass[face(i, vars[v])];
            if (c >= 0) d &= R.classBits[i][c];
        }
        return d;
    }

    template <class Fn>
    void search(std::vector<char>& done, Fn& emit) {
        std::size_t best = SIZE_MAX, bv = 0;
        Bits bestDom;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (done[v]) continue;
            Bits d = domain(v);
            std::size_t c = d.count();
            if (c < best) {
                best = c;
                bv = v;
                bestDom = std::move(d);
                if (c <= 1) break;
            }
        }
        if (best == SIZE_MAX) {
            emit(net);
            return;
        }
        if (best == 0) return;
        done[bv] = 1;
        for_each_bit(bestDom, [&](std::size_t a) {
            std::vector<std::size_t> changed;
            if (stamp(vars[bv], Label(a), changed)) {
                net.lab[vars[bv]] = Label(a);
                search(done, emit);
                net.lab[vars[bv]] = kUnset;
            }
            for (auto f : changed) faceClass[f] = -1;
        });
        done[bv] = 0;
    }
};
}  // namespace detail

// Enumerate all consistent completions of unset tuples over live nodes.
template <class F>
void complete(const CaRules& R, const Network& N, F&& emit) {
    detail::CaCsp csp(R, N);
    int t[8];
    std::vector<std::size_t> scratch;
    for (std::size_t k = 0; k < N.lab.size(); ++k) {
        if (!N.tuple_live(k)) continue;
        N.decode(k, t);
        if (N.lab[k] == kUnset) {
            csp.vars.push_back(k);
            csp.varPattern.push_back(tuple_pattern(t, N.n));
            continue;
        }
        if (R.atomPattern[N.lab[k]] != tuple_pattern(t, N.n)) return;
        if (!csp.stamp(k, N.lab[k], scratch)) return;
    }
    std::vector<char> done(csp.vars.size(), 0);
    csp.search(done, emit);
}

// ---------------------------------------------------------------- maps

// Nθ: theta[i] is the old node for new node i, or -1. New slot count is theta.size().
inline Network apply_map(const Network& N, const std::vector<int>& theta) {
    int m2 = int(theta.size());
    Network out(N.n, m2);
    for (int i = 0; i < m2; ++i)
        if (theta[i] >= 0 && theta[i] < N.m && N.has(theta[i])) out.add_node(i);
    int t[8], u[8];
    for (std::size_t k = 0; k < out.lab.size(); ++k) {
        if (!out.tuple_live(k)) continue;
        out.decode(k, t);
        for (int i = 0; i < N.n; ++i) u[i] = theta[t[i]];
        out.lab[k] = N.lab[N.index(u)];
    }
    for (auto& [seq, l] : N.hyper) {
        // pull back: every new sequence mapping onto seq
        std::vector<std::vector<int>> pre{{}};
        for (int v : seq) {
            std::vector<std::vector<int>> next;
            for (auto& p : pre)
                for (int i = 0; i < m2; ++i)
                    if (out.has(i) && theta[i] == v) {
                        auto q = p;
                        q.push_back(i);
                        next.push_back(q);
                    }
            pre.swap(next);
        }
        for (auto& p : pre) out.hyper[p] = l;
    }
    return out;
}

// ---------------------------------------------------------------- canonical form

namespace detail {
struct Canon {
    const Network& N;
    std::vector<int> V;
    std::string best;
    std::vector<int> bestOrder;
    bool have = false;

    explicit Canon(const Network& net) : N(net), V(net.node_list()) {}

    static std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        x ^= x >> 31;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        return h ^ x;
    }

    // Colour refinement. Signatures are hashed: a collision can only make the
    // refinement coarser, never the final encoding wrong, because leaves are
    // compared by their exact encodings.
    std::vector<int> refine(std::vector<int> col) const {
        int n = N.n;
        std::size_t k = V.size();
        std::vector<int> slotCol(N.m, -1);
        std::vector<std::vector<std::uint64_t>> items(k);
        std::vector<int> slotPos(N.m, -1);
        for (std::size_t v = 0; v < k; ++v) slotPos[V[v]] = int(v);
        int t[8];
        std::size_t before = 0;
        {
            auto c2 = col;
            std::sort(c2.begin(), c2.end());
            before = std::size_t(std::unique(c2.begin(), c2.end()) - c2.begin());
        }
        for (;;) {
            for (std::size_t v = 0; v < k; ++v) {
                slotCol[V[v]] = col[v];
                items[v].clear();
            }
            for (std::size_t idx = 0; idx < N.lab.size(); ++idx) {
                if (!N.tuple_live(idx)) continue;
                N.decode(idx, t);
                std::uint64_t e = mix(0x51ed27, N.lab[idx]);
                for (int i = 0; i < n; ++i) e = mix(e, std::uint64_t(slotCol[t[i]]));
                for (int i = 0; i < n; ++i) {
                    unsigned mask = 0;
                    bool first = true;
                    for (int j = 0; j < n; ++j)
                        if (t[j] == t[i]) {
                            mask |= 1u << j;
                            if (j < i) first = false;
                        }
                    if (first) items[slotPos[t[i]]].push_back(mix(e, mask));
                }
            }
            for (auto& [seq, l] : N.hyper) {
                std::uint64_t e = mix(0x7a3b11, std::uint64_t(l) + (std::uint64_t(seq.size()) << 32));
                for (int x : seq) e = mix(e, std::uint64_t(slotCol[x]));
                for (std::size_t i = 0; i < seq.size(); ++i) {
                    std::uint64_t mask = 0;
                    bool first = true;
                    for (std::size_t j = 0; j < seq.size(); ++j)
                        if (seq[j] == seq[i]) {
                            mask |= 1ull << j;
                            if (j < i) first = false;
                        }
                    if (first) items[slotPos[seq[i]]].push_back(mix(e, mask ^ 0xabcdef));
                }
            }
            std::vector<std::pair<std::uint64_t, std::size_t>> sig(k);
            for (std::size_t v = 0; v < k; ++v) {
                std::sort(items[v].begin(), items[v].end());
                std::uint64_t h = mix(0x1234567, std::uint64_t(col[v]));
                for (auto x : items[v]) h = mix(h, x);
                sig[v] = {h, v};
            }
            // new colour = (old colour, hash) ranked; old order is kept so
            // refinement never merges cells
            std::vector<std::pair<std::pair<int, std::uint64_t>, std::size_t>> keyed(k);
            for (std::size_t v = 0; v < k; ++v) keyed[v] = {{col[v], sig[v].first}, v};
            std::sort(keyed.begin(), keyed.end());
            std::vector<int> next(k);
            int c = -1;
            for (std::size_t q = 0; q < k; ++q) {
                if (q == 0 || keyed[q].first != keyed[q - 1].first) ++c;
                next[keyed[q].second] = c;
            }
            std::size_t after = std::size_t(c + 1);
            col = std::move(next);
            if (after == before) return col;
            before = after;
        }
    }

    std::string encode(const std::vector<int>& order) const {
        // order[r] = slot placed at position r
        std::string s;
        auto put = [&](int x) {
            s.push_back(char(x & 0xFF));
            s.push_back(char((x >> 8) & 0xFF));
            s.push_back(char((x >> 16) & 0xFF));
        };
        int k = int(order.size());
        put(k);
        put(N.n);
        std::vector<int> pos(N.m, -1);
        for (int r = 0; r < k; ++r) pos[order[r]] = r;
        std::size_t total = 1;
        for (int i = 0; i < N.n; ++i) total *= std::size_t(k);
        std::vector<int> u(N.n);
        for (std::size_t c = 0; c < total; ++c) {
            std::size_t x = c;
            for (int i = N.n - 1; i >= 0; --i) {
                u[i] = order[x % k];
                x /= k;
            }
            put(N.lab[N.index(u)]);
        }
        std::vector<std::vector<int>> hs;
        for (auto& [seq, l] : N.hyper) {
            std::vector<int> e{int(seq.size())};
            for (int v : seq) e.push_back(pos[v]);
            e.push_back(l);
            hs.push_back(std::move(e));
        }
        std::sort(hs.begin(), hs.end());
        put(int(hs.size()));
        for (auto& e : hs)
            for (int x : e) put(x);
        return s;
    }

    void search(std::vector<int> col) {
        col = refine(std::move(col));
        std::size_t k = V.size();
        // first non-singleton cell (smallest colour)
        std::vector<int> cnt(k + 1, 0);
        for (int c : col) ++cnt[c];
        int target = -1;
        for (std::size_t c = 0; c <= k; ++c)
            if (cnt[c] > 1) {
                target = int(c);
                break;
            }
        if (target < 0) {
            std::vector<int> order(k);
            for (std::size_t v = 0; v < k; ++v) order[col[v]] = V[v];
            std::string e = encode(order);
            if (!have || e < best) {
                best = std::move(e);
                bestOrder = order;
                have = true;
            }
            return;
        }
        for (std::size_t v = 0; v < k; ++v) {
            if (col[v] != target) continue;
            // individualise v: it keeps `target`, its cell-mates move up by one
            std::vector<int> c2(k);
            for (std::size_t w = 0; w < k; ++w) c2[w] = 2 * col[w] + ((col[w] == target && w != v) ? 1 : 0);
            search(c2);
        }
    }
};
}  // namespace detail

struct CanonicalForm {
    std::string key;
    std::vector<int> order;  // order[r] = original slot sent to slot r
    Network net;             // relabelled so live nodes are 0..k-1
};

inline CanonicalForm canonical_form(const Network& N) {
    detail::Canon c(N);
    CanonicalForm out;
    if (c.V.empty()) {
        out.key = c.encode({});
        out.net = Network(N.n, N.m);
        return out;
    }
    std::vector<int> col(c.V.size());
    for (std::size_t v = 0; v < c.V.size(); ++v) {
        std::vector<int> d(N.n, c.V[v]);
        col[v] = N.get(d);
    }
    // dense initial colours
    auto sorted = col;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& x : col) x = int(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
    c.search(col);
    out.key = c.best;
    out.order = c.bestOrder;
    std::vector<int> theta(N.m, -1);
    for (std::size_t r = 0; r < out.order.size(); ++r) theta[r] = out.order[r];
    out.net = apply_map(N, theta);
    return out;
}

inline std::string canonical_key(const Network& N) { return canonical_form(N).key; }

// ---------------------------------------------------------------- hyperedges

// x ~ y iff some tuple starting (x, y, ...) is labelled inside d_01.
// In a consistent network this is plain equality.
template <class Rules>
bool node_sim(const Rules& R, const Network& N, int x, int y, bool forAll = false);

template <>
inline bool node_sim<CaRules>(const CaRules& R, const Network& N, int x, int y, bool forAll) {
    bool any = false, all = true;
    int t[8];
    for (std::size_t k = 0; k < N.lab.size(); ++k) {
        if (!N.tuple_live(k)) continue;
        N.decode(k, t);
        if (t[0] != x || t[1] != y) continue;
        bool in = N.lab[k] != kUnset && R.s->D(0, 1).test(N.lab[k]);
        any = any || in;
        all = all && in;
    }
    return forAll ? all : any;
}

template <>
inline bool node_sim<RaRules>(const RaRules& R, const Network& N, int x, int y, bool) {
    Label a = N.edge(x, y);
    return a != kUnset && R.idAtoms.test(a);
}

enum class HyperKind { Short, Long };

// Short iff the coordinates fall into at most n ~-classes (n witnesses suffice).
template <class Rules>
HyperKind classify_hyperedge(const Rules& R, const Network& N, const std::vector<int>& xs, bool forAll = false) {
    std::vector<int> reps;
    for (int x : xs) {
        bool found = false;
        for (int r : reps)
            if (node_sim(R, N, x, r, forAll)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(x);
    }
    return int(reps.size()) <= N.n ? HyperKind::Short : HyperKind::Long;
}

// All sequences of distinct live nodes of length n+1..maxLen (long hyperedges
// in a consistent network), in lexicographic order.
inline std::vector<std::vector<int>> long_sequences(const Network& N, int maxLen) {
    std::vector<std::vector<int>> out;
    auto V = N.node_list();
    std::vector<int> cur;
    std::vector<char> used(N.m, 0);
    auto rec = [&](auto&& self) -> void {
        if (int(cur.size()) > N.n) out.push_back(cur);
        if (int(cur.size()) == maxLen) return;
        for (int v : V) {
            if (used[v]) continue;
            used[v] = 1;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
    return out;
}

// λ-neatness: with ∼ equal to equality, any stored hyperedge must be long.
template <class Rules>
ValidationReport check_lambda_neat(const Rules& R, const Network& N, int lambda = 0) {
    ValidationReport r;
    for (auto& [seq, l] : N.hyper)
        if (classify_hyperedge(R, N, seq) == HyperKind::Short && l != lambda)
            r.add("lambda-neat", "short hyperedge labelled " + std::to_string(l));
    return r;
}

}  // namespace alw
