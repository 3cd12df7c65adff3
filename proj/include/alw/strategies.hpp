#pragma once

#include "alw/constructions.hpp"
#include "alw/games.hpp"
#include "alw/rainbow.hpp"
#include "alw/subalgebra.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

// ============================================================ ∀ cones on the rainbow

using RainbowGame = Game<CaRules>;

// Colour of the edge x -> y in a network over rainbow_finite(n), -1 on the diagonal.
inline int rainbow_edge(const RainbowStructure& rs, const Network& N, int x, int y) {
    if (x == y) return -1;
    std::vector<int> t(N.n, y);
    t[0] = x;
    Label a = N.get(t);
    if (a == kUnset) return -1;
    return rs.colour(a, 0, 1);
}

// Atom whose coordinates 0, 1, 2 (3 = n) carry the graph w0 / g0^t / g1: the
// base (0,1) plus a cone of tint t with apex 2.
inline int cone_atom(const RainbowStructure& rs, int tint) {
    const auto& rr = rs.rules;
    if (rr.n != 3) throw std::invalid_argument("cone strategy is written for dimension 3");
    return rs.find({rr.white(0), rr.green0(tint), rr.green(1)});
}

struct ConeBase {
    int net = -1, x = -1, y = -1;
    std::vector<int> tints;  // tints already coned on (x, y)
};

// Largest network with a white base (x, y) carrying at least one cone.
inline std::optional<ConeBase> find_cone_base(const RainbowStructure& rs, const Position& p) {
    const auto& rr = rs.rules;
    std::optional<ConeBase> best;
    int bestNodes = -1;
    for (int k = 0; k < int(p.nets.size()); ++k) {
        const Network& N = p.nets[k];
        if (N.node_count() <= bestNodes) continue;
        auto V = N.node_list();
        for (int x : V)
            for (int y : V) {
                if (x == y || rainbow_edge(rs, N, x, y) != rr.white(0)) continue;
                ConeBase b{k, x, y, {}};
                for (int z : V) {
                    int c0 = rainbow_edge(rs, N, x, z), c1 = rainbow_edge(rs, N, y, z);
                    if (c0 >= 0 && rr.colours[c0].kind == RainbowRules::Green0 && c1 == rr.green(1))
                        b.tints.push_back(rr.colours[c0].i);
                }
                if (b.tints.empty()) continue;
                std::sort(b.tints.begin(), b.tints.end());
                if (!best || N.node_count() > bestNodes) {
                    best = b;
                    bestNodes = N.node_count();
                }
                goto next_net;
            }
    next_net:;
    }
    return best;
}

// Scripted ∀: open with a cone of tint 0 on a white base, then demand cones of
// the least unused tint on that base. A fresh slot is used while one is free;
// in boldG a node off the base may be reused.
inline std::vector<Move> forall_cone_moves(const RainbowStructure& rs, const RainbowGame& g, const Position& p) {
    if (p.nets.empty()) {
        Move mv;
        mv.kind = Move::Atom;
        mv.a = cone_atom(rs, 0);
        return {mv};
    }
    auto base = find_cone_base(rs, p);
    if (!base) return {};
    int t = 0;
    while (std::find(base->tints.begin(), base->tints.end(), t) != base->tints.end()) ++t;
    if (t >= rs.rules.greenCount) return {};
    const Network& N = p.nets[base->net];
    int slot = N.free_slot();
    if (slot < 0 && g.game_spec().reuse())
        for (int z : N.node_list())
            if (z != base->x && z != base->y) {
                slot = z;
                break;
            }
    if (slot < 0) return {};
    Move mv;
    mv.kind = Move::Cyl;
    mv.net = base->net;
    mv.i = 2;
    mv.tuple = {base->x, base->y, base->x};
    mv.a = cone_atom(rs, t);
    mv.slot = slot;
    return {mv};
}

inline RainbowGame::Hint cone_hint(const RainbowStructure& rs) {
    return [&rs](const RainbowGame& g, const Position& p) { return forall_cone_moves(rs, g, p); };
}

struct ConePlayout {
    bool won = false;           // every ∃ line ends with no answer
    std::optional<CertNode> certificate;
    std::vector<std::string> trace;
    std::size_t leaves = 0;
};

// Play the scripted ∀ against every ∃ answer (no search on ∀'s side).
inline ConePlayout forall_cone_strategy(const RainbowStructure& rs, const RainbowGame& g) {
    ConePlayout out;
    bool ok = true;
    auto rec = [&](auto&& self, const Position& p, int depth) -> std::optional<CertNode> {
        if (p.rounds <= 0) {
            ok = false;
            out.trace.push_back(std::string(depth * 2, ' ') + "rounds exhausted");
            return std::nullopt;
        }
        auto moves = forall_cone_moves(rs, g, p);
        if (moves.empty()) {
            ok = false;
            out.trace.push_back(std::string(depth * 2, ' ') + "script has no move");
            return std::nullopt;
        }
        CertNode node;
        node.move = moves[0];
        auto rs2 = g.responses(p, node.move);
        out.trace.push_back(std::string(depth * 2, ' ') + g.move_str(node.move) + " -> " + std::to_string(rs2.size()) + " answers");
        if (rs2.empty()) ++out.leaves;
        for (auto& r : rs2) {
            auto c = self(self, g.child(p, r), depth + 1);
            if (!c) return std::nullopt;
            node.responses.push_back(r.key);
            node.children.push_back(std::move(*c));
        }
        return node;
    };
    auto cert = rec(rec, g.initial(), 0);
    out.won = ok && cert.has_value();
    if (out.won) out.certificate = std::move(cert);
    return out;
}

// ============================================================ ∃ on the ordered rainbow board
//
// Truncated board for the ρ strategy: a white base (0, 1), cones with green
// tints drawn from [0, greens) and reds r_{k,l} with k, l in a pool [0, pool).
// Consistency on triangles:
//   no all-green triangle; no (g0^s, g0^t, w0);
//   reds (r_ij, r_jk, r_ik) only;
//   two cones of tints p, q on one base joined by r_kl need p<q ⟺ k<l and p≠q.

struct RhoBook {
    int pool = 27;
    int rounds = 3;   // k
    int played = 0;   // r
    std::map<int, int> rho;

    static long long pow3(int e) {
        long long v = 1;
        for (int i = 0; i < e; ++i) v *= 3;
        return v;
    }
    long long gap() const { return pow3(std::max(0, rounds - played)); }

    ValidationReport check() const {
        ValidationReport r;
        long long g = gap();
        const std::pair<const int, int>* prev = nullptr;
        for (auto& kv : rho) {
            if (kv.second < 0 || kv.second >= pool) r.add("pool", "rho(" + std::to_string(kv.first) + ") outside the red pool");
            if (prev) {
                if (kv.second <= prev->second) r.add("order", "rho not increasing at tint " + std::to_string(kv.first));
                else if (kv.second - prev->second < g)
                    r.add("gap", "rho(" + std::to_string(kv.first) + ")-rho(" + std::to_string(prev->first) + ") < " + std::to_string(g));
            }
            prev = &kv;
        }
        return r;
    }
};

struct NoRedAvailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderedBoard {
    enum Kind { G0, G1, W0, Red };
    struct Colour {
        Kind kind = W0;
        int i = 0, j = 0;  // tint, or red indices
        bool operator==(const Colour&) const = default;
    };
    int greens = 28;
    int pool = 27;
    int nodes = 2;                           // 0, 1 are the base
    std::vector<std::vector<Colour>> col;    // symmetric except reds (r_ij vs r_ji)
    std::vector<int> tintOf;                 // apex node -> tint, -1 on base nodes

    OrderedBoard(int g, int p) : greens(g), pool(p), col(2, std::vector<Colour>(2)), tintOf{-1, -1} {}

    static Colour conv(Colour c) {
        if (c.kind == Red) std::swap(c.i, c.j);
        return c;
    }
    std::string name(const Colour& c) const {
        switch (c.kind) {
            case G0: return "g0^" + std::to_string(c.i);
            case G1: return "g1";
            case W0: return "w0";
            default: return "r" + std::to_string(c.i) + "," + std::to_string(c.j);
        }
    }
    // xy, yz, xz
    static bool triangle_ok(const Colour& a, const Colour& b, const Colour& c) {
        auto green = [](const Colour& x) { return x.kind == G0 || x.kind == G1; };
        if (green(a) && green(b) && green(c)) return false;
        const Colour* cs[3] = {&a, &b, &c};
        for (int w = 0; w < 3; ++w)
            if (cs[w]->kind == W0 && cs[(w + 1) % 3]->kind == G0 && cs[(w + 2) % 3]->kind == G0) return false;
        if (a.kind == Red && b.kind == Red && c.kind == Red) return a.i == c.i && a.j == b.i && b.j == c.j;
        // two cones from x: xy = g0^p (reversed to yx), xz = g0^q, yz = r_kl
        return true;
    }

    ValidationReport check() const {
        ValidationReport r;
        for (int x = 0; x < nodes; ++x)
            for (int y = 0; y < nodes; ++y)
                for (int z = 0; z < nodes; ++z) {
                    if (x == y || y == z || x == z) continue;
                    if (!triangle_ok(col[x][y], col[y][z], col[x][z]))
                        r.add("triangle", std::to_string(x) + std::to_string(y) + std::to_string(z) + ": " + name(col[x][y]) + "," +
                                              name(col[y][z]) + "," + name(col[x][z]));
                    // green-green-red: apexes y, z over base node x
                    const Colour &p = col[x][y], &q = col[x][z], &e = col[y][z];
                    if (p.kind == G0 && q.kind == G0 && e.kind == Red) {
                        bool iso = p.i != q.i && e.i != e.j && ((p.i < q.i) == (e.i < e.j));
                        if (!iso) r.add("cone-red", name(p) + "," + name(q) + " joined by " + name(e));
                    }
                }
        return r;
    }

    // New apex with tint t on the base; reds to the other apexes from `red`.
    int add_apex(int t, const std::function<Colour(int)>& red) {
        int z = nodes++;
        for (auto& row : col) row.emplace_back();
        col.emplace_back(nodes);
        tintOf.push_back(t);
        col[0][z] = col[z][0] = {G0, t, 0};
        col[1][z] = col[z][1] = {G1, 0, 0};
        for (int u = 2; u < z; ++u) {
            col[u][z] = red(u);
            col[z][u] = conv(col[u][z]);
        }
        return z;
    }
};

// ∃'s answer to "cone of tint t on the base": extend ρ by the midpoint rule,
// then colour apex pairs (p, q) with r_{ρ(p),ρ(q)}.
inline std::pair<OrderedBoard, RhoBook> exists_rainbow_move(const OrderedBoard& board, int tint, const RhoBook& book) {
    OrderedBoard b = board;
    RhoBook nb = book;
    if (!nb.rho.count(tint)) {
        auto hi = nb.rho.upper_bound(tint);
        int lo = -1, up = nb.pool;
        if (hi != nb.rho.end()) up = hi->second;
        if (hi != nb.rho.begin()) lo = std::prev(hi)->second;
        int v = lo + (up - lo) / 2;
        if (v <= lo || v >= up) throw NoRedAvailable("no red index strictly between " + std::to_string(lo) + " and " + std::to_string(up));
        nb.rho[tint] = v;
    }
    ++nb.played;
    for (int u = 2; u < b.nodes; ++u)
        if (b.tintOf[u] == tint) return {b, nb};  // witness already there
    b.add_apex(tint, [&](int u) {
        return OrderedBoard::Colour{OrderedBoard::Red, nb.rho.at(b.tintOf[u]), nb.rho.at(tint)};
    });
    return {b, nb};
}

struct RhoSurvival {
    bool survived = true;
    std::size_t lines = 0;  // complete ∀ lines examined
    std::vector<std::string> trace;
    std::string failure;
};

// Every ∀ line of `rounds` cone demands with tints in [0, greens).
inline RhoSurvival exists_rainbow_survives(int greens, int pool, int rounds, bool keepTrace = false) {
    RhoSurvival out;
    RhoBook book;
    book.pool = pool;
    book.rounds = rounds;
    OrderedBoard start(greens, pool);
    start.col[0][1] = start.col[1][0] = {OrderedBoard::W0, 0, 0};
    std::vector<int> line;
    auto rec = [&](auto&& self, const OrderedBoard& b, const RhoBook& bk) -> void {
        if (!out.survived) return;
        if (int(line.size()) == rounds) {
            ++out.lines;
            if (keepTrace) {
                std::string s = "tints";
                for (int t : line) s += " " + std::to_string(t);
                s += " rho";
                for (auto& [t, v] : bk.rho) s += " " + std::to_string(t) + ">" + std::to_string(v);
                out.trace.push_back(s);
            }
            return;
        }
        for (int t = 0; t < greens && out.survived; ++t) {
            line.push_back(t);
            auto at = [&] {
                std::string s = " after tints";
                for (int u : line) s += " " + std::to_string(u);
                return s;
            };
            try {
                auto [nb, nk] = exists_rainbow_move(b, t, bk);
                auto rep = nb.check();
                auto rb = nk.check();
                if (!rep.ok() || !rb.ok()) {
                    out.survived = false;
                    out.failure = (!rep.ok() ? rep.issues[0].detail : rb.issues[0].detail) + at();
                } else {
                    self(self, nb, nk);
                }
            } catch (const NoRedAvailable& e) {
                out.survived = false;
                out.failure = e.what() + at();
            }
            line.pop_back();
        }
    };
    rec(rec, start, book);
    return out;
}

// ============================================================ ∃ EF partition strategy
//
// EF game between Cm(split_ra(I, α1)) and Cm(split_ra(I, α2)). Elements are
// atom sets; atoms off r(0) are matched by tag. The pebbled elements cut the
// r(0) copies on each side into cells indexed by membership pattern. ∃ keeps,
// cell by cell, equal sizes or both sizes at least 2^(k-r) (the finite stand-in
// for "both infinite").

struct SplitPair {
    RaAtomStructure left, right;
    RaAlgebra A, B;
    std::vector<int> toRight;  // non-r0 atoms: left -> right
    std::vector<int> toLeft;
    Bits splitL, splitR;       // the r(0) copies

    SplitPair(int I, int alpha1, int alpha2) : left(split_ra(I, alpha1)), right(split_ra(I, alpha2)), A(complex_algebra(left)), B(complex_algebra(right)) {
        toRight.assign(left.size(), -1);
        toLeft.assign(right.size(), -1);
        splitL = Bits(left.size());
        splitR = Bits(right.size());
        for (std::size_t a = 0; a < left.size(); ++a) {
            if (left.atoms[a].kind == "r0") {
                splitL.set(a);
                continue;
            }
            toRight[a] = right.at(left.atoms[a]);
            toLeft[toRight[a]] = int(a);
        }
        for (std::size_t a = 0; a < right.size(); ++a)
            if (right.atoms[a].kind == "r0") splitR.set(a);
    }
};

struct PartitionBook {
    int rounds = 2;  // k
    std::vector<Bits> left, right;
    int played() const { return int(left.size()); }
    long long threshold() const { return 1LL << std::max(0, rounds - played()); }

    // cell pattern of copy a given the pebbled elements on one side
    static unsigned pattern(const std::vector<Bits>& xs, std::size_t a) {
        unsigned p = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i].test(a)) p |= 1u << i;
        return p;
    }
    static std::map<unsigned, std::vector<std::size_t>> cells(const std::vector<Bits>& xs, const Bits& split) {
        std::map<unsigned, std::vector<std::size_t>> c;
        for_each_bit(split, [&](std::size_t a) { c[pattern(xs, a)].push_back(a); });
        return c;
    }

    ValidationReport check(const SplitPair& sp) const {
        ValidationReport r;
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t a = 0; a < sp.toRight.size(); ++a)
                if (sp.toRight[a] >= 0 && left[i].test(a) != right[i].test(std::size_t(sp.toRight[a])))
                    r.add("matched-atom", "pebble " + std::to_string(i) + " disagrees on " + sp.left.name(int(a)));
        auto cl = cells(left, sp.splitL), cr = cells(right, sp.splitR);
        long long t = threshold();
        unsigned top = 1u << left.size();
        for (unsigned p = 0; p < top; ++p) {
            long long x = cl.count(p) ? (long long)cl[p].size() : 0, y = cr.count(p) ? (long long)cr[p].size() : 0;
            if (x != y && (x < t || y < t))
                r.add("cell", "cell " + std::to_string(p) + " has sizes " + std::to_string(x) + " and " + std::to_string(y));
        }
        return r;
    }
};

struct NoMatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ∃'s answer to ∀ pebbling x on `side` (0 = left, 1 = right).
inline Bits exists_ef_partition_move(const SplitPair& sp, PartitionBook& book, int side, const Bits& x) {
    const auto& mine = side == 0 ? book.left : book.right;
    const auto& theirs = side == 0 ? book.right : book.left;
    const Bits& splitMine = side == 0 ? sp.splitL : sp.splitR;
    const Bits& splitTheirs = side == 0 ? sp.splitR : sp.splitL;
    const auto& across = side == 0 ? sp.toRight : sp.toLeft;
    Bits y(splitTheirs.size());
    for (std::size_t a = 0; a < across.size(); ++a)
        if (across[a] >= 0 && x.test(a)) y.set(std::size_t(across[a]));
    auto cm = PartitionBook::cells(mine, splitMine);
    auto ct = PartitionBook::cells(theirs, splitTheirs);
    long long next = 1LL << std::max(0, book.rounds - book.played() - 1);
    unsigned top = 1u << mine.size();
    for (unsigned p = 0; p < top; ++p) {
        const auto& P = cm[p];
        const auto& Q = ct[p];
        long long c = 0;
        for (auto a : P) c += x.test(a);
        long long nP = (long long)P.size(), nQ = (long long)Q.size(), d;
        if (nP == nQ) d = c;
        else if (c < next) d = c;
        else if (nP - c < next) d = nQ - (nP - c);
        else d = std::max(next, std::min(c, nQ - next));
        if (d < 0 || d > nQ) throw NoMatch("cell " + std::to_string(p) + " cannot host " + std::to_string(c) + " of " + std::to_string(nP));
        for (long long q = 0; q < d; ++q) y.set(Q[std::size_t(q)]);
    }
    if (side == 0) {
        book.left.push_back(x);
        book.right.push_back(y);
    } else {
        book.left.push_back(y);
        book.right.push_back(x);
    }
    return y;
}

// Atomic facts among pebbled elements: constants, order, Boolean operations,
// converse and composition.
inline bool ef_partial_iso(const RaAlgebra& A, const std::vector<Bits>& xs, const RaAlgebra& B, const std::vector<Bits>& ys, std::string* why = nullptr) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    std::size_t k = xs.size();
    auto is = [](const Bits& v, const Bits& w) { return v == w; };
    Bits zeroA(A.size()), zeroB(B.size()), oneA = full_bits(A.size()), oneB = full_bits(B.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (is(xs[i], zeroA) != is(ys[i], zeroB)) return fail("zero at " + std::to_string(i));
        if (is(xs[i], oneA) != is(ys[i], oneB)) return fail("one at " + std::to_string(i));
        if (is(xs[i], A.identity) != is(ys[i], B.identity)) return fail("identity at " + std::to_string(i));
        Bits ca = ra_converse(A, xs[i]), cb = ra_converse(B, ys[i]);
        for (std::size_t j = 0; j < k; ++j) {
            if (is(xs[i], xs[j]) != is(ys[i], ys[j])) return fail("equality " + std::to_string(i) + "," + std::to_string(j));
            if (xs[i].is_subset_of(xs[j]) != ys[i].is_subset_of(ys[j])) return fail("order " + std::to_string(i) + "," + std::to_string(j));
            if (is(ca, xs[j]) != is(cb, ys[j])) return fail("converse " + std::to_string(i) + "," + std::to_string(j));
            if (is(~xs[i], xs[j]) != is(~ys[i], ys[j])) return fail("complement " + std::to_string(i) + "," + std::to_string(j));
            Bits ma = xs[i] & xs[j], mb = ys[i] & ys[j];
            Bits ja = xs[i] | xs[j], jb = ys[i] | ys[j];
            Bits sa = ra_compose(A, xs[i], xs[j]), sb = ra_compose(B, ys[i], ys[j]);
            for (std::size_t l = 0; l < k; ++l) {
                if (is(ma, xs[l]) != is(mb, ys[l])) return fail("meet");
                if (is(ja, xs[l]) != is(jb, ys[l])) return fail("join");
                if (is(sa, xs[l]) != is(sb, ys[l])) return fail("composition " + std::to_string(i) + ";" + std::to_string(j) + "=" + std::to_string(l));
            }
        }
    }
    return true;
}

struct PartitionSurvival {
    bool survived = true;
    std::size_t lines = 0;
    std::string failure;
};

// ∀ tries every element on either side for `rounds` rounds; ∃ answers by the
// partition rule. Each step checks the book and the partial isomorphism.
inline PartitionSurvival exists_ef_partition_survives(const SplitPair& sp, int rounds) {
    PartitionSurvival out;
    PartitionBook start;
    start.rounds = rounds;
    std::size_t NA = sp.left.size(), NB = sp.right.size();
    auto rec = [&](auto&& self, const PartitionBook& book) -> void {
        if (!out.survived) return;
        if (book.played() == rounds) {
            ++out.lines;
            return;
        }
        for (int side = 0; side < 2 && out.survived; ++side) {
            std::size_t N = side == 0 ? NA : NB;
            for (std::size_t e = 0; e < (std::size_t(1) << N) && out.survived; ++e) {
                Bits x(N, e);
                PartitionBook nb = book;
                std::string why;
                try {
                    exists_ef_partition_move(sp, nb, side, x);
                } catch (const NoMatch& m) {
                    out.survived = false;
                    out.failure = m.what();
                    return;
                }
                auto rep = nb.check(sp);
                if (!rep.ok()) {
                    out.survived = false;
                    out.failure = rep.issues[0].rule + ": " + rep.issues[0].detail;
                    return;
                }
                if (!ef_partial_iso(sp.A, nb.left, sp.B, nb.right, &why)) {
                    out.survived = false;
                    out.failure = "not a partial isomorphism: " + why;
                    return;
                }
                self(self, nb);
            }
        }
    };
    rec(rec, start);
    return out;
}

}  // namespace alw
