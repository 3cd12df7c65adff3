#pragma once

#include "alw/network.hpp"
#include "alw/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace alw {

enum class Outcome { ExistsWins, ForallWins, Unknown };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::ExistsWins: return "ExistsWins";
        case Outcome::ForallWins: return "ForallWins";
        default: return "Unknown";
    }
}

enum class Variant { G, BoldG, H, BoldH };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::G: return "G";
        case Variant::BoldG: return "boldG";
        case Variant::H: return "H";
        default: return "boldH";
    }
}

struct GameSpec {
    Variant variant = Variant::G;
    int nodes = 3;               // slot budget m
    int rounds = 3;              // k, the opening atom move included
    std::size_t budget = 2'000'000;  // expanded positions per root move
    int threads = 1;
    int hyperLen = 0;            // longest stored hyperedge; 0 means n+1
    bool reuse() const { return variant == Variant::BoldG || variant == Variant::BoldH; }
    bool hyper() const { return variant == Variant::H || variant == Variant::BoldH; }
};

struct Move {
    enum Kind { Atom, Cyl, Transform, Amalgam } kind = Atom;
    int net = -1, net2 = -1;
    int i = 0;                // CA coordinate
    std::vector<int> tuple;   // x̄ (CA) or (x, y) (RA)
    int a = -1, b = -1;       // atoms
    int slot = -1;            // node that receives the witness
    std::vector<int> theta;   // transformation: new slot -> old node

    bool operator==(const Move&) const = default;
    auto operator<=>(const Move&) const = default;
};

// Played networks (sorted by key) plus rounds left. For G and boldG each
// network is stored in its own canonical form; H variants keep slot identity.
struct Position {
    std::vector<Network> nets;
    std::vector<std::string> keys;
    int rounds = 0;
    std::string key;  // memo key, rounds excluded
};

struct Response {
    std::string key;
    Network net;
};

struct CertNode {
    Move move;
    std::vector<std::string> responses;  // response network keys, sorted
    std::vector<CertNode> children;      // parallel to responses
    std::size_t size() const {
        std::size_t s = 1;
        for (auto& c : children) s += c.size();
        return s;
    }
    std::size_t depth() const {
        std::size_t d = 0;
        for (auto& c : children) d = std::max(d, c.depth());
        return d + 1;
    }
};

struct ExistsEntry {
    std::string position;  // digest
    std::string move;
    std::string response;  // digest
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::size_t expanded = 0;
    std::optional<CertNode> certificate;  // ForallWins
    std::vector<ExistsEntry> table;       // ExistsWins
    bool tableTruncated = false;
    std::string note;
};

inline std::string digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 15];
    return out;
}

template <class Rules>
class Game {
   public:
    using Hint = std::function<std::vector<Move>(const Game&, const Position&)>;

    Game(const Rules& r, GameSpec s) : R(r), spec(s) {
        if (spec.nodes < 1 || spec.rounds < 0) throw std::invalid_argument("budgets must be positive");
        if (spec.hyperLen == 0) spec.hyperLen = R.arity() + 1;
    }

    const Rules& rules() const { return R; }
    const GameSpec& game_spec() const { return spec; }
    Hint hint;

    Position initial() const {
        Position p;
        p.rounds = spec.rounds;
        finish(p);
        return p;
    }

    std::string move_str(const Move& mv) const {
        std::ostringstream os;
        auto tup = [&](const std::vector<int>& t) {
            os << '(';
            for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
            os << ')';
        };
        switch (mv.kind) {
            case Move::Atom: os << "atom " << R.atom_name(Label(mv.a)); break;
            case Move::Cyl:
                os << "cyl net=" << mv.net;
                if (R.arity() != 2 || is_ca()) os << " i=" << mv.i;
                os << " x=";
                tup(mv.tuple);
                os << " a=" << R.atom_name(Label(mv.a));
                if (mv.b >= 0) os << " b=" << R.atom_name(Label(mv.b));
                os << " z=" << mv.slot;
                break;
            case Move::Transform:
                os << "transform net=" << mv.net << " theta=";
                tup(mv.theta);
                break;
            case Move::Amalgam: os << "amalgamate " << mv.net << "+" << mv.net2; break;
        }
        return os.str();
    }

    // ------------------------------------------------------------ moves

    std::vector<Move> legal_forall_moves(const Position& p) const {
        std::vector<Move> out;
        if (p.nets.empty()) {
            for (std::size_t a = 0; a < R.atom_count(); ++a) {
                Move mv;
                mv.kind = Move::Atom;
                mv.a = int(a);
                out.push_back(mv);
            }
            return out;
        }
        for (int k = 0; k < int(p.nets.size()); ++k) cyl_moves(p, k, out);
        if (spec.hyper()) {
            for (int k = 0; k < int(p.nets.size()); ++k) transform_moves(p, k, out);
            for (int k = 0; k < int(p.nets.size()); ++k)
                for (int l = k + 1; l < int(p.nets.size()); ++l)
                    if (amalgamable(p.nets[k], p.nets[l])) {
                        Move mv;
                        mv.kind = Move::Amalgam;
                        mv.net = k;
                        mv.net2 = l;
                        out.push_back(mv);
                    }
        }
        return out;
    }

    // All ∃ answers, deduplicated by canonical key and sorted by it.
    std::vector<Network> exists_responses(const Position& p, const Move& mv) const {
        std::vector<Network> out;
        for (auto& r : responses(p, mv)) out.push_back(std::move(r.net));
        return out;
    }

    std::vector<Response> responses(const Position& p, const Move& mv) const {
        std::vector<Network> raw;
        switch (mv.kind) {
            case Move::Atom: raw = atom_responses(mv); break;
            case Move::Cyl: raw = cyl_responses(p, mv); break;
            case Move::Transform: raw.push_back(apply_map(p.nets[mv.net], mv.theta)); break;
            case Move::Amalgam: raw = amalgam_responses(p, mv); break;
        }
        if (spec.hyper()) {
            int fresh = next_hyperlabel(p);
            for (auto& N : raw) label_new_hyperedges(p, mv, N, fresh);
        }
        std::vector<Response> keyed;
        std::set<std::string> seen;
        for (auto& N : raw) {
            std::string k;
            Network stored;
            if (spec.hyper()) {
                k = raw_key(N);
                stored = N;
            } else {
                auto cf = canonical_form(N);
                k = cf.key;
                stored = std::move(cf.net);
            }
            if (seen.insert(k).second) keyed.push_back({std::move(k), std::move(stored)});
        }
        std::sort(keyed.begin(), keyed.end(), [](auto& x, auto& y) { return x.key < y.key; });
        return keyed;
    }

    Position child(const Position& p, const Network& N) const { return child(p, Response{net_key(N), N}); }

    Position child(const Position& p, const Response& r) const {
        Position c;
        c.rounds = p.rounds - 1;
        if (spec.hyper()) {
            c.nets = p.nets;
            c.nets.push_back(r.net);
            finish(c);
            return c;
        }
        // networks are already canonical: splice the new key into the sorted list
        auto it = std::lower_bound(p.keys.begin(), p.keys.end(), r.key);
        std::size_t at = std::size_t(it - p.keys.begin());
        c.keys = p.keys;
        c.nets = p.nets;
        if (it == p.keys.end() || *it != r.key) {
            c.keys.insert(c.keys.begin() + at, r.key);
            c.nets.insert(c.nets.begin() + at, r.net);
        }
        for (auto& k : c.keys) c.key += "#" + k;
        return c;
    }

    // ------------------------------------------------------------ solving

    // Iterative deepening on the round budget: a ∀ win within fewer rounds is
    // a win at k (monotonicity), and the shortest one gives the smallest
    // certificate. ∃ wins are only reported from the full budget.
    Verdict solve() const {
        Verdict last;
        std::size_t spent = 0;
        for (int r = 1; r <= spec.rounds; ++r) {
            Position p = initial();
            p.rounds = r;
            p.key.clear();
            finish(p);
            if (r < spec.rounds && !deepen) continue;
            last = solve_from(p);
            spent += last.expanded;
            if (last.outcome == Outcome::ForallWins) {
                last.note = "won within " + std::to_string(r) + " rounds";
                break;
            }
        }
        last.expanded = spent;
        if (spec.rounds == 0) last.outcome = Outcome::ExistsWins;
        return last;
    }

    bool deepen = true;

    Verdict solve_from(const Position& root) const {
        Verdict v;
        if (root.rounds <= 0) {
            v.outcome = Outcome::ExistsWins;
            return v;
        }
        std::vector<Move> moves;
        if (hint) moves = hint(*this, root);
        for (auto& mv : ordered_moves(root, nullptr))
            if (std::find(moves.begin(), moves.end(), mv) == moves.end()) moves.push_back(mv);
        if (moves.empty()) {
            v.outcome = Outcome::ExistsWins;
            return v;
        }
        // Each root move gets its own solver so results never depend on scheduling.
        std::vector<std::unique_ptr<Solver>> solvers(moves.size());
        std::vector<Outcome> res(moves.size(), Outcome::Unknown);
        // A solver whose move sorts after a known winner is abandoned; its
        // result is never read.
        std::atomic<std::size_t> best{moves.size()};
        std::size_t cut = parallel_first(moves.size(), std::max(1, spec.threads), [&](std::size_t i) {
            solvers[i] = std::make_unique<Solver>(*this);
            solvers[i]->cancel = &best;
            solvers[i]->index = i;
            res[i] = solvers[i]->move_value(root, moves[i]);
            if (res[i] != Outcome::ForallWins) return false;
            std::size_t b = best.load();
            while (i < b && !best.compare_exchange_weak(b, i)) {
            }
            return true;
        });
        bool unknown = false;
        for (std::size_t i = 0; i < moves.size() && i <= cut; ++i) {
            if (!solvers[i]) continue;
            v.expanded += solvers[i]->expanded;
            unknown = unknown || res[i] == Outcome::Unknown;
        }
        if (cut < moves.size()) {
            v.outcome = Outcome::ForallWins;
            v.certificate = solvers[cut]->extract_move(root, moves[cut]);
            return v;
        }
        v.outcome = unknown ? Outcome::Unknown : Outcome::ExistsWins;
        if (unknown) {
            v.note = "budget exhausted";
            return v;
        }
        // response table for ∃, capped
        const std::size_t cap = 4096;
        std::set<std::string> visited;
        for (std::size_t i = 0; i < moves.size() && !v.tableTruncated; ++i)
            solvers[i]->extract_table(root, moves[i], v.table, visited, cap, v.tableTruncated);
        return v;
    }

    // Replays a ForallWins certificate against freshly generated responses.
    bool replay(const CertNode& cert, std::string* why = nullptr) const { return replay_at(initial(), cert, why); }

    bool replay_at(const Position& p, const CertNode& c, std::string* why) const {
        auto fail = [&](const std::string& s) {
            if (why) *why = s;
            return false;
        };
        if (p.rounds <= 0) return fail("ran out of rounds");
        if (!is_legal(p, c.move)) return fail("illegal move " + move_str(c.move));
        auto rs = responses(p, c.move);
        if (rs.size() != c.responses.size()) return fail("response count mismatch at " + move_str(c.move));
        for (std::size_t k = 0; k < rs.size(); ++k) {
            if (rs[k].key != c.responses[k]) return fail("response mismatch at " + move_str(c.move));
            if (!replay_at(child(p, rs[k]), c.children[k], why)) return false;
        }
        return true;
    }

    // Rule-level legality, independent of the dominance pruning in move generation.
    bool is_legal(const Position& p, const Move& mv) const {
        if (mv.kind == Move::Atom) return p.nets.empty() && mv.a >= 0 && std::size_t(mv.a) < R.atom_count();
        if (p.nets.empty() || mv.net < 0 || mv.net >= int(p.nets.size())) return false;
        const Network& N = p.nets[mv.net];
        if (mv.kind == Move::Transform) {
            if (!spec.hyper() || int(mv.theta.size()) != N.m) return false;
            std::uint32_t img = 0;
            for (int v : mv.theta)
                if (v >= 0) {
                    if (!N.has(v) || (img >> v & 1u)) return false;
                    img |= 1u << v;
                }
            return img == N.nodes;
        }
        if (mv.kind == Move::Amalgam)
            return spec.hyper() && mv.net2 >= 0 && mv.net2 < int(p.nets.size()) && mv.net2 != mv.net && amalgamable(N, p.nets[mv.net2]);
        if (int(mv.tuple.size()) != R.arity()) return false;
        for (int v : mv.tuple)
            if (v < 0 || v >= N.m || !N.has(v)) return false;
        if (mv.slot < 0 || mv.slot >= N.m || mv.a < 0 || std::size_t(mv.a) >= R.atom_count()) return false;
        std::vector<int> avoid;
        if constexpr (std::is_same_v<Rules, RaRules>) {
            if (mv.b < 0 || std::size_t(mv.b) >= R.atom_count()) return false;
            if (!R.tri(Label(mv.a), Label(mv.b), N.edge(mv.tuple[0], mv.tuple[1]))) return false;
            avoid = mv.tuple;
        } else {
            if (mv.i < 0 || mv.i >= R.arity() || !R.s->eq[mv.i][N.get(mv.tuple)].test(std::size_t(mv.a))) return false;
            for (int j = 0; j < R.arity(); ++j)
                if (j != mv.i) avoid.push_back(mv.tuple[j]);
        }
        if (!N.has(mv.slot)) return true;
        return spec.reuse() && std::find(avoid.begin(), avoid.end(), mv.slot) == avoid.end();
    }

    std::string net_key(const Network& N) const { return spec.hyper() ? raw_key(N) : canonical_key(N); }

    bool is_ca() const { return !std::is_same_v<Rules, RaRules>; }

   private:
    const Rules& R;
    GameSpec spec;

    // ---------------------------------------------------- position keys

    std::string raw_key(const Network& N) const {
        return detail::Canon(N).encode(N.node_list()) + "|" + std::to_string(N.nodes);
    }

    void finish(Position& p) const {
        if (!spec.hyper()) {
            std::vector<std::pair<std::string, Network>> kv;
            for (auto& N : p.nets) kv.emplace_back(canonical_key(N), N);
            std::sort(kv.begin(), kv.end(), [](auto& x, auto& y) { return x.first < y.first; });
            kv.erase(std::unique(kv.begin(), kv.end(), [](auto& x, auto& y) { return x.first == y.first; }), kv.end());
            p.nets.clear();
            p.keys.clear();
            for (auto& [k, N] : kv) {
                p.keys.push_back(k);
                p.nets.push_back(N);
            }
            p.key.clear();
            for (auto& k : p.keys) p.key += "#" + k;
            return;
        }
        // H variants: canonical under one permutation of slots applied to all
        // networks at once, by brute force over slot permutations.
        std::vector<std::pair<std::string, Network>> kv;
        for (auto& N : p.nets) kv.emplace_back(raw_key(N), N);
        std::sort(kv.begin(), kv.end(), [](auto& x, auto& y) { return x.first < y.first; });
        kv.erase(std::unique(kv.begin(), kv.end(), [](auto& x, auto& y) { return x.first == y.first; }), kv.end());
        p.nets.clear();
        p.keys.clear();
        for (auto& [k, N] : kv) {
            p.keys.push_back(k);
            p.nets.push_back(N);
        }
        std::vector<int> perm(spec.nodes);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        bool have = false;
        do {
            std::vector<std::string> ks;
            for (auto& N : p.nets) ks.push_back(raw_key(apply_map(N, perm)));
            std::sort(ks.begin(), ks.end());
            std::string s;
            for (auto& k : ks) s += "#" + k;
            if (!have || s < best) {
                best = s;
                have = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        p.key = best;
    }

    int next_hyperlabel(const Position& p) const {
        int mx = 0;
        for (auto& N : p.nets)
            for (auto& [s, l] : N.hyper) mx = std::max(mx, l);
        return mx + 1;
    }

    // Long hyperedges of N not inherited from the move's source network(s)
    // receive fresh labels, least unused first.
    int label_new_hyperedges(const Position& p, const Move& mv, Network& N, int fresh) const {
        if (mv.kind == Move::Transform || mv.kind == Move::Atom) {
            if (mv.kind == Move::Atom)
                for (auto& seq : long_sequences(N, spec.hyperLen)) N.hyper[seq] = fresh++;
            return fresh;
        }
        std::map<std::vector<int>, int> keep;
        auto inherit = [&](const Network& src) {
            for (auto& [seq, l] : src.hyper) {
                bool inside = true;
                for (int v : seq) inside = inside && N.has(v) && src.has(v);
                if (inside) keep[seq] = l;
            }
        };
        if (mv.kind == Move::Cyl) {
            Network src = p.nets[mv.net];
            if (src.has(mv.slot)) src.remove_node(mv.slot);
            inherit(src);
        } else {
            inherit(p.nets[mv.net]);
            inherit(p.nets[mv.net2]);
        }
        N.hyper.clear();
        for (auto& seq : long_sequences(N, spec.hyperLen)) {
            auto it = keep.find(seq);
            N.hyper[seq] = it != keep.end() ? it->second : fresh++;
        }
        return fresh;
    }

    // ---------------------------------------------------- move generation

    std::vector<int> witness_slots(const Network& N, const std::vector<int>& avoid) const {
        std::vector<int> out;
        if (spec.hyper()) {
            for (int z = 0; z < N.m; ++z)
                if (!N.has(z)) out.push_back(z);
        } else if (int f = N.free_slot(); f >= 0) {
            out.push_back(f);  // free slots are interchangeable up to isomorphism
        }
        if (spec.reuse())
            for (int z : N.node_list())
                if (std::find(avoid.begin(), avoid.end(), z) == avoid.end()) out.push_back(z);
        return out;
    }

    bool witness_free(const Position& p, const Move& mv) const {
        if (mv.kind != Move::Cyl) return true;
        const Network& N = p.nets[mv.net];
        if constexpr (std::is_same_v<Rules, RaRules>) {
            for (int z : N.node_list())
                if (N.edge(mv.tuple[0], z) == mv.a && N.edge(z, mv.tuple[1]) == mv.b) return false;
            return true;
        } else {
            std::vector<int> t = mv.tuple;
            for (int z : N.node_list()) {
                t[mv.i] = z;
                if (N.get(t) == mv.a) return false;
            }
            return true;
        }
    }

    void cyl_moves(const Position& p, int k, std::vector<Move>& out) const {
        const Network& N = p.nets[k];
        auto V = N.node_list();
        if constexpr (std::is_same_v<Rules, RaRules>) {
            std::size_t A = R.atom_count();
            for (int x : V)
                for (int y : V) {
                    Label c = N.edge(x, y);
                    auto slots = witness_slots(N, {x, y});
                    if (slots.empty()) continue;
                    for (std::size_t a = 0; a < A; ++a)
                        for (std::size_t b = 0; b < A; ++b) {
                            if (!R.tri(Label(a), Label(b), c)) continue;
                            bool have = false;
                            for (int z : V) have = have || (N.edge(x, z) == a && N.edge(z, y) == b);
                            if (have) continue;  // dominated: ∃ answers with N itself
                            for (int z : slots) {
                                Move mv;
                                mv.kind = Move::Cyl;
                                mv.net = k;
                                mv.tuple = {x, y};
                                mv.a = int(a);
                                mv.b = int(b);
                                mv.slot = z;
                                out.push_back(mv);
                            }
                        }
                }
        } else {
            int n = R.arity();
            // A demand depends on x̄ only off coordinate i; fix x_i to the first node.
            std::vector<int> t(n, V[0]);
            std::size_t total = 1;
            for (int j = 0; j < n - 1; ++j) total *= V.size();
            for (int i = 0; i < n; ++i) {
                for (std::size_t c = 0; c < total; ++c) {
                    std::size_t x = c;
                    for (int j = n - 1; j >= 0; --j) {
                        if (j == i) {
                            t[j] = V[0];
                            continue;
                        }
                        t[j] = V[x % V.size()];
                        x /= V.size();
                    }
                    std::vector<int> avoid;
                    for (int j = 0; j < n; ++j)
                        if (j != i) avoid.push_back(t[j]);
                    auto slots = witness_slots(N, avoid);
                    if (slots.empty()) continue;
                    Label cur = N.get(t);
                    std::vector<int> u = t;
                    Bits seen(R.atom_count());
                    for (int z : V) {
                        u[i] = z;
                        seen.set(N.get(u));
                    }
                    for_each_bit(R.s->eq[i][cur], [&](std::size_t a) {
                        if (seen.test(a)) return;  // witness exists
                        for (int z : slots) {
                            Move mv;
                            mv.kind = Move::Cyl;
                            mv.net = k;
                            mv.i = i;
                            mv.tuple = t;
                            mv.a = int(a);
                            mv.slot = z;
                            out.push_back(mv);
                        }
                    });
                }
            }
        }
    }

    void transform_moves(const Position& p, int k, std::vector<Move>& out) const {
        const Network& N = p.nets[k];
        auto V = N.node_list();
        // injective θ onto nodes(N): choose the slot for each node
        std::vector<int> img(V.size());
        std::vector<char> used(N.m, 0);
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == V.size()) {
                std::vector<int> theta(N.m, -1);
                bool ident = true;
                for (std::size_t q = 0; q < V.size(); ++q) {
                    theta[img[q]] = V[q];
                    ident = ident && img[q] == V[q];
                }
                if (ident) return;  // response would be N again
                Move mv;
                mv.kind = Move::Transform;
                mv.net = k;
                mv.theta = theta;
                out.push_back(mv);
                return;
            }
            for (int s = 0; s < N.m; ++s) {
                if (used[s]) continue;
                used[s] = 1;
                img[j] = s;
                self(self, j + 1);
                used[s] = 0;
            }
        };
        rec(rec, 0);
    }

    bool amalgamable(const Network& M, const Network& N) const {
        std::uint32_t common = M.nodes & N.nodes;
        if (!common) return false;
        if ((M.nodes | N.nodes) == M.nodes || (M.nodes | N.nodes) == N.nodes) {
            // one side contains the other; only a genuine extension is useful
            if (M.nodes == N.nodes) return false;
        }
        for (std::size_t k = 0; k < M.lab.size(); ++k) {
            int t[8];
            M.decode(k, t);
            bool in = true;
            for (int i = 0; i < M.n; ++i) in = in && (common >> t[i] & 1u);
            if (in && M.lab[k] != N.lab[k]) return false;
        }
        auto inside = [&](const std::vector<int>& s) {
            for (int v : s)
                if (!(common >> v & 1u)) return false;
            return true;
        };
        for (auto& [s, l] : M.hyper)
            if (inside(s)) {
                auto it = N.hyper.find(s);
                if (it == N.hyper.end() || it->second != l) return false;
            }
        for (auto& [s, l] : N.hyper)
            if (inside(s) && !M.hyper.count(s)) return false;
        return true;
    }

    // ---------------------------------------------------- responses

    std::vector<Network> atom_responses(const Move& mv) const {
        std::vector<Network> out;
        Network N(R.arity(), spec.nodes);
        if constexpr (std::is_same_v<Rules, RaRules>) {
            if (spec.nodes < 2) return out;
            N.add_node(0);
            N.add_node(1);
            N.lab[1] = Label(mv.a);
            complete(R, N, [&](const Network& M) { out.push_back(M); });
        } else {
            int n = R.arity();
            std::vector<int> t(n);
            int next = 0;
            for (int j = 0; j < n; ++j) {
                t[j] = -1;
                for (int i = 0; i < j; ++i)
                    if (R.s->D(i, j).test(std::size_t(mv.a))) {
                        t[j] = t[i];
                        break;
                    }
                if (t[j] < 0) t[j] = next++;
            }
            if (next > spec.nodes) return out;
            for (int v = 0; v < next; ++v) N.add_node(v);
            N.set(t, Label(mv.a));
            complete(R, N, [&](const Network& M) { out.push_back(M); });
        }
        return out;
    }

    std::vector<Network> cyl_responses(const Position& p, const Move& mv) const {
        std::vector<Network> out;
        Network N = p.nets[mv.net];
        if (!witness_free(p, mv)) {
            out.push_back(N);
            return out;
        }
        if (N.has(mv.slot)) N.remove_node(mv.slot);
        N.hyper.clear();
        N.add_node(mv.slot);
        int z = mv.slot;
        if constexpr (std::is_same_v<Rules, RaRules>) {
            int x = mv.tuple[0], y = mv.tuple[1];
            std::size_t M = std::size_t(N.m);
            N.lab[x * M + z] = Label(mv.a);
            N.lab[z * M + x] = Label(R.s->converse[mv.a]);
            if (N.lab[z * M + y] != kUnset && N.lab[z * M + y] != mv.b) return out;
            N.lab[z * M + y] = Label(mv.b);
            N.lab[y * M + z] = Label(R.s->converse[mv.b]);
            if (x == y && Label(R.s->converse[mv.a]) != mv.b) return out;
        } else {
            std::vector<int> t = mv.tuple;
            t[mv.i] = z;
            N.set(t, Label(mv.a));
        }
        complete(R, N, [&](const Network& M) { out.push_back(M); });
        return out;
    }

    std::vector<Network> amalgam_responses(const Position& p, const Move& mv) const {
        const Network& A = p.nets[mv.net];
        const Network& B = p.nets[mv.net2];
        Network L(A.n, A.m);
        L.nodes = A.nodes | B.nodes;
        for (std::size_t k = 0; k < L.lab.size(); ++k) L.lab[k] = A.lab[k] != kUnset ? A.lab[k] : B.lab[k];
        std::vector<Network> out;
        complete(R, L, [&](const Network& M) { out.push_back(M); });
        return out;
    }

   public:
    // Moves in solver order: hinted first, then the rest by fewest ∃ answers.
    // When `cache` is given, computed response lists are stored there.
    // Moves with identical response sets are interchangeable; only the first is kept.
    std::vector<Move> ordered_moves(const Position& p, std::vector<std::vector<Response>>* cache) const {
        std::vector<Move> all = legal_forall_moves(p);
        std::vector<Move> moves;
        std::vector<std::vector<Response>> resp;
        std::set<std::string> sigs;
        for (auto& mv : all) {
            auto rs = responses(p, mv);
            std::string sig;
            for (auto& r : rs) sig += "#" + r.key;
            if (!sigs.insert(sig).second) continue;
            moves.push_back(mv);
            resp.push_back(std::move(rs));
        }
        std::vector<std::size_t> idx(moves.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return resp[x].size() < resp[y].size(); });
        std::vector<Move> out;
        std::vector<std::vector<Response>> outResp;
        for (auto k : idx) {
            out.push_back(moves[k]);
            outResp.push_back(std::move(resp[k]));
        }
        if (cache) *cache = std::move(outResp);
        return out;
    }

   private:
    struct Solver {
        // Monotone bounds per position: ∃ wins with at most existsUpTo rounds
        // left, ∀ wins with at least forallFrom rounds left.
        struct Bounds {
            int existsUpTo = 0;
            int forallFrom = INT32_MAX;
        };
        const Game& g;
        std::unordered_map<std::string, Bounds> memo;
        std::size_t expanded = 0;
        bool exhausted = false;
        const std::atomic<std::size_t>* cancel = nullptr;
        std::size_t index = 0;

        explicit Solver(const Game& game) : g(game) {}

        Outcome lookup(const Position& p) const {
            if (p.rounds <= 0) return Outcome::ExistsWins;
            auto it = memo.find(p.key);
            if (it == memo.end()) return Outcome::Unknown;
            if (p.rounds <= it->second.existsUpTo) return Outcome::ExistsWins;
            if (p.rounds >= it->second.forallFrom) return Outcome::ForallWins;
            return Outcome::Unknown;
        }

        // Value of a ∀ move at p: ForallWins iff every response loses for ∃.
        Outcome move_value(const Position& p, const Move& mv) { return responses_value(p, g.responses(p, mv)); }

        Outcome responses_value(const Position& p, const std::vector<Response>& rs) {
            bool unknown = false;
            for (auto& r : rs) {
                Outcome o = value(g.child(p, r));
                if (o == Outcome::ExistsWins) return Outcome::ExistsWins;
                unknown = unknown || o == Outcome::Unknown;
                if (exhausted) {  // out of budget: stop rather than scan the rest
                    unknown = true;
                    break;
                }
            }
            return unknown ? Outcome::Unknown : Outcome::ForallWins;
        }

        Outcome value(const Position& p) {
            Outcome known = lookup(p);
            if (known != Outcome::Unknown) return known;
            if (expanded >= g.spec.budget || (cancel && cancel->load(std::memory_order_relaxed) < index)) {
                exhausted = true;
                return Outcome::Unknown;
            }
            ++expanded;
            Outcome res = Outcome::ExistsWins;
            bool unknown = false;
            bool done = false;
            if (g.hint) {
                for (auto& mv : g.hint(g, p)) {
                    if (move_value(p, mv) == Outcome::ForallWins) {
                        res = Outcome::ForallWins;
                        done = true;
                        break;
                    }
                }
            }
            if (!done) {
                std::vector<std::vector<Response>> rs;
                auto moves = g.ordered_moves(p, &rs);
                for (std::size_t k = 0; k < moves.size(); ++k) {
                    Outcome o = responses_value(p, rs[k]);
                    if (o == Outcome::ForallWins) {
                        res = o;
                        done = true;
                        break;
                    }
                    unknown = unknown || o == Outcome::Unknown;
                    if (exhausted) {
                        unknown = true;
                        break;
                    }
                }
                if (!done && unknown) res = Outcome::Unknown;
            }
            Bounds& bd = memo[p.key];
            if (res == Outcome::ExistsWins) bd.existsUpTo = std::max(bd.existsUpTo, p.rounds);
            if (res == Outcome::ForallWins) bd.forallFrom = std::min(bd.forallFrom, p.rounds);
            return res;
        }

        bool known_loss(const Position& c) const { return lookup(c) == Outcome::ForallWins; }

        CertNode extract_move(const Position& p, const Move& mv) const {
            CertNode node;
            node.move = mv;
            for (auto& r : g.responses(p, mv)) {
                node.responses.push_back(r.key);
                node.children.push_back(extract(g.child(p, r)));
            }
            return node;
        }

        // Deterministic: first winning move in solver order.
        CertNode extract(const Position& p) const {
            auto winning = [&](const std::vector<Response>& rs) {
                for (auto& r : rs)
                    if (!known_loss(g.child(p, r))) return false;
                return true;
            };
            if (g.hint) {
                for (auto& mv : g.hint(g, p))
                    if (winning(g.responses(p, mv))) return extract_move(p, mv);
            }
            std::vector<std::vector<Response>> rs;
            auto moves = g.ordered_moves(p, &rs);
            for (std::size_t k = 0; k < moves.size(); ++k)
                if (winning(rs[k])) return extract_move(p, moves[k]);
            throw std::logic_error("certificate extraction found no winning move");
        }

        void extract_table(const Position& p, const Move& mv, std::vector<ExistsEntry>& table, std::set<std::string>& visited,
                           std::size_t cap, bool& truncated) const {
            if (truncated) return;
            for (auto& r : g.responses(p, mv)) {
                Position c = g.child(p, r);
                if (lookup(c) != Outcome::ExistsWins) continue;
                if (table.size() >= cap) {
                    truncated = true;
                    return;
                }
                table.push_back({digest(std::to_string(p.rounds) + p.key), g.move_str(mv), digest(r.key)});
                std::string ck = std::to_string(c.rounds) + c.key;
                if (c.rounds > 0 && visited.insert(ck).second)
                    for (auto& m2 : g.ordered_moves(c, nullptr)) extract_table(c, m2, table, visited, cap, truncated);
                return;
            }
        }
    };
};

// k ↦ verdict of G(maxNodes, k) for k = 1..maxK.
template <class Rules>
std::vector<Verdict> lyndon_battery(const Rules& R, int maxK, int maxNodes, std::size_t budget = 2'000'000, int threads = 1) {
    std::vector<Verdict> out;
    for (int k = 1; k <= maxK; ++k) {
        GameSpec s;
        s.variant = Variant::G;
        s.nodes = maxNodes;
        s.rounds = k;
        s.budget = budget;
        s.threads = threads;
        out.push_back(Game<Rules>(R, s).solve());
    }
    return out;
}

}  // namespace alw
