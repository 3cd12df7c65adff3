#pragma once

#include "alw/games.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alw {

// Finite structure with one binary relation.
struct Graph {
    int n = 0;
    std::vector<std::uint8_t> adj;  // n*n
    std::string name;

    explicit Graph(int size = 0, std::string nm = {}) : n(size), adj(std::size_t(size) * size, 0), name(std::move(nm)) {}
    bool edge(int x, int y) const { return adj[std::size_t(x) * n + y]; }
    void set(int x, int y, bool v = true) { adj[std::size_t(x) * n + y] = v; }
};

inline Graph complete_graph(int n) {
    Graph g(n, "K" + std::to_string(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) g.set(x, y);
    return g;
}

// "K4" etc.
inline Graph parse_graph(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'K' && s[0] != 'k')) throw std::invalid_argument("expected a complete graph such as K4, got " + s);
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(s.substr(1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad graph size in " + s);
    }
    if (used + 1 != s.size() || n < 0 || n > 64) throw std::invalid_argument("bad graph size in " + s);
    return complete_graph(n);
}

// p-pebble, r-round forth-and-back game. A position is the set of distinct
// pebbled pairs: a pebble sitting on a repeated pair is as good as a free one,
// so only the set matters, together with the rounds left.
class EfGame {
   public:
    EfGame(const Graph& a, const Graph& b, int pebbles, int rounds) : A(a), B(b), p(pebbles), r(rounds) {
        if (pebbles < 0 || rounds < 0) throw std::invalid_argument("pebbles and rounds must be non-negative");
    }

    using Pairs = std::vector<std::pair<int, int>>;

    bool partial_iso(const Pairs& s) const {
        for (auto& [a1, b1] : s)
            for (auto& [a2, b2] : s) {
                if ((a1 == a2) != (b1 == b2)) return false;
                if (A.edge(a1, a2) != B.edge(b1, b2)) return false;
            }
        return true;
    }

    Verdict solve() {
        Verdict v;
        memo.clear();
        expanded = 0;
        bool win = exists_wins({}, r);
        v.outcome = win ? Outcome::ExistsWins : Outcome::ForallWins;
        v.expanded = expanded;
        if (!win) v.note = "forall wins within " + std::to_string(shortest_win()) + " rounds";
        return v;
    }

    // Least number of rounds in which ∀ wins (r + 1 if he does not).
    int shortest_win() {
        for (int k = 0; k <= r; ++k)
            if (!exists_wins({}, k)) return k;
        return r + 1;
    }

    std::size_t expanded = 0;

   private:
    const Graph &A, &B;
    int p, r;
    std::map<std::pair<Pairs, int>, bool> memo;

    static Pairs with(Pairs s, std::pair<int, int> x) {
        if (std::find(s.begin(), s.end(), x) == s.end()) {
            s.push_back(x);
            std::sort(s.begin(), s.end());
        }
        return s;
    }

    // ∃ to survive `left` more rounds from the (consistent) pebble set s.
    bool exists_wins(const Pairs& s, int left) {
        if (left == 0) return true;
        auto key = std::make_pair(s, left);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        ++expanded;
        bool win = true;
        // ∀ either places a spare pebble (kept = s) or lifts the pebble on one pair
        std::vector<Pairs> bases;
        if (int(s.size()) < p) bases.push_back(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            Pairs t = s;
            t.erase(t.begin() + i);
            bases.push_back(t);
        }
        if (p == 0) bases.clear();
        for (auto& base : bases) {
            for (int side = 0; side < 2 && win; ++side) {
                int n = side == 0 ? A.n : B.n;
                for (int x = 0; x < n && win; ++x) {
                    bool answered = false;
                    int m = side == 0 ? B.n : A.n;
                    for (int y = 0; y < m && !answered; ++y) {
                        auto pr = side == 0 ? std::make_pair(x, y) : std::make_pair(y, x);
                        Pairs t = with(base, pr);
                        if (partial_iso(t) && exists_wins(t, left - 1)) answered = true;
                    }
                    if (!answered) win = false;
                }
            }
            if (!win) break;
        }
        memo[key] = win;
        return win;
    }
};

inline Verdict ef_solve(const Graph& a, const Graph& b, int pebbles, int rounds) {
    EfGame g(a, b, pebbles, rounds);
    return g.solve();
}

}  // namespace alw
