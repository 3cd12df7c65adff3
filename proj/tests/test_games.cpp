#include "alw/constructions.hpp"
#include "alw/ef.hpp"
#include "alw/games.hpp"
#include "alw/oracle.hpp"
#include "alw/strategies.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace alw;

namespace {

RaAtomStructure trivial_ra() {
    RaAtomStructure s({AtomTag("Id")});
    s.identity.set(0);
    return s;
}

GameSpec spec_of(Variant v, int m, int k, int threads = 1) {
    GameSpec s;
    s.variant = v;
    s.nodes = m;
    s.rounds = k;
    s.threads = threads;
    return s;
}

// Plain minimax over pebble placements, no memo and no position folding.
// Pebbles are numbered; ∀ may move any pebble (placed or not) on either side.
bool naive_ef_exists_wins(const Graph& A, const Graph& B, int p, std::vector<std::pair<int, int>>& peb, int left) {
    if (left == 0) return true;
    for (int i = 0; i < p; ++i)
        for (int side = 0; side < 2; ++side)
            for (int x = 0; x < (side ? B.n : A.n); ++x) {
                bool answered = false;
                auto saved = peb[i];
                for (int y = 0; y < (side ? A.n : B.n) && !answered; ++y) {
                    peb[i] = side ? std::make_pair(y, x) : std::make_pair(x, y);
                    bool iso = true;
                    for (int u = 0; u < p && iso; ++u)
                        for (int v = 0; v < p && iso; ++v) {
                            if (peb[u].first < 0 || peb[v].first < 0) continue;
                            iso = (peb[u].first == peb[v].first) == (peb[u].second == peb[v].second) &&
                                  A.edge(peb[u].first, peb[v].first) == B.edge(peb[u].second, peb[v].second);
                        }
                    answered = iso && naive_ef_exists_wins(A, B, p, peb, left - 1);
                }
                peb[i] = saved;
                if (!answered) return false;
            }
    return true;
}

}  // namespace

TEST(Moves, OpeningOffersEveryAtom) {
    auto s = monk_ra(2, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::G, 3, 3));
    EXPECT_EQ(g.legal_forall_moves(g.initial()).size(), s.size());
}

TEST(Moves, WitnessDemandsAfterAGreenEdgeMatchTripleCount) {
    auto s = monk_ra(2, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::G, 3, 3));
    int g0 = s.at(AtomTag("g0", {0}));
    Move open;
    open.a = g0;
    auto rs = g.responses(g.initial(), open);
    ASSERT_EQ(rs.size(), 1u);
    Position p = g.child(g.initial(), rs[0]);
    const Network& N = p.nets[0];
    // count by hand: every edge (x, y) and atoms (a, b) with (a, b, N(x,y))
    // consistent and no witness among the two nodes; one free slot
    std::size_t want = 0;
    bool greenWitness = false;
    auto V = N.node_list();
    for (int x : V)
        for (int y : V)
            for (int a = 0; a < int(s.size()); ++a)
                for (int b = 0; b < int(s.size()); ++b) {
                    if (!s.consistent(a, b, N.edge(x, y))) continue;
                    bool have = false;
                    for (int z : V) have = have || (N.edge(x, z) == a && N.edge(z, y) == b);
                    if (have) continue;
                    ++want;
                    greenWitness = greenWitness || s.atoms[a].kind == "g0";
                }
    auto moves = g.legal_forall_moves(p);
    EXPECT_EQ(moves.size(), want);
    EXPECT_TRUE(greenWitness);
    bool found = false;
    for (auto& mv : moves) found = found || (mv.kind == Move::Cyl && s.atoms[mv.a].kind == "g0");
    EXPECT_TRUE(found);
}

TEST(Moves, AmalgamationOfferedInHyperGame) {
    auto s = monk_ra(1, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::H, 4, 4));
    Move open;
    open.a = s.at(AtomTag("g0", {0}));
    Position p = g.child(g.initial(), g.responses(g.initial(), open)[0]);
    Move demand;
    for (auto& mv : g.legal_forall_moves(p))
        if (mv.kind == Move::Cyl) {
            demand = mv;
            break;
        }
    ASSERT_EQ(demand.kind, Move::Cyl);
    auto rs = g.responses(p, demand);
    ASSERT_FALSE(rs.empty());
    Position q = g.child(p, rs[0]);
    ASSERT_EQ(q.nets.size(), 2u);
    bool amalgam = false, transform = false;
    for (auto& mv : g.legal_forall_moves(q)) {
        amalgam = amalgam || mv.kind == Move::Amalgam;
        transform = transform || mv.kind == Move::Transform;
    }
    EXPECT_TRUE(amalgam);
    EXPECT_TRUE(transform);
}

TEST(Responses, TransformationHasExactlyOneAnswer) {
    auto s = monk_ra(1, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::H, 4, 4));
    Move open;
    open.a = s.at(AtomTag("g0", {0}));
    Position p = g.child(g.initial(), g.responses(g.initial(), open)[0]);
    int seen = 0;
    for (auto& mv : g.legal_forall_moves(p))
        if (mv.kind == Move::Transform) {
            EXPECT_EQ(g.responses(p, mv).size(), 1u);
            ++seen;
        }
    EXPECT_GT(seen, 0);
}

TEST(Responses, PresentWitnessKeepsNetworkAvailable) {
    auto s = monk_ra(1, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::G, 3, 3));
    int id = s.at(AtomTag("Id")), gr = s.at(AtomTag("g0", {0}));
    Move open;
    open.a = gr;
    Position p = g.child(g.initial(), g.responses(g.initial(), open)[0]);
    // (Id; g) ∋ g and node 0 is already a witness
    Move mv;
    mv.kind = Move::Cyl;
    mv.net = 0;
    mv.tuple = {0, 1};
    mv.a = id;
    mv.b = gr;
    mv.slot = 2;
    auto rs = g.responses(p, mv);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0].key, p.keys[0]);
}

TEST(Solve, TrivialStructureExistsWins) {
    auto s = trivial_ra();
    RaRules R(s);
    for (int k : {1, 3, 6}) EXPECT_EQ(Game<RaRules>(R, spec_of(Variant::G, 4, k)).solve().outcome, Outcome::ExistsWins);
}

TEST(Solve, MonkThreeOneForallWinsWithReplayableCertificate) {
    auto s = monk_ra(3, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::G, 5, 6));
    Verdict v = g.solve();
    ASSERT_EQ(v.outcome, Outcome::ForallWins);
    ASSERT_TRUE(v.certificate);
    std::string why;
    EXPECT_TRUE(g.replay(*v.certificate, &why)) << why;
    EXPECT_LE(v.certificate->depth(), 6u);
}

TEST(Solve, TamperedCertificateIsRejected) {
    auto s = monk_ra(3, 1);
    RaRules R(s);
    Game<RaRules> g(R, spec_of(Variant::G, 5, 6));
    Verdict v = g.solve();
    ASSERT_TRUE(v.certificate);
    CertNode bad = *v.certificate;
    bad.move.a = (bad.move.a + 1) % int(s.size());
    EXPECT_FALSE(g.replay(bad));
    CertNode cut = *v.certificate;
    cut.responses.clear();
    cut.children.clear();
    EXPECT_FALSE(g.replay(cut));
}

TEST(Solve, ThreadCountDoesNotChangeVerdictOrCertificate) {
    auto s = monk_ra(3, 1);
    RaRules R(s);
    Verdict a = Game<RaRules>(R, spec_of(Variant::G, 5, 6, 1)).solve();
    Verdict b = Game<RaRules>(R, spec_of(Variant::G, 5, 6, 4)).solve();
    ASSERT_EQ(a.outcome, b.outcome);
    ASSERT_TRUE(a.certificate && b.certificate);
    EXPECT_EQ(a.certificate->responses, b.certificate->responses);
    EXPECT_EQ(a.certificate->move, b.certificate->move);
    EXPECT_EQ(a.expanded, b.expanded);
}

TEST(Solve, BudgetExhaustionIsUnknown) {
    auto s = monk_ra(3, 1);
    RaRules R(s);
    GameSpec sp = spec_of(Variant::G, 5, 6);
    sp.budget = 1;
    EXPECT_EQ(Game<RaRules>(R, sp).solve().outcome, Outcome::Unknown);
    // a little more budget may already settle it; then the win must replay
    sp.budget = 3;
    Verdict v = Game<RaRules>(R, sp).solve();
    EXPECT_NE(v.outcome, Outcome::ExistsWins);
    if (v.outcome == Outcome::ForallWins) {
        std::string why;
        ASSERT_TRUE(v.certificate);
        EXPECT_TRUE(Game<RaRules>(R, sp).replay(*v.certificate, &why)) << why;
    } else {
        EXPECT_EQ(v.outcome, Outcome::Unknown);
    }
}

TEST(Solve, ExistsWinComesWithResponseTable) {
    auto s = monk_ra(1, 1);
    RaRules R(s);
    Verdict v = Game<RaRules>(R, spec_of(Variant::G, 4, 4)).solve();
    ASSERT_EQ(v.outcome, Outcome::ExistsWins);
    EXPECT_FALSE(v.table.empty());
}

TEST(Solve, RainbowBoldGForallWins) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    RainbowGame g(R, spec_of(Variant::BoldG, 6, 6));
    g.hint = cone_hint(rs);
    g.deepen = false;
    Verdict v = g.solve();
    ASSERT_EQ(v.outcome, Outcome::ForallWins);
    std::string why;
    ASSERT_TRUE(v.certificate);
    EXPECT_TRUE(g.replay(*v.certificate, &why)) << why;
}

// Winning for ∀ is monotone in rounds: more rounds never hurt him.
TEST(Solve, ForallWinsAreMonotoneInRounds) {
    auto s = monk_ra(3, 1);
    RaRules R(s);
    bool won = false;
    for (int k = 1; k <= 6; ++k) {
        bool w = Game<RaRules>(R, spec_of(Variant::G, 5, k)).solve().outcome == Outcome::ForallWins;
        EXPECT_TRUE(!won || w) << k;
        won = won || w;
    }
    EXPECT_TRUE(won);
}

TEST(Lyndon, TrivialStructureAlwaysExistsWins) {
    auto s = trivial_ra();
    for (auto& v : lyndon_battery(RaRules(s), 5, 4)) EXPECT_EQ(v.outcome, Outcome::ExistsWins);
}

TEST(Lyndon, MonkThreeOneForallFromSomeK) {
    auto s = monk_ra(3, 1);
    auto vs = lyndon_battery(RaRules(s), 6, 5);
    bool any = false;
    for (auto& v : vs) any = any || v.outcome == Outcome::ForallWins;
    EXPECT_TRUE(any);
}

// monk_ra(2,1) is not a relation algebra (associativity fails), so ∃ cannot
// keep playing forever; the battery shows ∀ winning at small k.
TEST(Lyndon, MonkTwoOneIsWonByForall) {
    auto s = monk_ra(2, 1);
    auto vs = lyndon_battery(RaRules(s), 6, 5);
    EXPECT_EQ(vs.back().outcome, Outcome::ForallWins);
}

// The split algebras are representable, so ∃ survives every finite game.
TEST(Lyndon, RepresentableSplitAlgebraExistsWins) {
    auto s = split_ra(1, 2);
    for (auto& v : lyndon_battery(RaRules(s), 4, 4)) EXPECT_EQ(v.outcome, Outcome::ExistsWins);
}

TEST(Ef, IdenticalStructuresExistsWins) {
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= 4; ++p)
            for (int r = 0; r <= 4; ++r) EXPECT_EQ(ef_solve(complete_graph(n), complete_graph(n), p, r).outcome, Outcome::ExistsWins);
}

TEST(Ef, K4VersusK3) {
    EXPECT_EQ(ef_solve(complete_graph(4), complete_graph(3), 4, 4).outcome, Outcome::ForallWins);
    for (int r = 0; r <= 8; ++r) EXPECT_EQ(ef_solve(complete_graph(4), complete_graph(3), 3, r).outcome, Outcome::ExistsWins);
}

TEST(Ef, AgreesWithNaiveMinimax) {
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= 4; ++p)
            for (int r = 0; r <= 4; ++r) {
                Graph A = complete_graph(n + 1), B = complete_graph(n);
                std::vector<std::pair<int, int>> peb(p, {-1, -1});
                bool naive = naive_ef_exists_wins(A, B, p, peb, r);
                EXPECT_EQ(ef_solve(A, B, p, r).outcome == Outcome::ExistsWins, naive) << n << " " << p << " " << r;
            }
}

TEST(Ef, GraphNamesParse) {
    EXPECT_EQ(parse_graph("K4").n, 4);
    EXPECT_THROW(parse_graph("C4"), std::invalid_argument);
    EXPECT_THROW(parse_graph("K4x"), std::invalid_argument);
}
