#include "alw/strategies.hpp"

#include <gtest/gtest.h>

using namespace alw;

namespace {

OrderedBoard fresh_board(int greens = 28, int pool = 27) {
    OrderedBoard b(greens, pool);
    b.col[0][1] = b.col[1][0] = {OrderedBoard::W0, 0, 0};
    return b;
}

}  // namespace

TEST(Rho, FirstConeGetsFreshWitnessAndOnePoint) {
    RhoBook book;
    auto [b, nb] = exists_rainbow_move(fresh_board(), 5, book);
    EXPECT_EQ(b.nodes, 3);
    EXPECT_EQ(nb.rho.size(), 1u);
    EXPECT_EQ(nb.played, 1);
    EXPECT_EQ(b.col[0][2].kind, OrderedBoard::G0);
    EXPECT_EQ(b.col[0][2].i, 5);
    EXPECT_TRUE(b.check().ok());
    EXPECT_TRUE(nb.check().ok());
}

TEST(Rho, TwoConesAreJoinedByTheMatchingRed) {
    RhoBook book;
    auto [b1, k1] = exists_rainbow_move(fresh_board(), 3, book);
    auto [b2, k2] = exists_rainbow_move(b1, 9, k1);
    ASSERT_EQ(b2.nodes, 4);
    const auto& e = b2.col[2][3];
    EXPECT_EQ(e.kind, OrderedBoard::Red);
    EXPECT_EQ(e.i, k2.rho.at(3));
    EXPECT_EQ(e.j, k2.rho.at(9));
    EXPECT_LT(e.i, e.j);
    EXPECT_TRUE(b2.check().ok());
}

TEST(Rho, RedTrianglesThroughASharedTintCompose) {
    RhoBook book;
    OrderedBoard b = fresh_board();
    for (int t : {4, 1, 7}) std::tie(b, book) = exists_rainbow_move(b, t, book);
    // apexes 2,3,4 carry tints 4,1,7; (p,t,q) red triangle indices must chain
    for (int x = 2; x < b.nodes; ++x)
        for (int y = 2; y < b.nodes; ++y)
            for (int z = 2; z < b.nodes; ++z) {
                if (x == y || y == z || x == z) continue;
                EXPECT_TRUE(OrderedBoard::triangle_ok(b.col[x][y], b.col[y][z], b.col[x][z]));
            }
    EXPECT_TRUE(b.check().ok());
}

TEST(Rho, RepeatedTintReusesWitness) {
    RhoBook book;
    auto [b1, k1] = exists_rainbow_move(fresh_board(), 3, book);
    auto [b2, k2] = exists_rainbow_move(b1, 3, k1);
    EXPECT_EQ(b2.nodes, b1.nodes);
    EXPECT_EQ(k2.rho, k1.rho);
}

TEST(Rho, GapShrinksByThreeEachRound) {
    RhoBook book;
    book.rounds = 3;
    EXPECT_EQ(book.gap(), 27);
    book.played = 1;
    EXPECT_EQ(book.gap(), 9);
    book.played = 3;
    EXPECT_EQ(book.gap(), 1);
}

TEST(Rho, BookCheckFlagsOrderAndGap) {
    RhoBook book;
    book.rounds = 2;
    book.played = 1;
    book.rho = {{1, 5}, {2, 4}};
    EXPECT_TRUE(book.check().has("order"));
    book.rho = {{1, 5}, {2, 6}};
    EXPECT_TRUE(book.check().has("gap"));
    book.rho = {{1, 5}, {2, 40}};
    EXPECT_TRUE(book.check().has("pool"));
}

TEST(Rho, SurvivesEveryLineWithPool27) {
    auto s = exists_rainbow_survives(28, 27, 3);
    EXPECT_TRUE(s.survived) << s.failure;
    EXPECT_GT(s.lines, 0u);
}

TEST(Rho, SmallPoolRunsOut) {
    auto s = exists_rainbow_survives(28, 8, 3);
    EXPECT_FALSE(s.survived);
    EXPECT_NE(s.failure.find("after tints"), std::string::npos);
}

TEST(Rho, TraceIsDeterministic) {
    auto a = exists_rainbow_survives(10, 27, 3, true), b = exists_rainbow_survives(10, 27, 3, true);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.lines, b.lines);
}

TEST(Cones, ScriptedForallBeatsEveryAnswer) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    GameSpec sp;
    sp.variant = Variant::BoldG;
    sp.nodes = 6;
    sp.rounds = 6;
    RainbowGame g(R, sp);
    auto a = forall_cone_strategy(rs, g);
    ASSERT_TRUE(a.won);
    ASSERT_TRUE(a.certificate);
    std::string why;
    EXPECT_TRUE(g.replay(*a.certificate, &why)) << why;
    auto b = forall_cone_strategy(rs, g);
    EXPECT_EQ(a.trace, b.trace);
}

TEST(Cones, TooFewRoundsIsNoWin) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    GameSpec sp;
    sp.variant = Variant::BoldG;
    sp.nodes = 6;
    sp.rounds = 2;
    RainbowGame g(R, sp);
    EXPECT_FALSE(forall_cone_strategy(rs, g).won);
}

TEST(Cones, OpeningIsTheTintZeroCone) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    GameSpec sp;
    sp.variant = Variant::BoldG;
    sp.nodes = 6;
    sp.rounds = 6;
    RainbowGame g(R, sp);
    auto mv = forall_cone_moves(rs, g, g.initial());
    ASSERT_EQ(mv.size(), 1u);
    EXPECT_EQ(mv[0].kind, Move::Atom);
    EXPECT_EQ(rs.colour(mv[0].a, 0, 1), rs.rules.white(0));
    EXPECT_EQ(rs.colour(mv[0].a, 0, 2), rs.rules.green0(0));
}

TEST(Partition, EmptyBookAcceptsAnyElement) {
    SplitPair sp(1, 2, 3);
    PartitionBook book;
    book.rounds = 2;
    Bits x = full_bits(sp.left.size());
    Bits y = exists_ef_partition_move(sp, book, 0, x);
    EXPECT_EQ(book.played(), 1);
    EXPECT_EQ(y, full_bits(sp.right.size()));
    EXPECT_TRUE(book.check(sp).ok());
}

TEST(Partition, DisjointAtomIsMirrored) {
    SplitPair sp(2, 2, 3);
    PartitionBook book;
    book.rounds = 2;
    Bits x(sp.left.size());
    std::size_t a = 0;
    while (sp.splitL.test(a)) ++a;
    x.set(a);
    Bits y = exists_ef_partition_move(sp, book, 0, x);
    Bits want(sp.right.size());
    want.set(std::size_t(sp.toRight[a]));
    EXPECT_EQ(y, want);
}

TEST(Partition, TwoCopiesAnswerTwoCopies) {
    SplitPair sp(1, 3, 4);
    PartitionBook book;
    book.rounds = 1;
    Bits x(sp.left.size());
    auto copies = bit_list(sp.splitL);
    x.set(copies[0]);
    x.set(copies[1]);
    Bits y = exists_ef_partition_move(sp, book, 0, x);
    EXPECT_EQ((y & sp.splitR).count(), 2u);
    EXPECT_TRUE(book.check(sp).ok());
}

TEST(Partition, SurvivesLargeEnoughSplits) {
    auto s = exists_ef_partition_survives(SplitPair(1, 4, 5), 2);
    EXPECT_TRUE(s.survived) << s.failure;
}

TEST(Partition, FailsOnSmallSplits) {
    auto s = exists_ef_partition_survives(SplitPair(1, 2, 3), 2);
    EXPECT_FALSE(s.survived);
}

TEST(Partition, PartialIsoOnIdenticalSidesHolds) {
    SplitPair sp(2, 2, 2);
    std::vector<Bits> xs{sp.splitL, sp.A.identity, ~sp.splitL};
    std::vector<Bits> ys{sp.splitR, sp.B.identity, ~sp.splitR};
    std::string why;
    EXPECT_TRUE(ef_partial_iso(sp.A, xs, sp.B, ys, &why)) << why;
}

TEST(Partition, PartialIsoDetectsCompositionMismatch) {
    SplitPair sp(1, 1, 2);
    std::vector<Bits> xs{sp.splitL}, ys{sp.splitR};
    Bits sl = ra_compose(sp.A, sp.splitL, sp.splitL), sr = ra_compose(sp.B, sp.splitR, sp.splitR);
    // whenever x;x = x holds on one side only, the pair is not a partial isomorphism
    if ((sl == sp.splitL) != (sr == sp.splitR)) {
        EXPECT_FALSE(ef_partial_iso(sp.A, xs, sp.B, ys));
    }
    std::vector<Bits> x2{sp.splitL, sl}, y2{sp.splitR, sr};
    // composing the pebbled element with itself lands on the second pebble on both sides
    std::string why;
    bool iso = ef_partial_iso(sp.A, x2, sp.B, y2, &why);
    if (!iso) {
        EXPECT_FALSE(why.empty());
    }
}
