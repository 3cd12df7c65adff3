#include "alw/constructions.hpp"
#include "alw/network.hpp"
#include "alw/rainbow.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace alw;

namespace {

Network edge_net(int m, const std::vector<std::vector<Label>>& rows) {
    Network N(2, m);
    for (int x = 0; x < int(rows.size()); ++x) N.add_node(x);
    for (int x = 0; x < int(rows.size()); ++x)
        for (int y = 0; y < int(rows.size()); ++y) N.set({x, y}, rows[x][y]);
    return N;
}

Network random_net(std::mt19937& rng, int nodes, int slots, int atoms) {
    Network N(2, slots);
    for (int x = 0; x < nodes; ++x) N.add_node(x);
    for (int x = 0; x < nodes; ++x)
        for (int y = 0; y < nodes; ++y) N.set({x, y}, Label(rng() % atoms));
    return N;
}

// Brute force: some permutation of the live nodes carries one labelling onto the other.
bool isomorphic(const Network& A, const Network& B) {
    auto VA = A.node_list(), VB = B.node_list();
    if (VA.size() != VB.size()) return false;
    std::vector<int> p(VB.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < VA.size() && ok; ++i)
            for (std::size_t j = 0; j < VA.size() && ok; ++j) ok = A.edge(VA[i], VA[j]) == B.edge(VB[p[i]], VB[p[j]]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST(Consistency, SingleNodeWithIdentity) {
    RaAtomStructure s = monk_ra(1, 1);
    RaRules R(s);
    Network N = edge_net(3, {{Label(s.at(AtomTag("Id")))}});
    EXPECT_TRUE(check_consistency(R, N).ok());
}

TEST(Consistency, RedTriangleIsReported) {
    RaAtomStructure s = monk_ra(3, 1);
    RaRules R(s);
    Label id = Label(s.at(AtomTag("Id"))), r = Label(s.at(AtomTag("r", {1})));
    Network N = edge_net(3, {{id, r, r}, {r, id, r}, {r, r, id}});
    auto rep = check_consistency(R, N);
    EXPECT_FALSE(rep.ok());
    EXPECT_TRUE(rep.has("triangle"));
}

TEST(Consistency, CaSingleNodeNetwork) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    Network N(3, 4);
    N.add_node(0);
    // the only atom inside every diagonal
    Bits all = rs.at.D(0, 1) & rs.at.D(0, 2) & rs.at.D(1, 2);
    ASSERT_EQ(all.count(), 1u);
    N.set({0, 0, 0}, Label(all.find_first()));
    EXPECT_TRUE(check_consistency(R, N).ok());
}

TEST(ApplyMap, IdentityIsNoOp) {
    std::mt19937 rng(1);
    Network N = random_net(rng, 3, 4, 3);
    EXPECT_EQ(apply_map(N, {0, 1, 2, 3}), N);
}

TEST(ApplyMap, EmptyDomainGivesEmptyNetwork) {
    std::mt19937 rng(2);
    Network N = random_net(rng, 3, 4, 3);
    Network E = apply_map(N, {-1, -1, -1, -1});
    EXPECT_EQ(E.node_count(), 0);
}

TEST(ApplyMap, CollapsingIdentityEdgeStaysConsistent) {
    RaAtomStructure s = monk_ra(2, 1);
    RaRules R(s);
    Label id = Label(s.at(AtomTag("Id"))), g = Label(s.at(AtomTag("g0", {0})));
    // nodes 0 and 1 are the same point (Id edge); node 2 is green to both
    Network N = edge_net(3, {{id, id, g}, {id, id, g}, {g, g, id}});
    ASSERT_TRUE(check_consistency(R, N).ok());
    Network M = apply_map(N, {0, 0, 2});
    EXPECT_TRUE(check_consistency(R, M).ok());
    EXPECT_EQ(M.edge(0, 1), id);
}

TEST(Hyperedges, EmptySequenceIsShort) {
    auto s = monk_ra(1, 1);
    RaRules R(s);
    Network N(2, 3);
    EXPECT_EQ(classify_hyperedge(R, N, {}), HyperKind::Short);
}

TEST(Hyperedges, FreshNodeWithoutDiagonalLinksIsLong) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    Network N(3, 5);
    for (int v = 0; v < 4; ++v) N.add_node(v);
    // no tuple labelled inside d_01: all four nodes are pairwise apart
    EXPECT_EQ(classify_hyperedge(R, N, {0, 1, 2, 3}), HyperKind::Long);
    EXPECT_EQ(classify_hyperedge(R, N, {0, 1, 2}), HyperKind::Short);
}

TEST(Hyperedges, LambdaOnLongEdgeIsLegal) {
    auto s = monk_ra(1, 1);
    RaRules R(s);
    Network N(2, 4);
    for (int v = 0; v < 3; ++v) N.add_node(v);
    Label id = Label(s.at(AtomTag("Id"))), g = Label(s.at(AtomTag("g0", {0})));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) N.set({x, y}, x == y ? id : g);
    N.hyper[{0, 1, 2}] = 0;
    N.hyper[{2, 1, 0}] = 5;
    EXPECT_TRUE(check_lambda_neat(R, N, 0).ok());
    N.hyper[{0, 1}] = 5;  // short and not λ
    EXPECT_TRUE(check_lambda_neat(R, N, 0).has("lambda-neat"));
}

TEST(CanonicalKey, DistinctLabelsGiveDistinctKeys) {
    Network A = edge_net(2, {{0, 1}, {1, 0}}), B = edge_net(2, {{0, 2}, {2, 0}});
    EXPECT_NE(canonical_key(A), canonical_key(B));
}

TEST(CanonicalKey, InvariantUnderPermutation) {
    std::mt19937 rng(9);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + int(rng() % 5);
        Network N = random_net(rng, n, 6, 3);
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_key(N), canonical_key(apply_map(N, perm)));
    }
}

TEST(CanonicalKey, EqualKeysExactlyForIsomorphicNetworks) {
    std::mt19937 rng(21);
    for (int t = 0; t < 400; ++t) {
        int n = 2 + int(rng() % 3);
        // two labels and mostly-symmetric graphs make collisions likely
        Network A = random_net(rng, n, 5, 2), B = random_net(rng, n, 5, 2);
        EXPECT_EQ(canonical_key(A) == canonical_key(B), isomorphic(A, B));
    }
}

TEST(CanonicalKey, CanonicalNetworkHasSameKey) {
    std::mt19937 rng(4);
    for (int t = 0; t < 50; ++t) {
        Network N = random_net(rng, 4, 6, 3);
        auto cf = canonical_form(N);
        EXPECT_EQ(canonical_key(cf.net), cf.key);
        EXPECT_TRUE(isomorphic(cf.net, N));
    }
}

TEST(CanonicalKey, RegularGraphsTerminate) {
    // every node looks alike: refinement alone cannot split, search must
    Network N(2, 8);
    for (int v = 0; v < 8; ++v) N.add_node(v);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) N.set({x, y}, Label(x == y ? 0 : ((x + 1) % 8 == y || (y + 1) % 8 == x) ? 1 : 2));
    std::vector<int> perm{3, 1, 4, 0, 7, 5, 2, 6};
    EXPECT_EQ(canonical_key(N), canonical_key(apply_map(N, perm)));
}
