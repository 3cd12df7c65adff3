#pragma once

#include "alw/atom.hpp"
#include "alw/bits.hpp"
#include "alw/ra.hpp"
#include "alw/report.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

// Finite cylindric atom structure: per-index accessibility relations and
// diagonal atom sets. eq[i][a] is the ≡_i-row of atom a.
struct CaAtomStructure {
    int dim = 0;
    std::vector<AtomTag> atoms;
    std::vector<std::vector<Bits>> eq;  // [i][a]
    std::vector<Bits> diag;             // [i*dim+j]

    CaAtomStructure() = default;
    CaAtomStructure(int n, std::vector<AtomTag> a) : dim(n), atoms(std::move(a)) {
        std::size_t N = atoms.size();
        eq.assign(n, std::vector<Bits>(N, Bits(N)));
        for (int i = 0; i < n; ++i)
            for (std::size_t x = 0; x < N; ++x) eq[i][x].set(x);
        diag.assign(std::size_t(n) * n, Bits(N));
        for (int i = 0; i < n; ++i) diag[std::size_t(i) * n + i].set();
    }

    std::size_t size() const { return atoms.size(); }
    const Bits& D(int i, int j) const { return diag[std::size_t(i) * dim + j]; }
    Bits& D(int i, int j) { return diag[std::size_t(i) * dim + j]; }
    void relate(int i, std::size_t a, std::size_t b) {
        eq[i][a].set(b);
        eq[i][b].set(a);
    }
    void set_diag(int i, int j, std::size_t a) {
        D(i, j).set(a);
        D(j, i).set(a);
    }
    // Fill ≡_i from a class id per atom; atoms with equal key are related.
    void set_classes(int i, const std::vector<std::size_t>& cls) {
        std::size_t N = size();
        std::size_t K = 0;
        for (auto c : cls) K = std::max(K, c + 1);
        std::vector<Bits> rows(K, Bits(N));
        for (std::size_t a = 0; a < N; ++a) rows[cls[a]].set(a);
        for (std::size_t a = 0; a < N; ++a) eq[i][a] = rows[cls[a]];
    }
    int find(const AtomTag& t) const {
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (atoms[i] == t) return int(i);
        return -1;
    }
};

inline ValidationReport validate_ca_atom_structure(const CaAtomStructure& s) {
    ValidationReport r;
    if (s.atoms.empty()) r.add("nonempty", "atom list is empty");
    if (s.dim < 1) r.add("dimension", "dimension must be positive");
    std::size_t N = s.size();
    for (int i = 0; i < s.dim; ++i) {
        for (std::size_t a = 0; a < N; ++a) {
            const Bits& row = s.eq[i][a];
            if (!row.test(a)) r.add("reflexive", "atom " + s.atoms[a].str() + " not ≡_" + std::to_string(i) + " itself");
            bool bad = false;
            for_each_bit(row, [&](std::size_t b) {
                if (!s.eq[i][b].test(a)) {
                    r.add("symmetric", s.atoms[a].str() + " ≡_" + std::to_string(i) + " " + s.atoms[b].str());
                    bad = true;
                } else if (!bad && s.eq[i][b] != row) {
                    r.add("transitive", "≡_" + std::to_string(i) + " rows of " + s.atoms[a].str() + " and " + s.atoms[b].str() + " differ");
                    bad = true;
                }
            });
        }
        for (int j = 0; j < s.dim; ++j)
            if (s.D(i, j) != s.D(j, i)) r.add("diagonal-symmetry", "D_" + std::to_string(i) + std::to_string(j) + " != D_" + std::to_string(j) + std::to_string(i));
    }
    return r;
}

// Finite atomic algebra in the cylindric signature, given on atoms.
struct CaAlgebra {
    int dim = 0;
    std::vector<AtomTag> atoms;
    std::vector<std::vector<Bits>> cyl;  // [i][a] = c_i{a}
    std::vector<Bits> diag;              // [i*dim+j]

    std::size_t size() const { return atoms.size(); }
    const Bits& d(int i, int j) const { return diag[std::size_t(i) * dim + j]; }
    Bits zero() const { return Bits(size()); }
    Bits one() const { return full_bits(size()); }
    Bits atom(std::size_t a) const { return single_bit(size(), a); }
};

inline CaAlgebra complex_algebra(const CaAtomStructure& s) {
    CaAlgebra A;
    A.dim = s.dim;
    A.atoms = s.atoms;
    A.cyl = s.eq;
    A.diag = s.diag;
    return A;
}

inline Bits ca_cylindrify(const CaAlgebra& A, int i, const Bits& X) {
    if (i < 0 || i >= A.dim) throw std::out_of_range("cylindrifier index " + std::to_string(i) + " out of range");
    if (X.size() != A.size()) throw std::invalid_argument("element width does not match the algebra");
    Bits out(A.size());
    for_each_bit(X, [&](std::size_t a) { out |= A.cyl[i][a]; });
    return out;
}

inline Bits ca_diagonal(const CaAlgebra& A, int i, int j) {
    if (i < 0 || j < 0 || i >= A.dim || j >= A.dim) throw std::out_of_range("diagonal index out of range");
    return A.d(i, j);
}

// s_i^j x = c_j(d_ij . x), identity when i == j.
inline Bits ca_subst(const CaAlgebra& A, int i, int j, const Bits& x) {
    if (i == j) return x;
    return ca_cylindrify(A, j, A.d(i, j) & x);
}

// C1-C7 on atoms. C7 is not additive in x; it fails for some x iff two
// distinct atoms of D_ij have overlapping c_i-images, which is what we test.
inline AxiomReport check_ca_axioms(const CaAlgebra& A, std::size_t budget = 2'000'000'000) {
    AxiomReport r;
    std::size_t N = A.size();
    int n = A.dim;
    double work = double(n) * n * N * N / 8.0;
    if (work > double(budget)) {
        r.unknown = true;
        r.add("budget", "axiom check too large");
        return r;
    }
    auto nm = [&](std::size_t a) { return A.atoms[a].str(); };
    auto is = [](int i) { return std::to_string(i); };
    for (int i = 0; i < n; ++i) {
        if (ca_cylindrify(A, i, A.zero()).any()) r.add("C1", "c_" + is(i) + "0 != 0");
        for (std::size_t a = 0; a < N; ++a) {
            const Bits& ca = A.cyl[i][a];
            if (!ca.test(a)) r.add("C2", nm(a) + " not below c_" + is(i) + nm(a));
            // C3 for atoms x=a, y=b: LHS is c_i a when a ∈ c_i b, else 0.
            for (std::size_t b = 0; b < N; ++b) {
                ++r.checked;
                const Bits& cb = A.cyl[i][b];
                bool inside = cb.test(a);
                if (inside ? !ca.is_subset_of(cb) : ca.intersects(cb))
                    r.add("C3", "x=" + nm(a) + " y=" + nm(b) + " i=" + is(i));
            }
        }
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t a = 0; a < N; ++a) {
                Bits ij = ca_cylindrify(A, i, A.cyl[j][a]);
                Bits ji = ca_cylindrify(A, j, A.cyl[i][a]);
                if (ij != ji) r.add("C4", "c_" + is(i) + "c_" + is(j) + nm(a) + " != c_" + is(j) + "c_" + is(i) + nm(a));
            }
        }
        if (!A.d(i, i).all()) r.add("C5", "d_" + is(i) + is(i) + " != 1");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int mu = 0; mu < n; ++mu) {
                if (i == j || i == mu) continue;
                if (A.d(j, mu) != ca_cylindrify(A, i, A.d(j, i) & A.d(i, mu)))
                    r.add("C6", "d_" + is(j) + is(mu) + " != c_" + is(i) + "(d_" + is(j) + is(i) + ".d_" + is(i) + is(mu) + ")");
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto in = bit_list(A.d(i, j));
            for (std::size_t p = 0; p < in.size(); ++p)
                for (std::size_t q = p + 1; q < in.size(); ++q)
                    if (A.cyl[i][in[p]].intersects(A.cyl[i][in[q]]))
                        r.add("C7", "i=" + is(i) + " j=" + is(j) + " x=" + nm(in[p]) + " vs " + nm(in[q]));
        }
    return r;
}

// Full structure on ^n base: every n-tuple is an atom.
inline CaAtomStructure cartesian_ca_structure(int n, int base) {
    std::size_t N = 1;
    for (int i = 0; i < n; ++i) N *= std::size_t(base);
    std::vector<std::vector<int>> tuples(N, std::vector<int>(n));
    for (std::size_t t = 0; t < N; ++t) {
        std::size_t v = t;
        for (int i = n - 1; i >= 0; --i) {
            tuples[t][i] = int(v % base);
            v /= base;
        }
    }
    std::vector<AtomTag> atoms;
    for (auto& t : tuples) atoms.emplace_back("t", t);
    CaAtomStructure s(n, atoms);
    for (int i = 0; i < n; ++i) {
        std::vector<std::size_t> cls(N);
        for (std::size_t t = 0; t < N; ++t) {
            std::size_t key = 0;
            for (int k = 0; k < n; ++k) key = key * base + (k == i ? 0 : tuples[t][k]);
            cls[t] = key;
        }
        s.set_classes(i, cls);
        for (int j = i + 1; j < n; ++j)
            for (std::size_t t = 0; t < N; ++t)
                if (tuples[t][i] == tuples[t][j]) s.set_diag(i, j, t);
    }
    return s;
}

namespace detail {
struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

// Re-express x as a set of blocks; throws if x cuts a block.
inline Bits to_blocks(const Bits& x, const std::vector<Bits>& blocks, const char* what) {
    Bits out(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].is_subset_of(x))
            out.set(b);
        else if (blocks[b].intersects(x))
            throw std::invalid_argument(std::string(what) + " is not a union of reduct atoms");
    }
    return out;
}
}  // namespace detail

// Atoms of Nr_k A are the classes of the equivalence generated by c_i, i >= k.
// Returns the blocks (as sets of A-atoms) alongside the reduct.
struct NeatReduct {
    CaAlgebra algebra;
    std::vector<Bits> blocks;
};

inline NeatReduct neat_reduct_blocks(const CaAlgebra& A, int k) {
    if (k > A.dim) throw std::invalid_argument("neat reduct dimension exceeds source dimension");
    if (k < 1) throw std::invalid_argument("neat reduct dimension must be positive");
    std::size_t N = A.size();
    detail::UnionFind uf(N);
    for (int i = k; i < A.dim; ++i)
        for (std::size_t a = 0; a < N; ++a) for_each_bit(A.cyl[i][a], [&](std::size_t b) { uf.unite(a, b); });
    std::vector<std::size_t> idx(N, SIZE_MAX);
    NeatReduct out;
    for (std::size_t a = 0; a < N; ++a) {
        std::size_t root = uf.find(a);
        if (idx[root] == SIZE_MAX) {
            idx[root] = out.blocks.size();
            out.blocks.emplace_back(N);
        }
        out.blocks[idx[root]].set(a);
    }
    CaAlgebra& R = out.algebra;
    R.dim = k;
    std::size_t M = out.blocks.size();
    for (std::size_t b = 0; b < M; ++b) {
        if (k == A.dim) {
            R.atoms.push_back(A.atoms[out.blocks[b].find_first()]);
        } else {
            R.atoms.emplace_back("cls", std::vector<int>{int(out.blocks[b].find_first())});
        }
    }
    R.cyl.assign(k, std::vector<Bits>(M));
    for (int i = 0; i < k; ++i)
        for (std::size_t b = 0; b < M; ++b)
            R.cyl[i][b] = detail::to_blocks(ca_cylindrify(A, i, out.blocks[b]), out.blocks, "cylindrification");
    R.diag.assign(std::size_t(k) * k, Bits(M));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) R.diag[std::size_t(i) * k + j] = detail::to_blocks(A.d(i, j), out.blocks, "diagonal");
    return out;
}

inline CaAlgebra neat_reduct(const CaAlgebra& A, int k) {
    if (k == A.dim) return A;
    return neat_reduct_blocks(A, k).algebra;
}

// Relation-algebra reduct on Nr_2 A with
//   x;y   = c_2(s_2^1 x . s_2^0 y)
//   conv x = s_0^2 s_1^0 s_2^1 x
//   1'    = d_01
inline RaAlgebra ra_reduct(const CaAlgebra& A) {
    if (A.dim < 3) throw std::invalid_argument("Ra reduct needs dimension at least 3");
    NeatReduct nr = neat_reduct_blocks(A, 2);
    const auto& B = nr.blocks;
    std::size_t M = B.size();
    RaAlgebra R;
    R.atoms = nr.algebra.atoms;
    std::vector<Bits> s21(M), s20(M);
    for (std::size_t b = 0; b < M; ++b) {
        s21[b] = ca_subst(A, 2, 1, B[b]);
        s20[b] = ca_subst(A, 2, 0, B[b]);
    }
    R.comp.assign(M * M, Bits(M));
    for (std::size_t x = 0; x < M; ++x)
        for (std::size_t y = 0; y < M; ++y)
            R.comp[x * M + y] = detail::to_blocks(ca_cylindrify(A, 2, s21[x] & s20[y]), B, "composition");
    R.conv.assign(M, Bits(M));
    for (std::size_t x = 0; x < M; ++x)
        R.conv[x] = detail::to_blocks(ca_subst(A, 0, 2, ca_subst(A, 1, 0, s21[x])), B, "converse");
    R.identity = detail::to_blocks(A.d(0, 1), B, "identity");
    return R;
}

}  // namespace alw
