#pragma once

#include "alw/atom.hpp"
#include "alw/bits.hpp"
#include "alw/report.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

using Triple = std::array<int, 3>;

// Finite relation-algebra atom structure. Consistency is stored as the
// complement of an explicit forbidden-triple table; forbid() closes each
// triple under the Peircean transforms so callers list representatives only.
struct RaAtomStructure {
    std::vector<AtomTag> atoms;
    Bits identity;
    std::vector<int> converse;
    std::vector<std::uint8_t> forbidden;  // N^3 flags

    RaAtomStructure() = default;
    explicit RaAtomStructure(std::vector<AtomTag> a)
        : atoms(std::move(a)), identity(atoms.size()), converse(atoms.size()),
          forbidden(atoms.size() * atoms.size() * atoms.size(), 0) {
        for (std::size_t i = 0; i < atoms.size(); ++i) converse[i] = static_cast<int>(i);
    }

    std::size_t size() const { return atoms.size(); }
    std::size_t tri(int a, int b, int c) const { return (static_cast<std::size_t>(a) * size() + b) * size() + c; }
    bool consistent(int a, int b, int c) const { return !forbidden[tri(a, b, c)]; }

    int find(const AtomTag& t) const {
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (atoms[i] == t) return static_cast<int>(i);
        return -1;
    }
    int at(const AtomTag& t) const {
        int i = find(t);
        if (i < 0) throw std::invalid_argument("unknown atom " + t.str());
        return i;
    }

    Triple t1(const Triple& t) const { return {converse[t[0]], t[2], t[1]}; }
    Triple t2(const Triple& t) const { return {t[2], converse[t[1]], t[0]}; }

    std::vector<Triple> peirce_orbit(const Triple& start) const {
        std::vector<Triple> orbit{start};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (const Triple& nx : {t1(orbit[k]), t2(orbit[k])}) {
                if (std::find(orbit.begin(), orbit.end(), nx) == orbit.end()) orbit.push_back(nx);
            }
        }
        return orbit;
    }

    void forbid(int a, int b, int c) {
        for (const auto& t : peirce_orbit({a, b, c})) forbidden[tri(t[0], t[1], t[2])] = 1;
    }
    // No closure; used to build deliberately broken structures.
    void forbid_raw(int a, int b, int c) { forbidden[tri(a, b, c)] = 1; }
    void allow_raw(int a, int b, int c) { forbidden[tri(a, b, c)] = 0; }

    Triple least_representative(const Triple& t) const {
        auto orbit = peirce_orbit(t);
        return *std::min_element(orbit.begin(), orbit.end());
    }

    // Sorted, one entry per Peircean orbit: the canonical on-disk form.
    std::vector<Triple> forbidden_representatives() const {
        std::set<Triple> reps;
        int n = static_cast<int>(size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!consistent(a, b, c)) reps.insert(least_representative({a, b, c}));
        return {reps.begin(), reps.end()};
    }

    std::string name(int a) const { return atoms[a].str(); }
};

inline std::string triple_str(const RaAtomStructure& s, const Triple& t) {
    return "(" + s.name(t[0]) + "," + s.name(t[1]) + "," + s.name(t[2]) + ")";
}

inline ValidationReport validate_ra_atom_structure(const RaAtomStructure& s) {
    ValidationReport r;
    int n = static_cast<int>(s.size());
    if (n == 0) {
        r.add("nonempty", "atom list is empty");
        return r;
    }
    for (int a = 0; a < n; ++a) {
        int c = s.converse[a];
        if (c < 0 || c >= n || s.converse[c] != a) r.add("involution", "converse(converse(" + s.name(a) + ")) != " + s.name(a));
    }
    if (r.has("involution")) return r;  // Peircean transforms are meaningless without an involution
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!s.consistent(a, b, c)) continue;
                Triple t{a, b, c};
                for (const Triple& u : {s.t1(t), s.t2(t)})
                    if (!s.consistent(u[0], u[1], u[2]))
                        r.add("peirce", triple_str(s, t) + " consistent but " + triple_str(s, u) + " forbidden");
            }
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for_each_bit(s.identity, [&](std::size_t e) { found = found || s.consistent(a, static_cast<int>(e), a); });
        if (!found) r.add("identity", "no identity atom e with (" + s.name(a) + ",e," + s.name(a) + ") consistent");
    }
    return r;
}

// Finite atomic algebra in the relation-algebra signature, given by its action
// on atoms. Complex algebras of atom structures and Ra reducts both land here.
struct RaAlgebra {
    std::vector<AtomTag> atoms;
    std::vector<Bits> comp;  // N*N: a;b
    std::vector<Bits> conv;  // N: converse of {a}
    Bits identity;

    std::size_t size() const { return atoms.size(); }
    const Bits& c(std::size_t a, std::size_t b) const { return comp[a * size() + b]; }
    Bits zero() const { return Bits(size()); }
    Bits one() const { return full_bits(size()); }
    Bits atom(std::size_t a) const { return single_bit(size(), a); }
};

inline RaAlgebra complex_algebra(const RaAtomStructure& s) {
    RaAlgebra A;
    std::size_t n = s.size();
    A.atoms = s.atoms;
    A.comp.assign(n * n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (s.consistent(int(a), int(b), int(c))) A.comp[a * n + b].set(c);
    A.conv.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) A.conv[a].set(s.converse[a]);
    A.identity = s.identity;
    return A;
}

inline void check_width(const RaAlgebra& A, const Bits& x) {
    if (x.size() != A.size()) throw std::invalid_argument("element width does not match the algebra");
}

inline Bits ra_compose(const RaAlgebra& A, const Bits& X, const Bits& Y) {
    check_width(A, X);
    check_width(A, Y);
    Bits out(A.size());
    for_each_bit(X, [&](std::size_t a) { for_each_bit(Y, [&](std::size_t b) { out |= A.c(a, b); }); });
    return out;
}

inline Bits ra_converse(const RaAlgebra& A, const Bits& X) {
    check_width(A, X);
    Bits out(A.size());
    for_each_bit(X, [&](std::size_t a) { out |= A.conv[a]; });
    return out;
}

// Atom-level checks suffice: every operation is completely additive, so an
// equation between additive terms holds iff it holds on all atom tuples.
inline AxiomReport check_ra_axioms(const RaAlgebra& A, std::size_t budget = 400'000'000) {
    AxiomReport r;
    std::size_t n = A.size();
    double work = double(n) * n * n * (n + 1);
    if (work > double(budget)) {
        r.unknown = true;
        r.add("budget", "axiom check needs ~" + std::to_string(std::size_t(work)) + " steps");
        return r;
    }
    auto nm = [&](std::size_t a) { return A.atoms[a].str(); };
    for (std::size_t a = 0; a < n; ++a) {
        if (ra_converse(A, A.conv[a]) != A.atom(a)) r.add("converse-involution", nm(a));
        if (ra_compose(A, A.atom(a), A.identity) != A.atom(a)) r.add("identity-right", nm(a) + ";1' != " + nm(a));
        if (ra_compose(A, A.identity, A.atom(a)) != A.atom(a)) r.add("identity-left", "1';" + nm(a) + " != " + nm(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Bits ab = A.c(a, b);
            if (ra_converse(A, ab) != ra_compose(A, A.conv[b], A.conv[a]))
                r.add("converse-composition", "(" + nm(a) + ";" + nm(b) + ")^ != " + nm(b) + "^;" + nm(a) + "^");
            Bits rest = ab;
            rest.flip();
            Bits lhs = ra_compose(A, A.conv[a], rest);
            if (lhs.test(b)) r.add("tarski", nm(a) + "^;-(" + nm(a) + ";" + nm(b) + ") meets " + nm(b));
            for (std::size_t c = 0; c < n; ++c) {
                ++r.checked;
                Bits left = ra_compose(A, ab, A.atom(c));
                Bits right = ra_compose(A, A.atom(a), A.c(b, c));
                if (left != right) r.add("associativity", "(" + nm(a) + ";" + nm(b) + ");" + nm(c));
            }
        }
    return r;
}

}  // namespace alw
