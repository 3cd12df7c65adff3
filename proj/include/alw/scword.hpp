#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

// s_sub^sup or c_i. A substitution letter induces the replacement
// [sup|sub] sending sup to sub and fixing everything else.
struct ScLetter {
    enum Kind { Subst, Cyl } kind = Subst;
    int sub = 0;
    int sup = 0;  // unused for Cyl; the cylindrifier index lives in sub

    static ScLetter s(int sub, int sup) { return {Subst, sub, sup}; }
    static ScLetter c(int i) { return {Cyl, i, 0}; }
    bool operator==(const ScLetter&) const = default;
    std::string str() const {
        return kind == Cyl ? "c_" + std::to_string(sub) : "s_" + std::to_string(sub) + "^" + std::to_string(sup);
    }
};

struct ScWord {
    int arity = 0;
    std::vector<ScLetter> letters;

    ScWord concat(const ScWord& o) const {
        if (o.arity != arity) throw std::invalid_argument("arity mismatch");
        ScWord w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }
    std::string str() const {
        std::string s;
        for (auto& l : letters) s += (s.empty() ? "" : " ") + l.str();
        return s.empty() ? "ε" : s;
    }
};

// -1 marks an undefined point.
using PartialMap = std::vector<int>;

inline PartialMap identity_map(int m) {
    PartialMap p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    return p;
}

// One letter: w s_j^i -> ŵ ∘ [i|j];  w c_i -> ŵ restricted to m \ {i}.
inline PartialMap apply_letter(const PartialMap& w, const ScLetter& l) {
    int m = int(w.size());
    PartialMap out(m, -1);
    if (l.kind == ScLetter::Cyl) {
        out = w;
        out[l.sub] = -1;
        return out;
    }
    for (int x = 0; x < m; ++x) {
        int y = (x == l.sup) ? l.sub : x;
        out[x] = w[y];
    }
    return out;
}

inline PartialMap eval_sc_word(const ScWord& w, PartialMap start) {
    for (auto& l : w.letters) {
        if (l.sub < 0 || l.sub >= w.arity || l.sup < 0 || l.sup >= w.arity) throw std::out_of_range("letter index out of range: " + l.str());
        start = apply_letter(start, l);
    }
    return start;
}

inline PartialMap eval_sc_word(const ScWord& w) { return eval_sc_word(w, identity_map(w.arity)); }

// Word realising the substitution sending 0 to i and 1 to j.
inline ScWord subst_word(int i, int j, int n) {
    if (n < 3) throw std::invalid_argument("subst_word needs n >= 3");
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("subst_word index out of range");
    ScWord w{n, {}};
    if (j != 0)
        w.letters = {ScLetter::s(i, 0), ScLetter::s(j, 1)};
    else if (i != 1)
        w.letters = {ScLetter::s(0, 1), ScLetter::s(i, 0)};
    else
        w.letters = {ScLetter::s(0, 2), ScLetter::s(1, 0), ScLetter::s(2, 1)};
    return w;
}

inline std::string map_str(const PartialMap& p) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) continue;
        s += (first ? "" : ",") + std::to_string(i) + "->" + std::to_string(p[i]);
        first = false;
    }
    return s + "}";
}

}  // namespace alw
