#pragma once

#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

// Atom identifiers carry a colour kind and integer indices so generators and
// strategies can branch on colour without string parsing.
struct AtomTag {
    std::string kind;
    std::vector<int> idx;

    AtomTag() = default;
    AtomTag(std::string k, std::vector<int> i = {}) : kind(std::move(k)), idx(std::move(i)) {}

    auto operator<=>(const AtomTag&) const = default;
    bool operator==(const AtomTag&) const = default;

    std::string str() const {
        if (idx.empty()) return kind;
        std::ostringstream os;
        os << kind << ':';
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        return os.str();
    }

    static AtomTag parse(const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos) {
            if (s.empty()) throw std::invalid_argument("empty atom identifier");
            return AtomTag(s);
        }
        AtomTag t(s.substr(0, colon));
        if (t.kind.empty()) throw std::invalid_argument("atom identifier without kind: " + s);
        std::string rest = s.substr(colon + 1);
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad index in atom identifier: " + s);
            }
            if (used != part.size()) throw std::invalid_argument("bad index in atom identifier: " + s);
            t.idx.push_back(v);
        }
        return t;
    }
};

}  // namespace alw
