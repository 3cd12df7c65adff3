#pragma once

#include "alw/ca.hpp"
#include "alw/ra.hpp"
#include "alw/rainbow.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace alw {

using json = nlohmann::json;

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk structure. `generator` echoes how the file was made and is kept
// verbatim across load/save.
struct StructureFile {
    std::string kind;  // "ra", "ca" or "split-blur"
    json generator = json::object();
    std::optional<RaAtomStructure> ra;
    std::optional<CaAtomStructure> ca;
    // split-blur: ca holds the original; the split is rebuilt on load
    Bits red;
    int lambda = 0;
};

namespace detail {

inline json atoms_json(const std::vector<AtomTag>& atoms) {
    json a = json::array();
    for (auto& t : atoms) a.push_back(t.str());
    return a;
}

inline std::vector<AtomTag> atoms_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw LoadError(where + ": expected a nonempty array of atom names");
    std::vector<AtomTag> out;
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw LoadError(where + "[" + std::to_string(i) + "]: atom name must be a string");
        std::string s = j[i].get<std::string>();
        try {
            out.push_back(AtomTag::parse(s));
        } catch (const std::exception& e) {
            throw LoadError(where + "[" + std::to_string(i) + "]: " + e.what());
        }
        if (out.back().str() != s) throw LoadError(where + "[" + std::to_string(i) + "]: atom name '" + s + "' is not in canonical form");
        if (!seen.emplace(s, int(i)).second) throw LoadError(where + "[" + std::to_string(i) + "]: duplicate atom " + s);
    }
    return out;
}

inline int atom_ref(const json& j, const std::map<std::string, int>& names, const std::string& where) {
    if (!j.is_string()) throw LoadError(where + ": expected an atom name");
    auto it = names.find(j.get<std::string>());
    if (it == names.end()) throw LoadError(where + ": unknown atom " + j.get<std::string>());
    return it->second;
}

inline int index_ref(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_number_integer()) throw LoadError(where + ": expected an atom index");
    long long v = j.get<long long>();
    if (v < 0 || std::size_t(v) >= n) throw LoadError(where + ": atom index out of range");
    return int(v);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw LoadError(where + ": missing field '" + key + "'");
    return j.at(key);
}

inline json ca_json(const CaAtomStructure& s) {
    json j;
    j["kind"] = "ca";
    j["dim"] = s.dim;
    j["atoms"] = atoms_json(s.atoms);
    // ≡_i as a class number per atom, numbered by first appearance
    json classes = json::array();
    for (int i = 0; i < s.dim; ++i) {
        std::vector<int> cls(s.size(), -1);
        int next = 0;
        for (std::size_t a = 0; a < s.size(); ++a) {
            if (cls[a] >= 0) continue;
            for_each_bit(s.eq[i][a], [&](std::size_t b) { cls[b] = next; });
            ++next;
        }
        classes.push_back(cls);
    }
    j["classes"] = classes;
    json diag = json::object();
    for (int i = 0; i < s.dim; ++i)
        for (int k = i + 1; k < s.dim; ++k) {
            std::vector<std::size_t> members = bit_list(s.D(i, k));
            diag[std::to_string(i) + "," + std::to_string(k)] = members;
        }
    j["diagonals"] = diag;
    return j;
}

inline CaAtomStructure ca_from(const json& j, const std::string& where) {
    const json& dj = field(j, "dim", where);
    if (!dj.is_number_integer() || dj.get<int>() < 1 || dj.get<int>() > 8) throw LoadError(where + ".dim: expected an integer in 1..8");
    int n = dj.get<int>();
    CaAtomStructure s(n, atoms_from(field(j, "atoms", where), where + ".atoms"));
    const json& cj = field(j, "classes", where);
    if (!cj.is_array() || int(cj.size()) != n) throw LoadError(where + ".classes: expected one array per coordinate");
    for (int i = 0; i < n; ++i) {
        std::string w = where + ".classes[" + std::to_string(i) + "]";
        if (!cj[i].is_array() || cj[i].size() != s.size()) throw LoadError(w + ": expected one class number per atom");
        std::vector<std::size_t> cls;
        for (std::size_t a = 0; a < s.size(); ++a) cls.push_back(std::size_t(index_ref(cj[i][a], s.size(), w + "[" + std::to_string(a) + "]")));
        s.set_classes(i, cls);
    }
    const json& dg = field(j, "diagonals", where);
    if (!dg.is_object()) throw LoadError(where + ".diagonals: expected an object keyed by \"i,j\"");
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            std::string key = std::to_string(i) + "," + std::to_string(k);
            std::string w = where + ".diagonals." + key;
            if (!dg.contains(key) || !dg.at(key).is_array()) throw LoadError(w + ": missing");
            for (std::size_t q = 0; q < dg.at(key).size(); ++q)
                s.set_diag(i, k, std::size_t(index_ref(dg.at(key)[q], s.size(), w + "[" + std::to_string(q) + "]")));
        }
    for (auto it = dg.begin(); it != dg.end(); ++it) {
        int a = -1, b = -1;
        char comma = 0;
        std::istringstream ks(it.key());
        if (!(ks >> a >> comma >> b) || comma != ',' || !(a >= 0 && a < b && b < n)) throw LoadError(where + ".diagonals: bad key " + it.key());
    }
    return s;
}

}  // namespace detail

inline json structure_json(const StructureFile& f) {
    json j;
    if (f.kind == "ra") {
        const RaAtomStructure& s = *f.ra;
        j["kind"] = "ra";
        j["atoms"] = detail::atoms_json(s.atoms);
        json id = json::array();
        for_each_bit(s.identity, [&](std::size_t a) { id.push_back(s.name(int(a))); });
        j["identity"] = id;
        json conv = json::array();
        for (std::size_t a = 0; a < s.size(); ++a) conv.push_back(s.name(s.converse[a]));
        j["converse"] = conv;
        json forb = json::array();
        for (auto& t : s.forbidden_representatives()) forb.push_back({s.name(t[0]), s.name(t[1]), s.name(t[2])});
        j["forbidden"] = forb;
    } else if (f.kind == "ca") {
        j = detail::ca_json(*f.ca);
    } else if (f.kind == "split-blur") {
        j["kind"] = "split-blur";
        j["original"] = detail::ca_json(*f.ca);
        j["red"] = bit_list(f.red);
        j["lambda"] = f.lambda;
    } else {
        throw std::invalid_argument("unknown structure kind " + f.kind);
    }
    j["format"] = 1;
    if (!f.generator.empty()) j["generator"] = f.generator;
    return j;
}

inline std::string structure_text(const StructureFile& f) { return structure_json(f).dump(1) + "\n"; }

inline StructureFile structure_from_json(const json& j) {
    StructureFile f;
    const json& kj = detail::field(j, "kind", "$");
    if (!kj.is_string()) throw LoadError("$.kind: expected a string");
    f.kind = kj.get<std::string>();
    if (j.contains("format") && j.at("format") != 1) throw LoadError("$.format: unsupported version");
    if (j.contains("generator")) {
        if (!j.at("generator").is_object()) throw LoadError("$.generator: expected an object");
        f.generator = j.at("generator");
    }
    if (f.kind == "ra") {
        RaAtomStructure s(detail::atoms_from(detail::field(j, "atoms", "$"), "$.atoms"));
        std::map<std::string, int> names;
        for (std::size_t a = 0; a < s.size(); ++a) names[s.name(int(a))] = int(a);
        const json& id = detail::field(j, "identity", "$");
        if (!id.is_array()) throw LoadError("$.identity: expected an array");
        for (std::size_t q = 0; q < id.size(); ++q) s.identity.set(std::size_t(detail::atom_ref(id[q], names, "$.identity[" + std::to_string(q) + "]")));
        const json& cv = detail::field(j, "converse", "$");
        if (!cv.is_array() || cv.size() != s.size()) throw LoadError("$.converse: expected one atom name per atom");
        for (std::size_t a = 0; a < s.size(); ++a) s.converse[a] = detail::atom_ref(cv[a], names, "$.converse[" + std::to_string(a) + "]");
        for (std::size_t a = 0; a < s.size(); ++a)
            if (s.converse[s.converse[a]] != int(a)) throw LoadError("$.converse[" + std::to_string(a) + "]: converse is not an involution");
        const json& fb = detail::field(j, "forbidden", "$");
        if (!fb.is_array()) throw LoadError("$.forbidden: expected an array of triples");
        for (std::size_t q = 0; q < fb.size(); ++q) {
            std::string w = "$.forbidden[" + std::to_string(q) + "]";
            if (!fb[q].is_array() || fb[q].size() != 3) throw LoadError(w + ": expected three atom names");
            s.forbid(detail::atom_ref(fb[q][0], names, w + "[0]"), detail::atom_ref(fb[q][1], names, w + "[1]"),
                     detail::atom_ref(fb[q][2], names, w + "[2]"));
        }
        auto rep = validate_ra_atom_structure(s);
        if (!rep.ok()) throw LoadError("$: " + rep.issues[0].rule + ": " + rep.issues[0].detail);
        f.ra = std::move(s);
    } else if (f.kind == "ca") {
        f.ca = detail::ca_from(j, "$");
        auto rep = validate_ca_atom_structure(*f.ca);
        if (!rep.ok()) throw LoadError("$: " + rep.issues[0].rule + ": " + rep.issues[0].detail);
    } else if (f.kind == "split-blur") {
        f.ca = detail::ca_from(detail::field(j, "original", "$"), "$.original");
        auto rep = validate_ca_atom_structure(*f.ca);
        if (!rep.ok()) throw LoadError("$.original: " + rep.issues[0].rule + ": " + rep.issues[0].detail);
        const json& lj = detail::field(j, "lambda", "$");
        if (!lj.is_number_integer() || lj.get<int>() < 1) throw LoadError("$.lambda: expected a positive integer");
        f.lambda = lj.get<int>();
        f.red = Bits(f.ca->size());
        const json& rj = detail::field(j, "red", "$");
        if (!rj.is_array()) throw LoadError("$.red: expected an array of atom indices");
        for (std::size_t q = 0; q < rj.size(); ++q) f.red.set(std::size_t(detail::index_ref(rj[q], f.ca->size(), "$.red[" + std::to_string(q) + "]")));
    } else {
        throw LoadError("$.kind: unknown kind '" + f.kind + "' (expected ra, ca or split-blur)");
    }
    return f;
}

inline StructureFile parse_structure(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw LoadError(std::string("not valid JSON: ") + e.what());
    }
    return structure_from_json(j);
}

inline StructureFile load_structure(std::istream& in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

inline StructureFile load_structure(const std::string& path) {
    if (path == "-") return load_structure(std::cin);
    std::ifstream in(path);
    if (!in) throw LoadError(path + ": cannot open");
    try {
        return load_structure(in);
    } catch (const LoadError& e) {
        throw LoadError(path + ": " + e.what());
    }
}

inline StructureFile ra_file(RaAtomStructure s, json gen = json::object()) {
    StructureFile f;
    f.kind = "ra";
    f.ra = std::move(s);
    f.generator = std::move(gen);
    return f;
}

inline StructureFile ca_file(CaAtomStructure s, json gen = json::object()) {
    StructureFile f;
    f.kind = "ca";
    f.ca = std::move(s);
    f.generator = std::move(gen);
    return f;
}

}  // namespace alw
