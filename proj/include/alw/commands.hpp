#pragma once

// Command implementations shared by the alw tool and the acceptance suite.
// Every command yields one self-describing JSON report plus a text rendering;
// nothing in a report depends on timing or thread count.

#include "alw/constructions.hpp"
#include "alw/ef.hpp"
#include "alw/games.hpp"
#include "alw/io.hpp"
#include "alw/oracle.hpp"
#include "alw/rainbow.hpp"
#include "alw/strategies.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace alw {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitBudget = 2, kExitInput = 3 };

struct CommandResult {
    json report;
    std::string text;
    int exit = kExitPass;
};

namespace detail {

inline json issues_json(const Report& r, std::size_t cap = 50) {
    json a = json::array();
    for (std::size_t i = 0; i < r.issues.size() && i < cap; ++i) a.push_back({{"rule", r.issues[i].rule}, {"detail", r.issues[i].detail}});
    return a;
}

inline std::string report_text(const std::string& title, const Report& r, std::size_t cap = 20) {
    std::ostringstream os;
    os << title << ": " << (r.unknown ? "UNKNOWN" : r.ok() ? "PASS" : "FAIL") << " (" << r.issues.size() << " issues)\n";
    for (std::size_t i = 0; i < r.issues.size() && i < cap; ++i) os << "  " << r.issues[i].rule << ": " << r.issues[i].detail << "\n";
    if (r.issues.size() > cap) os << "  ...\n";
    return os.str();
}

inline std::string structure_digest(const StructureFile& f) { return digest(structure_text(f)); }

}  // namespace detail

// ------------------------------------------------------------ gen

struct GenParams {
    std::string family;  // monk, split, rainbow, split-blur
    int greens = 3, reds = 1;
    int index = 1, alpha = 1;
    int n = 3, tints = -1;
    int lambda = 2;
};

inline StructureFile generate(const GenParams& p) {
    if (p.family == "monk") return ra_file(monk_ra(p.greens, p.reds), {{"family", "monk"}, {"greens", p.greens}, {"reds", p.reds}});
    if (p.family == "split") return ra_file(split_ra(p.index, p.alpha), {{"family", "split"}, {"index", p.index}, {"alpha", p.alpha}});
    if (p.family == "rainbow") {
        auto rs = rainbow_finite(p.n, p.tints);
        return ca_file(rs.at, {{"family", "rainbow"}, {"n", p.n}, {"greens", rs.rules.greenCount}, {"rules", RainbowRules::version}});
    }
    if (p.family == "split-blur") {
        auto rs = rainbow_finite(p.n, p.tints);
        if (p.lambda < 1) throw std::invalid_argument("lambda must be at least 1");
        StructureFile f;
        f.kind = "split-blur";
        f.ca = rs.at;
        f.red = rs.red_atoms();
        f.lambda = p.lambda;
        f.generator = {{"family", "split-blur"}, {"n", p.n}, {"greens", rs.rules.greenCount}, {"lambda", p.lambda}, {"rules", RainbowRules::version}};
        return f;
    }
    throw std::invalid_argument("unknown family '" + p.family + "' (monk, split, rainbow, split-blur)");
}

// Rainbow structure matching a generated file, or an error if the file was
// not produced by the rainbow generator (or was edited).
inline RainbowStructure rainbow_for(const StructureFile& f) {
    const json& g = f.generator;
    if (!g.is_object() || g.value("family", "") != "rainbow" || !f.ca) throw LoadError("strategy needs a file made by 'gen rainbow'");
    auto rs = rainbow_finite(g.value("n", 3), g.value("greens", -1));
    if (rs.at.atoms != f.ca->atoms || rs.at.eq != f.ca->eq || rs.at.diag != f.ca->diag)
        throw LoadError("file does not match the rainbow generator output for its parameters");
    return rs;
}

// ------------------------------------------------------------ check

inline CommandResult cmd_check(const StructureFile& f, std::string axioms, int threads) {
    (void)threads;
    CommandResult out;
    if (axioms.empty()) axioms = f.kind == "ra" ? "ra" : "ca";
    if (axioms != "ra" && axioms != "ca") throw std::invalid_argument("--axioms must be ra or ca");
    Report val, ax;
    std::string algebra;
    if (f.kind == "ra") {
        if (axioms == "ca") throw std::invalid_argument("an ra structure has no cylindric axioms to check");
        val = validate_ra_atom_structure(*f.ra);
        ax = check_ra_axioms(complex_algebra(*f.ra));
        algebra = "Cm";
    } else {
        CaAtomStructure s = *f.ca;
        if (f.kind == "split-blur") s = split_blur(*f.ca, f.red, f.lambda).split;
        val = validate_ca_atom_structure(s);
        CaAlgebra A = complex_algebra(s);
        if (axioms == "ca") {
            ax = check_ca_axioms(A);
            algebra = "Cm";
        } else {
            if (A.dim < 3) throw std::invalid_argument("Ra reduct needs dimension at least 3");
            ax = check_ra_axioms(ra_reduct(A));
            algebra = "Ra Cm";
        }
    }
    out.report = {{"command", "check"},
                  {"input", {{"kind", f.kind}, {"digest", detail::structure_digest(f)}, {"generator", f.generator}}},
                  {"axioms", axioms},
                  {"algebra", algebra},
                  {"validation", {{"ok", val.ok()}, {"issues", detail::issues_json(val)}}},
                  {"axiom_report", {{"ok", ax.ok()}, {"unknown", ax.unknown}, {"issue_count", ax.issues.size()}, {"issues", detail::issues_json(ax)}}}};
    out.text = detail::report_text("validation", val) + detail::report_text(std::string(axioms == "ra" ? "RA" : "CA") + " axioms on " + algebra, ax);
    out.exit = ax.unknown ? kExitBudget : (val.ok() && ax.ok()) ? kExitPass : kExitFail;
    return out;
}

// ------------------------------------------------------------ solve

struct SolveParams {
    std::string game = "G";
    int nodes = 3;
    int rounds = 3;
    std::size_t budget = 2'000'000;
    std::string hint;  // "" or "cones"
    bool deepen = true;
};

inline Variant parse_variant(const std::string& s) {
    if (s == "G") return Variant::G;
    if (s == "boldG") return Variant::BoldG;
    if (s == "H") return Variant::H;
    if (s == "boldH") return Variant::BoldH;
    throw std::invalid_argument("unknown game '" + s + "' (G, boldG, H, boldH)");
}

inline json move_json(const Move& m) {
    static const char* kinds[] = {"atom", "cyl", "transform", "amalgamate"};
    json j = {{"kind", kinds[m.kind]}};
    if (m.net >= 0) j["net"] = m.net;
    if (m.net2 >= 0) j["net2"] = m.net2;
    if (m.kind == Move::Cyl) {
        j["i"] = m.i;
        j["tuple"] = m.tuple;
        j["slot"] = m.slot;
    }
    if (m.a >= 0) j["a"] = m.a;
    if (m.b >= 0) j["b"] = m.b;
    if (!m.theta.empty()) j["theta"] = m.theta;
    return j;
}

template <class G>
json certificate_json(const G& g, const CertNode& c) {
    json j = {{"move", move_json(c.move)}, {"text", g.move_str(c.move)}};
    json rs = json::array();
    for (std::size_t k = 0; k < c.children.size(); ++k) rs.push_back({{"response", digest(c.responses[k])}, {"then", certificate_json(g, c.children[k])}});
    j["responses"] = rs;
    return j;
}

template <class Rules>
CommandResult solve_with(const Rules& R, const StructureFile& f, const SolveParams& sp, int threads, const RainbowStructure* rs) {
    GameSpec spec;
    spec.variant = parse_variant(sp.game);
    spec.nodes = sp.nodes;
    spec.rounds = sp.rounds;
    spec.budget = sp.budget;
    spec.threads = threads;
    if (spec.nodes > 31) throw std::invalid_argument("at most 31 nodes");
    if (spec.hyper() && spec.nodes > 8) throw std::invalid_argument("hypernetwork games support at most 8 nodes");
    Game<Rules> g(R, spec);
    g.deepen = sp.deepen;
    if constexpr (std::is_same_v<Rules, CaRules>) {
        if (sp.hint == "cones") g.hint = cone_hint(*rs);
    }
    Verdict v = g.solve();
    CommandResult out;
    json cert = nullptr;
    std::string replay = "n/a";
    if (v.certificate) {
        cert = certificate_json(g, *v.certificate);
        std::string why;
        replay = g.replay(*v.certificate, &why) ? "ok" : "failed: " + why;
    }
    json table = json::array();
    for (auto& e : v.table) table.push_back({e.position, e.move, e.response});
    out.report = {{"command", "solve"},
                  {"input", {{"kind", f.kind}, {"digest", detail::structure_digest(f)}, {"generator", f.generator}}},
                  {"game", {{"variant", variant_name(spec.variant)}, {"nodes", spec.nodes}, {"rounds", spec.rounds}, {"budget", spec.budget}, {"hint", sp.hint}, {"deepen", sp.deepen}}},
                  {"verdict", outcome_name(v.outcome)},
                  {"expanded", v.expanded},
                  {"note", v.note},
                  {"certificate_digest", cert.is_null() ? "" : digest(cert.dump())},
                  {"certificate_depth", v.certificate ? v.certificate->depth() : 0},
                  {"certificate_size", v.certificate ? v.certificate->size() : 0},
                  {"replay", replay},
                  {"exists_table_entries", v.table.size()},
                  {"exists_table_truncated", v.tableTruncated},
                  {"exists_table_digest", digest(table.dump())}};
    if (!cert.is_null()) out.report["certificate"] = cert;
    std::ostringstream os;
    os << variant_name(spec.variant) << "(m=" << spec.nodes << ", k=" << spec.rounds << "): " << outcome_name(v.outcome);
    if (!v.note.empty()) os << " (" << v.note << ")";
    os << "\nexpanded positions: " << v.expanded << "\n";
    if (v.certificate) os << "certificate: depth " << v.certificate->depth() << ", " << v.certificate->size() << " nodes, replay " << replay << "\n";
    if (v.outcome == Outcome::ExistsWins) os << "response table: " << v.table.size() << " entries" << (v.tableTruncated ? " (truncated)" : "") << "\n";
    out.text = os.str();
    out.exit = v.outcome == Outcome::ExistsWins ? kExitPass : v.outcome == Outcome::ForallWins ? kExitFail : kExitBudget;
    return out;
}

inline CommandResult cmd_solve(const StructureFile& f, const SolveParams& sp, int threads) {
    if (f.kind == "ra") return solve_with(RaRules(*f.ra), f, sp, threads, nullptr);
    if (f.kind == "ca") {
        std::optional<RainbowStructure> rs;
        if (!sp.hint.empty()) {
            if (sp.hint != "cones") throw std::invalid_argument("unknown hint '" + sp.hint + "' (cones)");
            rs = rainbow_for(f);
        }
        return solve_with(CaRules(*f.ca), f, sp, threads, rs ? &*rs : nullptr);
    }
    throw std::invalid_argument("solve needs an ra or ca structure");
}

// ------------------------------------------------------------ lyndon

inline CommandResult cmd_lyndon(const StructureFile& f, int maxK, int nodes, std::size_t budget, int threads) {
    if (maxK < 1) throw std::invalid_argument("--max-k must be positive");
    std::vector<Verdict> vs;
    if (f.kind == "ra") vs = lyndon_battery(RaRules(*f.ra), maxK, nodes, budget, threads);
    else if (f.kind == "ca") vs = lyndon_battery(CaRules(*f.ca), maxK, nodes, budget, threads);
    else throw std::invalid_argument("lyndon needs an ra or ca structure");
    CommandResult out;
    json rows = json::array();
    std::ostringstream os;
    os << "k  verdict\n";
    bool anyForall = false, anyUnknown = false;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        rows.push_back({{"k", k + 1}, {"verdict", outcome_name(vs[k].outcome)}, {"expanded", vs[k].expanded}});
        os << k + 1 << "  " << outcome_name(vs[k].outcome) << "\n";
        anyForall = anyForall || vs[k].outcome == Outcome::ForallWins;
        anyUnknown = anyUnknown || vs[k].outcome == Outcome::Unknown;
    }
    out.report = {{"command", "lyndon"},
                  {"input", {{"kind", f.kind}, {"digest", detail::structure_digest(f)}, {"generator", f.generator}}},
                  {"nodes", nodes},
                  {"max_k", maxK},
                  {"budget", budget},
                  {"table", rows}};
    out.text = os.str();
    out.exit = anyUnknown ? kExitBudget : anyForall ? kExitFail : kExitPass;
    return out;
}

// ------------------------------------------------------------ ef

inline CommandResult cmd_ef(const std::string& left, const std::string& right, int pebbles, int rounds) {
    Graph A = parse_graph(left), B = parse_graph(right);
    if (pebbles > 12 || rounds > 12) throw std::invalid_argument("at most 12 pebbles and 12 rounds");
    Verdict v = ef_solve(A, B, pebbles, rounds);
    CommandResult out;
    out.report = {{"command", "ef"},
                  {"left", A.name},
                  {"right", B.name},
                  {"pebbles", pebbles},
                  {"rounds", rounds},
                  {"verdict", outcome_name(v.outcome)},
                  {"expanded", v.expanded},
                  {"note", v.note}};
    out.text = "EF(" + A.name + ", " + B.name + ", p=" + std::to_string(pebbles) + ", r=" + std::to_string(rounds) + "): " + outcome_name(v.outcome) +
               (v.note.empty() ? "" : " (" + v.note + ")") + "\n";
    out.exit = v.outcome == Outcome::ExistsWins ? kExitPass : kExitFail;
    return out;
}

// ------------------------------------------------------------ strategy

struct StrategyParams {
    std::string name;  // cones, rho, partition
    int rounds = 3;
    int nodes = 6;
    std::string game = "boldG";
    int pool = 27, greens = 28;
    int index = 1, alpha1 = 4, alpha2 = 5;
};

inline CommandResult cmd_strategy(const StrategyParams& p, const StructureFile* f) {
    CommandResult out;
    std::ostringstream os;
    if (p.name == "cones") {
        if (!f) throw std::invalid_argument("strategy cones needs a rainbow structure file");
        auto rs = rainbow_for(*f);
        CaRules R(rs.at);
        GameSpec spec;
        spec.variant = parse_variant(p.game);
        spec.nodes = p.nodes;
        spec.rounds = p.rounds;
        RainbowGame g(R, spec);
        auto pl = forall_cone_strategy(rs, g);
        std::string replay = "n/a";
        if (pl.certificate) {
            std::string why;
            replay = g.replay(*pl.certificate, &why) ? "ok" : "failed: " + why;
        }
        out.report = {{"command", "strategy"},
                      {"strategy", "cones"},
                      {"input", {{"digest", detail::structure_digest(*f)}, {"generator", f->generator}}},
                      {"game", {{"variant", variant_name(spec.variant)}, {"nodes", spec.nodes}, {"rounds", spec.rounds}}},
                      {"forall_wins", pl.won},
                      {"lines_won", pl.leaves},
                      {"replay", replay},
                      {"certificate_digest", pl.certificate ? digest(certificate_json(g, *pl.certificate).dump()) : ""},
                      {"trace", pl.trace}};
        os << "scripted cones in " << variant_name(spec.variant) << "(m=" << spec.nodes << ", k=" << spec.rounds << "): "
           << (pl.won ? "forall wins" : "no win") << ", replay " << replay << "\n";
        for (auto& t : pl.trace) os << t << "\n";
        out.exit = pl.won ? kExitFail : kExitPass;
    } else if (p.name == "rho") {
        if (p.rounds < 1 || p.rounds > 6) throw std::invalid_argument("rho strategy supports 1..6 rounds");
        if (p.greens < 1 || p.greens > 64 || p.pool < 1) throw std::invalid_argument("bad greens or pool");
        auto sv = exists_rainbow_survives(p.greens, p.pool, p.rounds, true);
        out.report = {{"command", "strategy"},
                      {"strategy", "rho"},
                      {"greens", p.greens},
                      {"pool", p.pool},
                      {"rounds", p.rounds},
                      {"exists_survives", sv.survived},
                      {"lines", sv.lines},
                      {"failure", sv.failure},
                      {"trace_digest", digest(json(sv.trace).dump())}};
        os << "rho strategy, " << p.greens << " tints, red pool " << p.pool << ", k=" << p.rounds << ": "
           << (sv.survived ? "exists survives all " + std::to_string(sv.lines) + " lines" : "fails: " + sv.failure) << "\n";
        out.exit = sv.survived ? kExitPass : kExitFail;
    } else if (p.name == "partition") {
        if (p.rounds < 1 || p.rounds > 3) throw std::invalid_argument("partition strategy supports 1..3 rounds");
        SplitPair sp(p.index, p.alpha1, p.alpha2);
        if (sp.left.size() > 14 || sp.right.size() > 14) throw std::invalid_argument("split algebras too large for the exhaustive check");
        auto sv = exists_ef_partition_survives(sp, p.rounds);
        out.report = {{"command", "strategy"},
                      {"strategy", "partition"},
                      {"index", p.index},
                      {"alpha", {p.alpha1, p.alpha2}},
                      {"rounds", p.rounds},
                      {"exists_survives", sv.survived},
                      {"lines", sv.lines},
                      {"failure", sv.failure}};
        os << "partition strategy on split(" << p.index << "," << p.alpha1 << ") vs split(" << p.index << "," << p.alpha2 << "), k=" << p.rounds
           << ": " << (sv.survived ? "exists survives all " + std::to_string(sv.lines) + " lines" : "fails: " + sv.failure) << "\n";
        out.exit = sv.survived ? kExitPass : kExitFail;
    } else {
        throw std::invalid_argument("unknown strategy '" + p.name + "' (cones, rho, partition)");
    }
    out.text = os.str();
    return out;
}

// ------------------------------------------------------------ embed-check

inline CommandResult cmd_embed_check(const StructureFile& f, int threads) {
    if (f.kind != "split-blur") throw std::invalid_argument("embed-check needs a split-blur file");
    auto r = split_blur(*f.ca, f.red, f.lambda);
    auto rep = theta_embed(r, threads);
    Report iso;
    if (f.lambda == 1) iso = theta_isomorphism(r);
    CommandResult out;
    out.report = {{"command", "embed-check"},
                  {"input", {{"digest", detail::structure_digest(f)}, {"generator", f.generator}}},
                  {"lambda", f.lambda},
                  {"atoms", {{"original", r.original.size()}, {"split", r.split.size()}, {"red", f.red.count()}}},
                  {"embedding", {{"ok", rep.ok()}, {"issue_count", rep.issues.size()}, {"issues", detail::issues_json(rep)}}}};
    if (f.lambda == 1) out.report["isomorphism"] = {{"ok", iso.ok()}, {"issues", detail::issues_json(iso)}};
    out.text = "atoms " + std::to_string(r.original.size()) + " -> " + std::to_string(r.split.size()) + "\n" + detail::report_text("theta embedding", rep) +
               (f.lambda == 1 ? detail::report_text("theta isomorphism", iso) : "");
    out.exit = rep.ok() && iso.ok() ? kExitPass : kExitFail;
    return out;
}

// ------------------------------------------------------------ oracle

inline CommandResult cmd_oracle_represent(const StructureFile& f, int maxBase) {
    if (f.kind != "ra") throw std::invalid_argument("oracle represent needs an ra structure");
    auto r = brute_force_represent(*f.ra, maxBase);
    CommandResult out;
    json cand = nullptr;
    if (r.found) {
        json rows = json::array();
        int b = r.candidate.base;
        for (int x = 0; x < b; ++x) {
            json row = json::array();
            for (int y = 0; y < b; ++y) {
                int a = r.candidate.label[std::size_t(x) * b + y];
                row.push_back(a < 0 ? json(nullptr) : json(f.ra->name(a)));
            }
            rows.push_back(row);
        }
        cand = {{"base", b}, {"labels", rows}};
    }
    out.report = {{"command", "oracle represent"},
                  {"input", {{"digest", detail::structure_digest(f)}, {"generator", f.generator}}},
                  {"max_base", maxBase},
                  {"result", r.found ? "Found" : "Exhausted"},
                  {"tried_up_to", r.triedUpTo},
                  {"search_nodes", r.nodes},
                  {"representation", cand}};
    out.text = r.found ? "Found: representation on " + std::to_string(r.candidate.base) + " points\n"
                       : "Exhausted: no representation on at most " + std::to_string(r.triedUpTo) + " points (not a proof of non-representability)\n";
    out.exit = r.found ? kExitPass : kExitFail;
    return out;
}

inline CommandResult cmd_oracle_census(int maxAtoms) {
    auto all = enumerate_small_ra(maxAtoms);
    CommandResult out;
    json counts = json::object();
    std::vector<int> by(maxAtoms + 1, 0);
    json list = json::array();
    for (auto& s : all) {
        ++by[s.size()];
        list.push_back(structure_json(ra_file(s)));
    }
    std::ostringstream os;
    for (int k = 1; k <= maxAtoms; ++k) {
        counts[std::to_string(k)] = by[k];
        os << k << " atoms: " << by[k] << "\n";
    }
    os << "total: " << all.size() << "\n";
    out.report = {{"command", "oracle census"}, {"max_atoms", maxAtoms}, {"counts", counts}, {"total", all.size()}, {"structures", list}};
    out.text = os.str();
    return out;
}

inline CommandResult cmd_oracle_ramsey(int G, int R) {
    bool ex = ramsey_colouring_exists(G, R);
    CommandResult out;
    out.report = {{"command", "oracle ramsey"}, {"G", G}, {"R", R}, {"triangle_free_colouring", ex}};
    out.text = std::string(ex ? "yes" : "no") + ": " + (ex ? "some " : "no ") + std::to_string(R) + "-colouring of K" + std::to_string(G) +
               " avoids monochromatic triangles\n";
    out.exit = ex ? kExitPass : kExitFail;
    return out;
}

}  // namespace alw
