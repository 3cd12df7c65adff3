// Acceptance suite: one PASS/FAIL line per criterion. All limits are pinned
// below. `--expect-fail 1,2` makes the exit status 0 when exactly the listed
// criteria fail (the outcome itself is still printed as FAIL).

#include "alw/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace alw;

namespace {

// pinned limits (seconds)
constexpr double kLimitAxioms = 120;
constexpr double kLimitRamsey = 60;
constexpr double kLimitRainbow = 1800;
constexpr double kLimitEf = 60;
constexpr double kLimitTheta = 300;
constexpr double kLimitCensus = 300;
constexpr double kLimitStrategies = 600;

// pinned game budgets
constexpr int kMonkNodes = 5, kMonkRounds = 6;
constexpr int kRainbowNodes = 6, kRainbowRounds = 6;
constexpr int kCensusNodes = 5, kCensusRounds = 5, kCensusBase = 6;
constexpr int kRhoGreens = 28, kRhoPool = 27, kRhoRounds = 3;

struct Check {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string first_issue(const Report& r) { return r.issues.empty() ? "" : r.issues[0].rule + ": " + r.issues[0].detail; }

Check axioms(int threads) {
    (void)threads;
    int checked = 0, failed = 0;
    std::string firstBad;
    auto note = [&](const std::string& name, const Report& r) {
        ++checked;
        if (!r.ok()) {
            ++failed;
            if (firstBad.empty()) firstBad = name + " (" + std::to_string(r.issues.size()) + " violations, " + first_issue(r) + ")";
        }
    };
    for (int G = 1; G <= 4; ++G)
        for (int R = 1; R <= 2; ++R) note("monk(" + std::to_string(G) + "," + std::to_string(R) + ")", check_ra_axioms(complex_algebra(monk_ra(G, R))));
    for (int I = 1; I <= 2; ++I)
        for (int a = 1; a <= 2; ++a) note("split(" + std::to_string(I) + "," + std::to_string(a) + ")", check_ra_axioms(complex_algebra(split_ra(I, a))));
    auto rs = rainbow_finite(3);
    note("rainbow(3) CA", check_ca_axioms(complex_algebra(rs.at)));
    std::ostringstream os;
    os << checked << " algebras, " << failed << " with violations";
    if (!firstBad.empty()) os << "; first: " << firstBad;
    return {failed == 0, os.str()};
}

Check ramsey_skeleton(int threads) {
    std::ostringstream os;
    bool pass = true;
    for (auto [G, R] : {std::pair{3, 1}, std::pair{2, 1}}) {
        RaAtomStructure s = monk_ra(G, R);
        RaRules rules(s);
        GameSpec spec;
        spec.nodes = kMonkNodes;
        spec.rounds = kMonkRounds;
        spec.threads = threads;
        Game<RaRules> g(rules, spec);
        Verdict v = g.solve();
        Outcome want = ramsey_colouring_exists(G, R) ? Outcome::ExistsWins : Outcome::ForallWins;
        Outcome spelled = G == 3 ? Outcome::ForallWins : Outcome::ExistsWins;
        bool ok = v.outcome == want && v.outcome == spelled;
        if (v.certificate) {
            std::string why;
            ok = ok && g.replay(*v.certificate, &why);
        }
        pass = pass && ok;
        os << "monk(" << G << "," << R << "): " << outcome_name(v.outcome) << " (want " << outcome_name(want) << ") ";
    }
    return {pass, os.str()};
}

Check rainbow_win(int threads) {
    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    GameSpec spec;
    spec.variant = Variant::BoldG;
    spec.nodes = kRainbowNodes;
    spec.rounds = kRainbowRounds;
    spec.threads = threads;
    RainbowGame g(R, spec);
    g.hint = cone_hint(rs);
    g.deepen = false;
    Verdict v = g.solve();
    std::string why = "no certificate";
    bool replay = v.certificate && g.replay(*v.certificate, &why);
    std::ostringstream os;
    os << "boldG(m=" << spec.nodes << ",k=" << spec.rounds << "): " << outcome_name(v.outcome) << ", " << v.expanded << " positions";
    if (v.certificate) os << ", certificate depth " << v.certificate->depth();
    os << ", replay " << (replay ? "ok" : why);
    return {v.outcome == Outcome::ForallWins && replay, os.str()};
}

Check ef_law(int) {
    int bad = 0, cases = 0;
    std::string first;
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= 8; ++p)
            for (int r = 0; r <= 8; ++r) {
                ++cases;
                bool fw = ef_solve(complete_graph(n + 1), complete_graph(n), p, r).outcome == Outcome::ForallWins;
                if (fw != (p >= n + 1 && r >= n + 1)) {
                    if (!bad) first = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
                    ++bad;
                }
            }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches" + (first.empty() ? "" : " (first " + first + ")")};
}

Check theta(int threads) {
    auto rs = rainbow_finite(3);
    std::ostringstream os;
    bool pass = true;
    for (int lambda = 1; lambda <= 3; ++lambda) {
        auto r = split_blur(rs.at, rs.red_atoms(), lambda);
        auto rep = theta_embed(r, threads);
        pass = pass && rep.ok() && !rep.unknown;
        os << "lambda=" << lambda << ": " << rep.issues.size() << " counterexamples";
        if (lambda == 1) {
            auto iso = theta_isomorphism(r);
            pass = pass && iso.ok();
            os << ", isomorphism " << (iso.ok() ? "ok" : first_issue(iso));
        }
        os << "; ";
    }
    return {pass, os.str()};
}

Check census(int threads) {
    auto all = enumerate_small_ra(3);
    int found = 0, forall = 0, contradictions = 0, unknown = 0;
    for (auto& s : all) {
        auto rep = brute_force_represent(s, kCensusBase);
        RaRules R(s);
        GameSpec spec;
        spec.nodes = kCensusNodes;
        spec.rounds = kCensusRounds;
        spec.threads = threads;
        Verdict v = Game<RaRules>(R, spec).solve();
        found += rep.found;
        forall += v.outcome == Outcome::ForallWins;
        unknown += v.outcome == Outcome::Unknown;
        if (rep.found && v.outcome == Outcome::ForallWins) ++contradictions;
    }
    std::ostringstream os;
    os << all.size() << " structures, " << found << " Found, " << forall << " ForallWins, " << unknown << " Unknown, " << contradictions << " contradictions";
    return {contradictions == 0 && unknown == 0, os.str()};
}

Check strategies(int threads) {
    std::ostringstream os;
    auto a = exists_rainbow_survives(kRhoGreens, kRhoPool, kRhoRounds, true);
    auto b = exists_rainbow_survives(kRhoGreens, kRhoPool, kRhoRounds, true);
    bool rhoOk = a.survived && a.trace == b.trace;
    os << "rho pool " << kRhoPool << " k=" << kRhoRounds << ": " << (a.survived ? "survives " + std::to_string(a.lines) + " lines" : a.failure)
       << (a.trace == b.trace ? "" : " (trace differs between runs)");

    auto rs = rainbow_finite(3);
    CaRules R(rs.at);
    GameSpec spec;
    spec.variant = Variant::BoldG;
    spec.nodes = kRainbowNodes;
    spec.rounds = kRainbowRounds;
    spec.threads = threads;
    RainbowGame g(R, spec);
    auto p1 = forall_cone_strategy(rs, g);
    auto p2 = forall_cone_strategy(rs, g);
    std::string why = "no certificate";
    bool replay = p1.certificate && g.replay(*p1.certificate, &why);
    bool coneOk = p1.won && replay && p1.trace == p2.trace;
    os << "; cones: " << (p1.won ? "forall wins" : "no win") << ", " << p1.leaves << " lines, replay " << (replay ? "ok" : why)
       << (p1.trace == p2.trace ? "" : " (trace differs between runs)");
    return {rhoOk && coneOk, os.str()};
}

// Every command's structured report, rendered to one string.
std::string all_reports(int threads) {
    std::string out;
    auto add = [&](const CommandResult& r) { out += r.report.dump() + "\n"; };
    GenParams gp;
    gp.family = "monk";
    gp.greens = 3;
    StructureFile monk31 = generate(gp);
    out += structure_text(monk31);
    gp.greens = 2;
    StructureFile monk21 = generate(gp);
    gp.greens = 1;
    StructureFile monk11 = generate(gp);
    gp.family = "rainbow";
    StructureFile rain = generate(gp);
    out += structure_text(rain);
    gp.family = "split-blur";
    gp.lambda = 2;
    StructureFile blur = generate(gp);
    gp.family = "split";
    out += structure_text(generate(gp));

    add(cmd_check(monk31, "ra", threads));
    add(cmd_check(rain, "ca", threads));
    add(cmd_check(blur, "ca", threads));
    SolveParams sp;
    sp.nodes = kMonkNodes;
    sp.rounds = kMonkRounds;
    add(cmd_solve(monk31, sp, threads));
    add(cmd_solve(monk21, sp, threads));
    sp.game = "boldG";
    sp.nodes = kRainbowNodes;
    sp.rounds = kRainbowRounds;
    sp.hint = "cones";
    sp.deepen = false;
    add(cmd_solve(rain, sp, threads));
    add(cmd_lyndon(monk11, 4, 4, 2'000'000, threads));
    add(cmd_ef("K4", "K3", 4, 4));
    StrategyParams st;
    st.name = "cones";
    st.rounds = kRainbowRounds;
    add(cmd_strategy(st, &rain));
    st.name = "rho";
    st.rounds = kRhoRounds;
    add(cmd_strategy(st, nullptr));
    st.name = "partition";
    st.rounds = 2;
    add(cmd_strategy(st, nullptr));
    add(cmd_embed_check(blur, threads));
    add(cmd_oracle_represent(monk11, 6));
    add(cmd_oracle_census(3));
    add(cmd_oracle_ramsey(5, 2));
    return out;
}

Check determinism(int) {
    std::string a = all_reports(1), b = all_reports(1), c = all_reports(4);
    std::ostringstream os;
    os << "reports " << digest(a) << " / " << digest(b) << " (threads 1) / " << digest(c) << " (threads 4), " << a.size() << " bytes";
    return {a == b && a == c, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    std::vector<int> expectFail, only;
    int threads = 4;
    app.add_option("--expect-fail", expectFail, "criteria known to fail")->delimiter(',');
    app.add_option("--only", only, "run just these criteria")->delimiter(',');
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Check(int)> run;
    };
    std::vector<Criterion> cs = {
        {1, "axiom suite", kLimitAxioms, axioms},
        {2, "monk colour counting", kLimitRamsey, ramsey_skeleton},
        {3, "rainbow forall win", kLimitRainbow, rainbow_win},
        {4, "pebble game law", kLimitEf, ef_law},
        {5, "split-blur embedding", kLimitTheta, theta},
        {6, "census cross-check", kLimitCensus, census},
        {7, "scripted strategies", kLimitStrategies, strategies},
        {8, "determinism", 0, determinism},
    };
    std::set<int> failed;
    for (auto& c : cs) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = Clock::now();
        Check o;
        try {
            o = c.run(threads);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double t = seconds_since(t0);
        bool inTime = c.limit <= 0 || t <= c.limit;
        bool pass = o.pass && inTime;
        if (!pass) failed.insert(c.id);
        char timing[64];
        if (c.limit > 0) std::snprintf(timing, sizeof timing, "%.1fs / limit %.0fs", t, c.limit);
        else std::snprintf(timing, sizeof timing, "%.1fs", t);
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << ": " << o.detail << (inTime ? "" : " [over time]") << " [" << timing << "]"
                  << std::endl;
    }
    std::set<int> expected(expectFail.begin(), expectFail.end());
    if (!only.empty()) {
        std::set<int> sel(only.begin(), only.end());
        std::erase_if(expected, [&](int id) { return !sel.count(id); });
    }
    if (failed == expected) {
        if (!expected.empty()) std::cout << "failures match --expect-fail\n";
        return 0;
    }
    std::cout << "unexpected outcome: " << failed.size() << " failed, " << expected.size() << " expected to fail\n";
    return 1;
}
