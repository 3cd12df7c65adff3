// alw: command-line front end. Exit codes: 0 pass / ExistsWins, 1 fail /
// ForallWins, 2 budget exhausted, 3 invalid input.

#include "alw/commands.hpp"
#include "alw/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace alw;

namespace {

void emit(const CommandResult& r, bool asJson) {
    if (asJson) std::cout << r.report.dump(1) << "\n";
    else std::cout << r.text;
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument(path + ": cannot write");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alw: algebras of relations, their games and strategies"};
    app.require_subcommand(1);
    bool asJson = false;
    int threads = default_threads();
    app.add_flag("--json", asJson, "machine-readable report on stdout");
    app.add_option("--threads", threads, "worker threads (default $ALW_THREADS or 1)")->check(CLI::Range(1, 256));

    // gen
    GenParams gp;
    std::string genOut;
    auto* gen = app.add_subcommand("gen", "generate a structure file");
    gen->add_option("family", gp.family, "monk, split, rainbow or split-blur")->required();
    gen->add_option("--greens", gp.greens, "monk: green atoms")->check(CLI::Range(1, 8));
    gen->add_option("--reds", gp.reds, "monk: red atoms")->check(CLI::Range(1, 8));
    gen->add_option("--index", gp.index, "split: index set size")->check(CLI::Range(1, 4));
    gen->add_option("--alpha", gp.alpha, "split: copies of the split atom")->check(CLI::Range(1, 8));
    gen->add_option("-n,--dim", gp.n, "rainbow: dimension")->check(CLI::Range(3, 4));
    gen->add_option("--tints", gp.tints, "rainbow: number of g0 tints (default n+1)")->check(CLI::Range(1, 12));
    gen->add_option("--lambda", gp.lambda, "split-blur: copies of each red atom")->check(CLI::Range(1, 6));
    gen->add_option("-o,--output", genOut, "output file (default stdout)");

    // check
    std::string file = "-", axioms;
    auto* check = app.add_subcommand("check", "validate a structure and run the axiom battery");
    check->add_option("file", file, "structure file, - for stdin");
    check->add_option("--axioms", axioms, "ra or ca")->check(CLI::IsMember({"ra", "ca"}));

    // solve
    SolveParams sp;
    std::string certOut;
    bool noDeepen = false;
    auto* solve = app.add_subcommand("solve", "decide a finite atomic game");
    solve->add_option("file", file, "structure file, - for stdin");
    solve->add_option("--game", sp.game, "G, boldG, H or boldH")->check(CLI::IsMember({"G", "boldG", "H", "boldH"}));
    solve->add_option("--nodes", sp.nodes, "node budget m")->required()->check(CLI::Range(2, 31));
    solve->add_option("--rounds", sp.rounds, "rounds k")->required()->check(CLI::Range(0, 64));
    solve->add_option("--budget", sp.budget, "position expansion budget");
    solve->add_option("--hint", sp.hint, "move-ordering hint for forall (cones)")->check(CLI::IsMember({"cones"}));
    solve->add_flag("--no-deepen", noDeepen, "skip iterative deepening on rounds");
    solve->add_option("--certificate", certOut, "write the forall certificate (JSON) here");

    // lyndon
    int maxK = 4, lyNodes = 4;
    std::size_t lyBudget = 2'000'000;
    auto* lyndon = app.add_subcommand("lyndon", "G(m,k) verdict for k = 1..K");
    lyndon->add_option("file", file, "structure file, - for stdin");
    lyndon->add_option("--max-k", maxK, "largest k")->required()->check(CLI::Range(1, 32));
    lyndon->add_option("--nodes", lyNodes, "node budget m")->required()->check(CLI::Range(2, 31));
    lyndon->add_option("--budget", lyBudget, "expansion budget per k");

    // ef
    std::string left, right;
    int pebbles = 0, efRounds = 0;
    auto* ef = app.add_subcommand("ef", "pebble game between two complete graphs");
    ef->add_option("--left", left, "e.g. K4")->required();
    ef->add_option("--right", right, "e.g. K3")->required();
    ef->add_option("--pebbles", pebbles, "pebble pairs")->required()->check(CLI::Range(0, 12));
    ef->add_option("--rounds", efRounds, "rounds")->required()->check(CLI::Range(0, 12));

    // strategy
    StrategyParams stp;
    std::string stFile;
    auto* strategy = app.add_subcommand("strategy", "replay a scripted strategy against every opponent line");
    strategy->add_option("name", stp.name, "cones, rho or partition")->required()->check(CLI::IsMember({"cones", "rho", "partition"}));
    strategy->add_option("file", stFile, "rainbow structure file (cones)");
    strategy->add_option("--rounds", stp.rounds, "rounds k")->required();
    strategy->add_option("--nodes", stp.nodes, "cones: node budget")->check(CLI::Range(3, 31));
    strategy->add_option("--game", stp.game, "cones: G or boldG")->check(CLI::IsMember({"G", "boldG"}));
    strategy->add_option("--pool", stp.pool, "rho: red pool size");
    strategy->add_option("--greens", stp.greens, "rho: green tints on the board");
    strategy->add_option("--index", stp.index, "partition: index set size")->check(CLI::Range(1, 2));
    strategy->add_option("--alpha", stp.alpha1, "partition: copies on the left")->check(CLI::Range(1, 8));
    strategy->add_option("--alpha-right", stp.alpha2, "partition: copies on the right")->check(CLI::Range(1, 8));

    // embed-check
    auto* embed = app.add_subcommand("embed-check", "verify the split-blur embedding");
    embed->add_option("file", file, "split-blur file, - for stdin");

    // oracle
    int maxBase = 6, maxAtoms = 3, rG = 0, rR = 0;
    auto* oracle = app.add_subcommand("oracle", "independent searches");
    oracle->require_subcommand(1);
    auto* represent = oracle->add_subcommand("represent", "brute-force a small representation");
    represent->add_option("file", file, "ra structure file, - for stdin");
    represent->add_option("--max-base", maxBase, "largest base set")->check(CLI::Range(1, 10));
    auto* census = oracle->add_subcommand("census", "enumerate small symmetric RA atom structures");
    census->add_option("--max-atoms", maxAtoms, "atom bound")->check(CLI::Range(1, 4));
    auto* ramsey = oracle->add_subcommand("ramsey", "does an R-colouring of K_G avoid monochromatic triangles");
    ramsey->add_option("G", rG, "vertices")->required()->check(CLI::Range(1, 16));
    ramsey->add_option("R", rR, "colours")->required()->check(CLI::Range(1, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        CommandResult r;
        if (*gen) {
            StructureFile f = generate(gp);
            write_file(genOut, structure_text(f));
            return kExitPass;
        } else if (*check) {
            r = cmd_check(load_structure(file), axioms, threads);
        } else if (*solve) {
            // a hint already orders forall's moves; deepening would re-search every shallower game
            sp.deepen = !noDeepen && sp.hint.empty();
            r = cmd_solve(load_structure(file), sp, threads);
            if (!certOut.empty()) {
                if (!r.report.contains("certificate")) std::cerr << "no certificate (verdict " << r.report["verdict"].get<std::string>() << ")\n";
                else write_file(certOut, r.report["certificate"].dump(1) + "\n");
            }
            // the full tree goes to --certificate; the report keeps its digest
            r.report.erase("certificate");
        } else if (*lyndon) {
            r = cmd_lyndon(load_structure(file), maxK, lyNodes, lyBudget, threads);
        } else if (*ef) {
            r = cmd_ef(left, right, pebbles, efRounds);
        } else if (*strategy) {
            if (stp.name == "cones") {
                if (stFile.empty()) throw std::invalid_argument("strategy cones needs a structure file");
                StructureFile f = load_structure(stFile);
                r = cmd_strategy(stp, &f);
            } else {
                r = cmd_strategy(stp, nullptr);
            }
        } else if (*embed) {
            r = cmd_embed_check(load_structure(file), threads);
        } else if (*represent) {
            r = cmd_oracle_represent(load_structure(file), maxBase);
        } else if (*census) {
            r = cmd_oracle_census(maxAtoms);
        } else if (*ramsey) {
            r = cmd_oracle_ramsey(rG, rR);
        }
        emit(r, asJson);
        return r.exit;
    } catch (const LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
}
