#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
    using namespace splitdom::cli;

    CLI::App app{"splitdom: exact split/nonsplit domination, independence and irredundance parameters"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Parameter table for each input graph");
    c->add_option("--graph", compute.graph, "Input file, '-' for stdin")->default_val("-");
    c->add_option("--format", compute.format, "g6 or edges")->default_val("g6");
    c->add_option("--params", compute.params, "Comma list of parameter names, or 'all'")->default_val("all");
    c->add_flag("--witnesses", compute.witnesses, "Include an attaining set per parameter");
    c->add_option("--out", compute.out, "json or csv")->default_val("json");
    c->add_flag("--check", compute.check, "Attach claim violations to each record");

    ScanCommandOptions scan;
    scan.jobs = default_jobs();
    auto* s = app.add_subcommand("scan", "Verify claims over a graph6 corpus");
    s->add_option("--corpus", scan.corpus, "graph6 file, '-' for stdin")->default_val("-");
    s->add_option("--claims", scan.claims, "Comma list of claim ids, or 'all'")->default_val("all");
    s->add_option("--jobs", scan.jobs, "Worker threads (default $SPLITDOM_JOBS or 1)");
    s->add_option("--emit-violations", scan.emit_violations, "Write certificates as JSON Lines");
    s->add_option("--relations", scan.relations, "Write pairwise parameter relation tallies as JSON");
    s->add_flag("--timing", scan.timing, "Add runtime statistics to the report");
    bool no_observations = false;
    s->add_flag("--no-observations", no_observations, "Skip the definition-reading probes");

    FamilyOptions family;
    auto* f = app.add_subcommand("family", "Parameter tables or formula verification for a graph family");
    f->add_option("--kind", family.kind, "path|cycle|wheel|complete|bipartite|2tree")->required();
    f->add_option("--n", family.n, "Size or range A..B")->required();
    f->add_option("--m", family.m, "Smaller bipartite side, size or range");
    f->add_flag("--verify", family.verify, "Compare against the closed forms");
    f->add_option("--emit-violations", family.emit_violations, "Write certificates as JSON Lines");

    FamilyOptions gen;
    std::uint64_t seed = 0;
    auto* g = app.add_subcommand("gen", "Write family instances as graph6 lines");
    g->add_option("--kind", gen.kind, "path|cycle|wheel|complete|bipartite|2tree")->required();
    g->add_option("--n", gen.n, "Size or range A..B")->required();
    g->add_option("--m", gen.m, "Smaller bipartite side, size or range");
    auto* seed_opt = g->add_option("--seed", seed, "One random 2-tree per size instead of all labeled ones");
    g->add_option("--out", gen.out, "Output file, '-' for stdout")->default_val("-");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (*c) return cmd_compute(compute, std::cin, std::cout, std::cerr);
    if (*s) {
        scan.observations = !no_observations;
        return cmd_scan(scan, std::cin, std::cout, std::cerr);
    }
    if (*f) return cmd_family(family, std::cout, std::cerr);
    if (*seed_opt) gen.seed = seed;
    return cmd_gen(gen, std::cout, std::cerr);
}
